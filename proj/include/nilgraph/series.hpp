#pragma once

#include <mutex>
#include <unordered_map>
#include <vector>

#include "nilgraph/elemset.hpp"
#include "nilgraph/group.hpp"

namespace nilgraph {

struct SeriesRecord {
  enum class Kind { lower_central, upper_central };
  Kind kind;
  // Terms up to and including the first repeated one, so
  // terms[stabilized_at] == terms.back() and stabilized_at + 2 == terms.size()
  // unless the series is constant from the start.
  std::vector<ElementSet> terms;
  int stabilized_at = 0;
};

struct NilpotencyResult {
  bool nilpotent = false;
  int nilpotency_class = -1;  // defined only when nilpotent
};

// gamma_1 = H, gamma_{i+1} = <[t, h] : t in gens(gamma_i), h in H>.
SeriesRecord lower_central_series(const FiniteGroup& G, const ElementSet& H);
NilpotencyResult is_nilpotent(const FiniteGroup& G, const ElementSet& H);
NilpotencyResult is_nilpotent(const FiniteGroup& G);

// Z_0 = {e}, Z_{i+1} = {x : [x,g] in Z_i for all g in G}.
SeriesRecord upper_central_series(const FiniteGroup& G);
ElementSet hypercenter(const FiniteGroup& G);

// E_G(x) = {g : [g, x, x, ..., x] = 1 eventually}; iteration stops at the
// first repeated value (at most |G| steps).
ElementSet engel_set(const FiniteGroup& G, int x);

// R(G) = {x : for every g the iteration [x, g, g, ...] reaches 1}.
ElementSet right_engel_set(const FiniteGroup& G);

// Whether A is subnormal in K, by the descending chain K_0 = K,
// K_{i+1} = normal closure of A in K_i.
bool is_subnormal(const FiniteGroup& G, const ElementSet& A, const ElementSet& K);

// S_G(x) = {g : <x> is subnormal in <x,g>}.
ElementSet subnormalizer(const FiniteGroup& G, int x);

// Shared memo tables for the two-generated-subgroup questions an analysis
// asks over and over. Keys are cyclic-subgroup ids: <x,y> and the verdicts
// below depend only on (<x>, <y>). Thread-safe; values are pure functions
// of the key, so racing recomputation is harmless.
class PairContext {
 public:
  explicit PairContext(const FiniteGroup& G);

  const FiniteGroup& group() const { return G_; }
  int cyclic_id(int x) const { return cyclic_.id_of[x]; }
  const ElementSet& cyclic_set_of(int x) const { return cyclic_.sets[cyclic_.id_of[x]]; }

  ElementSet pair_closure(int x, int y);
  bool pair_nilpotent(int x, int y);
  bool pair_subnormal(int x, int y);  // <x> subnormal in <x,y>
  NilpotencyResult nilpotency(const ElementSet& subgroup);

 private:
  const FiniteGroup& G_;
  CyclicIndex cyclic_;
  std::mutex mu_;
  std::unordered_map<uint64_t, ElementSet> closure_by_pair_;
  std::unordered_map<uint64_t, bool> nilpotent_by_pair_;
  std::unordered_map<uint64_t, bool> subnormal_by_pair_;
  std::unordered_map<ElementSet, NilpotencyResult, ElementSet::Hasher> nilpotency_by_subgroup_;
};

}  // namespace nilgraph
