#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilgraph/elemset.hpp"
#include "nilgraph/perm.hpp"

namespace nilgraph {

// Largest order for which a dense multiplication table is kept (desk scale;
// PSL(2,13) of order 1092 is the biggest builtin).
inline constexpr int kOrderCap = 2000;
// Default bound on permutation-closure enumeration.
inline constexpr int kDefaultEnumCap = 100000;

// A concrete finite group with a dense n x n multiplication table. Elements
// are indices 0..n-1. Immutable after construction; all queries are pure.
class FiniteGroup {
 public:
  static FiniteGroup from_cayley_table(const std::vector<std::vector<int>>& rows,
                                       std::vector<std::string> labels = {},
                                       std::string source = "cayley-file");
  static FiniteGroup from_permutation_generators(const std::vector<Perm>& gens,
                                                 std::string source = "permutation",
                                                 int cap = kDefaultEnumCap);
  // Constructs directly from permutation images of every element (deduped,
  // identity required); used by builtins that enumerate all elements up front.
  static FiniteGroup from_permutation_elements(std::vector<Perm> elems,
                                               std::string source);

  int order() const { return n_; }
  int identity() const { return e_; }
  int mul(int a, int b) const { return mul_[static_cast<size_t>(a) * n_ + b]; }
  int inv(int a) const { return inv_[a]; }
  // t^-1 * x * t
  int conjugate(int x, int t) const { return mul(mul(inv(t), x), t); }
  // a^-1 b^-1 a b
  int commutator(int a, int b) const { return mul(inv(mul(b, a)), mul(a, b)); }
  int power(int x, long long k) const;
  int element_order(int x) const { return order_of_[x]; }
  std::vector<int> pi_of(int x) const;       // primes dividing |x|
  std::vector<int> prime_divisors() const;   // primes dividing |G|

  const std::string& label(int x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& source() const { return source_; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  // Permutation images when built from permutations; empty otherwise.
  const std::vector<Perm>& perm_images() const { return perm_images_; }

  // Exhaustive group-axiom audit: identity, two-sided inverses, Latin rows
  // and columns, full O(n^3) associativity. Throws NotAGroup on violation.
  void validate() const;

  ElementSet full_set() const { return ElementSet::full(n_); }
  ElementSet singleton(int x) const;
  ElementSet trivial_subgroup() const { return singleton(e_); }

 private:
  FiniteGroup() = default;
  // Derives identity, inverses and element orders from mul_; performs the
  // cheap (non-associativity) structural checks.
  void finalize(bool check_latin);

  int n_ = 0;
  int e_ = 0;
  std::vector<uint16_t> mul_;
  std::vector<int> inv_;
  std::vector<int> order_of_;
  std::vector<std::string> labels_;
  std::string source_;
  std::string name_ = "G";
  std::vector<Perm> perm_images_;
};

// ---- subgroup machinery -------------------------------------------------

// Least subgroup containing S (worklist closure; empty S gives {identity}).
ElementSet closure(const FiniteGroup& G, const ElementSet& S);
ElementSet closure_of(const FiniteGroup& G, const std::vector<int>& xs);
bool is_subgroup(const FiniteGroup& G, const ElementSet& S);

ElementSet centralizer(const FiniteGroup& G, int x);
// Elements of H commuting with x.
ElementSet centralizer_in(const FiniteGroup& G, const ElementSet& H, int x);
ElementSet center(const FiniteGroup& G);
bool is_abelian(const FiniteGroup& G, const ElementSet& H);

// Normal closure of x (resp. of set S) inside the subgroup K (defaults to G).
ElementSet normal_closure(const FiniteGroup& G, int x);
ElementSet normal_closure_in(const FiniteGroup& G, const ElementSet& K,
                             const ElementSet& S);
bool is_normal_in(const FiniteGroup& G, const ElementSet& K, const ElementSet& N);

// Greedy small generating set of subgroup H (deterministic: lowest new index).
std::vector<int> small_generating_set(const FiniteGroup& G, const ElementSet& H);

// Re-indexes subgroup H as a standalone group; to_parent maps the new
// indices back to G, from_parent the reverse (-1 outside H).
struct SubgroupView {
  FiniteGroup group;
  std::vector<int> to_parent;
  std::vector<int> from_parent;
};
SubgroupView subgroup_as_group(const FiniteGroup& G, const ElementSet& H);

// Conjugacy classes with translation witnesses: for every element y,
// conjugate(reps[class_of[y]], witness[y]) == y.
struct ConjugacyClasses {
  std::vector<int> class_of;
  std::vector<int> reps;
  std::vector<int> witness;
};
ConjugacyClasses conjugacy_classes(const FiniteGroup& G);

// Cyclic-subgroup index: id_of[x] identifies <x>; sets[id] is the subgroup.
struct CyclicIndex {
  std::vector<int> id_of;
  std::vector<ElementSet> sets;
};
CyclicIndex cyclic_index(const FiniteGroup& G);

std::vector<int> prime_factors(int n);  // distinct primes, ascending

}  // namespace nilgraph
