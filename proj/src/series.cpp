#include "nilgraph/series.hpp"

#include <algorithm>

#include "nilgraph/errors.hpp"

namespace nilgraph {

SeriesRecord lower_central_series(const FiniteGroup& G, const ElementSet& H) {
  SeriesRecord rec;
  rec.kind = SeriesRecord::Kind::lower_central;
  rec.terms.push_back(H);
  const std::vector<int> whole = H.elements();
  while (true) {
    const ElementSet& cur = rec.terms.back();
    std::vector<int> gens = small_generating_set(G, cur);
    std::vector<int> comms;
    comms.reserve(gens.size() * whole.size());
    for (int t : gens)
      for (int h : whole) comms.push_back(G.commutator(t, h));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    ElementSet next = closure_of(G, comms);
    bool stable = next == cur;
    rec.terms.push_back(std::move(next));
    if (stable) {
      rec.stabilized_at = static_cast<int>(rec.terms.size()) - 2;
      break;
    }
  }
  return rec;
}

static NilpotencyResult nilpotency_from_lcs(const FiniteGroup& G, const ElementSet& H) {
  SeriesRecord lcs = lower_central_series(G, H);
  NilpotencyResult res;
  const ElementSet& stable = lcs.terms[lcs.stabilized_at];
  res.nilpotent = stable.count() == 1 && stable.test(G.identity());
  if (res.nilpotent) res.nilpotency_class = lcs.stabilized_at;
  return res;
}

NilpotencyResult is_nilpotent(const FiniteGroup& G, const ElementSet& H) {
  if (!is_subgroup(G, H)) throw NotASubgroup("is_nilpotent: not a subgroup");
  return nilpotency_from_lcs(G, H);
}

NilpotencyResult is_nilpotent(const FiniteGroup& G) {
  return nilpotency_from_lcs(G, G.full_set());
}

SeriesRecord upper_central_series(const FiniteGroup& G) {
  SeriesRecord rec;
  rec.kind = SeriesRecord::Kind::upper_central;
  rec.terms.push_back(G.trivial_subgroup());
  while (true) {
    const ElementSet& cur = rec.terms.back();
    ElementSet next(G.order());
    for (int x = 0; x < G.order(); ++x) {
      bool in = true;
      for (int g = 0; g < G.order() && in; ++g)
        in = cur.test(G.commutator(x, g));
      if (in) next.set(x);
    }
    bool stable = next == cur;
    rec.terms.push_back(std::move(next));
    if (stable) {
      rec.stabilized_at = static_cast<int>(rec.terms.size()) - 2;
      break;
    }
  }
  return rec;
}

ElementSet hypercenter(const FiniteGroup& G) {
  SeriesRecord ucs = upper_central_series(G);
  return ucs.terms[ucs.stabilized_at];
}

// Left-normed iteration c -> [c, x], stopping at identity (success) or at
// the first repeated value (failure). Scratch buffers avoid reallocating a
// visited set per call.
namespace {
struct EngelScratch {
  std::vector<char> visited;
  std::vector<int> touched;
  explicit EngelScratch(int n) : visited(n, 0) { touched.reserve(64); }
  bool reaches_identity(const FiniteGroup& G, int start, int x) {
    int c = start;
    bool ok = false;
    for (int step = 0; step <= G.order(); ++step) {
      if (c == G.identity()) {
        ok = true;
        break;
      }
      if (visited[c]) break;
      visited[c] = 1;
      touched.push_back(c);
      c = G.commutator(c, x);
    }
    for (int v : touched) visited[v] = 0;
    touched.clear();
    return ok;
  }
};
}  // namespace

ElementSet engel_set(const FiniteGroup& G, int x) {
  ElementSet E(G.order());
  EngelScratch scratch(G.order());
  for (int g = 0; g < G.order(); ++g)
    if (scratch.reaches_identity(G, g, x)) E.set(g);
  return E;
}

ElementSet right_engel_set(const FiniteGroup& G) {
  ElementSet R(G.order());
  EngelScratch scratch(G.order());
  for (int x = 0; x < G.order(); ++x) {
    bool in = true;
    for (int g = 0; g < G.order() && in; ++g) {
      // c_0 = x, c_{k+1} = [c_k, g]
      if (G.commutator(x, g) == G.identity()) continue;  // commuting fast path
      in = scratch.reaches_identity(G, x, g);
    }
    if (in) R.set(x);
  }
  return R;
}

bool is_subnormal(const FiniteGroup& G, const ElementSet& A, const ElementSet& K) {
  if (!A.is_subset_of(K)) throw NotASubgroup("is_subnormal: A not inside K");
  ElementSet cur = K;
  while (true) {
    if (cur == A) return true;
    ElementSet next = normal_closure_in(G, cur, A);
    if (next == cur) return false;  // stabilized strictly above A
    cur = std::move(next);
  }
}

ElementSet subnormalizer(const FiniteGroup& G, int x) {
  PairContext ctx(G);
  ElementSet S(G.order());
  for (int g = 0; g < G.order(); ++g)
    if (ctx.pair_subnormal(x, g)) S.set(g);
  return S;
}

// ---- PairContext ---------------------------------------------------------

PairContext::PairContext(const FiniteGroup& G) : G_(G), cyclic_(cyclic_index(G)) {}

static uint64_t unordered_key(int a, int b) {
  if (a > b) std::swap(a, b);
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

static uint64_t ordered_key(int a, int b) {
  return (static_cast<uint64_t>(a) << 32) | static_cast<uint32_t>(b);
}

ElementSet PairContext::pair_closure(int x, int y) {
  const uint64_t key = unordered_key(cyclic_id(x), cyclic_id(y));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = closure_by_pair_.find(key);
    if (it != closure_by_pair_.end()) return it->second;
  }
  ElementSet K = closure_of(G_, {x, y});
  std::lock_guard<std::mutex> lk(mu_);
  return closure_by_pair_.emplace(key, std::move(K)).first->second;
}

NilpotencyResult PairContext::nilpotency(const ElementSet& subgroup) {
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = nilpotency_by_subgroup_.find(subgroup);
    if (it != nilpotency_by_subgroup_.end()) return it->second;
  }
  SeriesRecord lcs = lower_central_series(G_, subgroup);
  NilpotencyResult res;
  const ElementSet& stable = lcs.terms[lcs.stabilized_at];
  res.nilpotent = stable.count() == 1;
  if (res.nilpotent) res.nilpotency_class = lcs.stabilized_at;
  std::lock_guard<std::mutex> lk(mu_);
  return nilpotency_by_subgroup_.emplace(subgroup, res).first->second;
}

bool PairContext::pair_nilpotent(int x, int y) {
  if (x == y || x == G_.identity() || y == G_.identity()) return true;
  if (cyclic_id(x) == cyclic_id(y)) return true;  // <x,y> cyclic
  if (G_.mul(x, y) == G_.mul(y, x)) return true;  // <x,y> abelian
  const uint64_t key = unordered_key(cyclic_id(x), cyclic_id(y));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = nilpotent_by_pair_.find(key);
    if (it != nilpotent_by_pair_.end()) return it->second;
  }
  bool verdict = nilpotency(pair_closure(x, y)).nilpotent;
  std::lock_guard<std::mutex> lk(mu_);
  return nilpotent_by_pair_.emplace(key, verdict).first->second;
}

bool PairContext::pair_subnormal(int x, int y) {
  if (y == G_.identity() || x == G_.identity()) return true;
  const uint64_t key = ordered_key(cyclic_id(x), cyclic_id(y));
  {
    std::lock_guard<std::mutex> lk(mu_);
    auto it = subnormal_by_pair_.find(key);
    if (it != subnormal_by_pair_.end()) return it->second;
  }
  bool verdict = is_subnormal(G_, cyclic_set_of(x), pair_closure(x, y));
  std::lock_guard<std::mutex> lk(mu_);
  return subnormal_by_pair_.emplace(key, verdict).first->second;
}

}  // namespace nilgraph
