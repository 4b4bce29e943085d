#include "nilgraph/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <unordered_map>
#include <unordered_set>

#include "nilgraph/errors.hpp"

namespace nilgraph {

std::vector<int> prime_factors(int n) {
  std::vector<int> ps;
  for (int p = 2; static_cast<long long>(p) * p <= n; ++p) {
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  }
  if (n > 1) ps.push_back(n);
  return ps;
}

void FiniteGroup::finalize(bool check_latin) {
  if (n_ <= 0) throw MalformedTable("empty group table");
  if (n_ > kOrderCap)
    throw CapExceeded("group order " + std::to_string(n_) + " exceeds table cap " +
                      std::to_string(kOrderCap));
  if (check_latin) {
    std::vector<char> seen(n_);
    for (int a = 0; a < n_; ++a) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int b = 0; b < n_; ++b) {
        int v = mul(a, b);
        if (seen[v]) throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
        seen[v] = 1;
      }
    }
    for (int b = 0; b < n_; ++b) {
      std::fill(seen.begin(), seen.end(), 0);
      for (int a = 0; a < n_; ++a) {
        int v = mul(a, b);
        if (seen[v]) throw NotAGroup("column " + std::to_string(b) + " is not a permutation");
        seen[v] = 1;
      }
    }
  }
  e_ = -1;
  for (int c = 0; c < n_; ++c) {
    bool ok = true;
    for (int x = 0; x < n_ && ok; ++x)
      ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) {
      e_ = c;
      break;
    }
  }
  if (e_ < 0) throw NotAGroup("no two-sided identity");
  inv_.assign(n_, -1);
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      if (mul(a, b) == e_ && mul(b, a) == e_) {
        inv_[a] = b;
        break;
      }
    }
    if (inv_[a] < 0) throw NotAGroup("element " + std::to_string(a) + " has no inverse");
  }
  order_of_.assign(n_, 0);
  for (int a = 0; a < n_; ++a) {
    int k = 1, v = a;
    while (v != e_) {
      v = mul(v, a);
      ++k;
      if (k > n_) throw NotAGroup("element " + std::to_string(a) + " has unbounded order");
    }
    order_of_[a] = k;
  }
  if (labels_.empty()) {
    labels_.resize(n_);
    for (int a = 0; a < n_; ++a) labels_[a] = "g" + std::to_string(a);
  }
  if (static_cast<int>(labels_.size()) != n_)
    throw MalformedTable("label count does not match order");
  std::unordered_set<std::string> uniq(labels_.begin(), labels_.end());
  if (static_cast<int>(uniq.size()) != n_) throw MalformedTable("duplicate element labels");
}

void FiniteGroup::validate() const {
  std::vector<char> seen(n_);
  for (int a = 0; a < n_; ++a) {
    std::fill(seen.begin(), seen.end(), 0);
    for (int b = 0; b < n_; ++b) seen[mul(a, b)] = 1;
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw NotAGroup("row " + std::to_string(a) + " is not a permutation");
  }
  for (int x = 0; x < n_; ++x)
    if (mul(e_, x) != x || mul(x, e_) != x) throw NotAGroup("declared identity fails");
  for (int a = 0; a < n_; ++a)
    if (mul(a, inv_[a]) != e_ || mul(inv_[a], a) != e_)
      throw NotAGroup("inverse table fails at " + std::to_string(a));
  for (int a = 0; a < n_; ++a) {
    for (int b = 0; b < n_; ++b) {
      const int ab = mul(a, b);
      const uint16_t* row_b = &mul_[static_cast<size_t>(b) * n_];
      const uint16_t* row_ab = &mul_[static_cast<size_t>(ab) * n_];
      for (int c = 0; c < n_; ++c) {
        if (row_ab[c] != mul(a, row_b[c]))
          throw NotAGroup("associativity fails at (" + std::to_string(a) + "," +
                          std::to_string(b) + "," + std::to_string(c) + ")");
      }
    }
  }
}

FiniteGroup FiniteGroup::from_cayley_table(const std::vector<std::vector<int>>& rows,
                                           std::vector<std::string> labels,
                                           std::string source) {
  const int n = static_cast<int>(rows.size());
  if (n == 0) throw MalformedTable("empty table");
  FiniteGroup G;
  G.n_ = n;
  if (n > kOrderCap)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds table cap " +
                      std::to_string(kOrderCap));
  G.mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(rows[a].size()) != n)
      throw MalformedTable("row " + std::to_string(a) + " has " +
                           std::to_string(rows[a].size()) + " entries, expected " +
                           std::to_string(n));
    for (int b = 0; b < n; ++b) {
      int v = rows[a][b];
      if (v < 0 || v >= n)
        throw MalformedTable("entry (" + std::to_string(a) + "," + std::to_string(b) +
                             ") out of range");
      G.mul_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(v);
    }
  }
  G.labels_ = std::move(labels);
  G.source_ = std::move(source);
  G.finalize(/*check_latin=*/true);
  G.validate();
  return G;
}

namespace {
struct PermHash {
  size_t operator()(const Perm& p) const {
    uint64_t h = 1469598103934665603ull;
    for (int v : p) {
      h ^= static_cast<uint64_t>(v);
      h *= 1099511628211ull;
    }
    return static_cast<size_t>(h);
  }
};
}  // namespace

FiniteGroup FiniteGroup::from_permutation_elements(std::vector<Perm> elems,
                                                   std::string source) {
  if (elems.empty()) throw NotAGroup("no permutations supplied");
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  const int n = static_cast<int>(elems.size());
  if (n > kOrderCap)
    throw CapExceeded("group order " + std::to_string(n) + " exceeds table cap " +
                      std::to_string(kOrderCap));
  // Identity is the lexicographic minimum of any permutation set, so after
  // sorting it sits at index 0 when present.
  if (elems[0] != perm_identity(static_cast<int>(elems[0].size())))
    throw NotAGroup("identity permutation missing");
  std::unordered_map<Perm, int, PermHash> index;
  index.reserve(n * 2);
  for (int i = 0; i < n; ++i) index.emplace(elems[i], i);
  FiniteGroup G;
  G.n_ = n;
  G.mul_.resize(static_cast<size_t>(n) * n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      auto it = index.find(perm_compose(elems[a], elems[b]));
      if (it == index.end()) throw NotAGroup("permutation set not closed under composition");
      G.mul_[static_cast<size_t>(a) * n + b] = static_cast<uint16_t>(it->second);
    }
  }
  G.labels_.resize(n);
  for (int i = 0; i < n; ++i) G.labels_[i] = format_cycles(elems[i]);
  G.perm_images_ = std::move(elems);
  G.source_ = std::move(source);
  G.finalize(/*check_latin=*/true);
  return G;
}

FiniteGroup FiniteGroup::from_permutation_generators(const std::vector<Perm>& gens,
                                                     std::string source, int cap) {
  int degree = 1;
  for (const Perm& g : gens) degree = std::max(degree, static_cast<int>(g.size()));
  std::vector<Perm> padded;
  for (const Perm& g : gens) {
    Perm p = g;
    for (int i = static_cast<int>(p.size()); i < degree; ++i) p.push_back(i);
    padded.push_back(std::move(p));
  }
  std::vector<Perm> elems;
  std::unordered_map<Perm, int, PermHash> index;
  elems.push_back(perm_identity(degree));
  index.emplace(elems[0], 0);
  for (size_t head = 0; head < elems.size(); ++head) {
    Perm cur = elems[head];  // copy: elems may reallocate below
    for (const Perm& g : padded) {
      Perm nxt = perm_compose(cur, g);
      if (index.emplace(nxt, static_cast<int>(elems.size())).second) {
        elems.push_back(std::move(nxt));
        if (static_cast<int>(elems.size()) > cap)
          throw CapExceeded("permutation closure exceeds cap " + std::to_string(cap));
      }
    }
  }
  return from_permutation_elements(std::move(elems), std::move(source));
}

int FiniteGroup::power(int x, long long k) const {
  const int ord = order_of_[x];
  long long r = k % ord;
  if (r < 0) r += ord;
  int acc = e_, base = x;
  while (r > 0) {
    if (r & 1) acc = mul(acc, base);
    base = mul(base, base);
    r >>= 1;
  }
  return acc;
}

std::vector<int> FiniteGroup::pi_of(int x) const { return prime_factors(order_of_[x]); }

std::vector<int> FiniteGroup::prime_divisors() const { return prime_factors(n_); }

ElementSet FiniteGroup::singleton(int x) const {
  ElementSet s(n_);
  s.set(x);
  return s;
}

// ---- subgroup machinery -------------------------------------------------

ElementSet closure(const FiniteGroup& G, const ElementSet& S) {
  std::vector<int> gens = S.elements();
  return closure_of(G, gens);
}

ElementSet closure_of(const FiniteGroup& G, const std::vector<int>& gens) {
  ElementSet R(G.order());
  R.set(G.identity());
  std::vector<int> queue{G.identity()};
  // In a finite group the sub-semigroup generated by {e} ∪ gens is already
  // the subgroup: inverses arrive as powers.
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int g : gens) {
      int v = G.mul(u, g);
      if (!R.test(v)) {
        R.set(v);
        queue.push_back(v);
      }
    }
  }
  return R;
}

bool is_subgroup(const FiniteGroup& G, const ElementSet& S) {
  if (!S.test(G.identity())) return false;
  std::vector<int> xs = S.elements();
  for (int a : xs)
    if (!S.test(G.inv(a))) return false;
  for (int a : xs)
    for (int b : xs)
      if (!S.test(G.mul(a, b))) return false;
  return true;
}

ElementSet centralizer(const FiniteGroup& G, int x) {
  ElementSet C(G.order());
  for (int g = 0; g < G.order(); ++g)
    if (G.mul(g, x) == G.mul(x, g)) C.set(g);
  return C;
}

ElementSet centralizer_in(const FiniteGroup& G, const ElementSet& H, int x) {
  ElementSet C(G.order());
  H.for_each([&](int g) {
    if (G.mul(g, x) == G.mul(x, g)) C.set(g);
  });
  return C;
}

ElementSet center(const FiniteGroup& G) {
  ElementSet Z = G.full_set();
  for (int x = 0; x < G.order(); ++x) Z &= centralizer(G, x);
  return Z;
}

bool is_abelian(const FiniteGroup& G, const ElementSet& H) {
  std::vector<int> xs = H.elements();
  for (size_t i = 0; i < xs.size(); ++i)
    for (size_t j = i + 1; j < xs.size(); ++j)
      if (G.mul(xs[i], xs[j]) != G.mul(xs[j], xs[i])) return false;
  return true;
}

ElementSet normal_closure(const FiniteGroup& G, int x) {
  ElementSet S(G.order());
  S.set(x);
  return normal_closure_in(G, G.full_set(), S);
}

ElementSet normal_closure_in(const FiniteGroup& G, const ElementSet& K,
                             const ElementSet& S) {
  if (!S.is_subset_of(K)) throw NotASubgroup("normal closure seed not inside K");
  std::vector<int> kgens = small_generating_set(G, K);
  // Orbit of S under conjugation by K (generators suffice).
  ElementSet orbit(G.order());
  std::vector<int> queue = S.elements();
  for (int s : queue) orbit.set(s);
  for (size_t head = 0; head < queue.size(); ++head) {
    int u = queue[head];
    for (int g : kgens) {
      int v = G.conjugate(u, g);
      if (!orbit.test(v)) {
        orbit.set(v);
        queue.push_back(v);
      }
    }
  }
  return closure_of(G, queue);
}

bool is_normal_in(const FiniteGroup& G, const ElementSet& K, const ElementSet& N) {
  std::vector<int> kgens = small_generating_set(G, K);
  bool ok = true;
  N.for_each([&](int x) {
    for (int g : kgens)
      if (!N.test(G.conjugate(x, g))) {
        ok = false;
        return;
      }
  });
  return ok;
}

std::vector<int> small_generating_set(const FiniteGroup& G, const ElementSet& H) {
  std::vector<int> gens;
  ElementSet C(G.order());
  C.set(G.identity());
  while (C != H) {
    int next = -1;
    for (int x = 0; x < G.order(); ++x) {
      if (H.test(x) && !C.test(x)) {
        next = x;
        break;
      }
    }
    if (next < 0) throw NotASubgroup("set is not closed (closure escapes it)");
    gens.push_back(next);
    C = closure_of(G, gens);
    if (!C.is_subset_of(H)) throw NotASubgroup("set is not closed under multiplication");
  }
  return gens;
}

SubgroupView subgroup_as_group(const FiniteGroup& G, const ElementSet& H) {
  if (!is_subgroup(G, H)) throw NotASubgroup("subgroup_as_group: not a subgroup");
  std::vector<int> to_parent = H.elements();
  std::vector<int> from_parent(G.order(), -1);
  const int m = static_cast<int>(to_parent.size());
  for (int i = 0; i < m; ++i) from_parent[to_parent[i]] = i;
  std::vector<std::vector<int>> rows(m, std::vector<int>(m));
  std::vector<std::string> labels(m);
  for (int i = 0; i < m; ++i) {
    labels[i] = G.label(to_parent[i]);
    for (int j = 0; j < m; ++j)
      rows[i][j] = from_parent[G.mul(to_parent[i], to_parent[j])];
  }
  FiniteGroup sub = FiniteGroup::from_cayley_table(rows, std::move(labels), "subgroup");
  sub.set_name(G.name() + "-sub" + std::to_string(m));
  return SubgroupView{std::move(sub), std::move(to_parent), std::move(from_parent)};
}

ConjugacyClasses conjugacy_classes(const FiniteGroup& G) {
  ConjugacyClasses cc;
  cc.class_of.assign(G.order(), -1);
  cc.witness.assign(G.order(), -1);
  for (int x = 0; x < G.order(); ++x) {
    if (cc.class_of[x] >= 0) continue;
    int cls = static_cast<int>(cc.reps.size());
    cc.reps.push_back(x);
    for (int g = 0; g < G.order(); ++g) {
      int y = G.conjugate(x, g);
      if (cc.class_of[y] < 0) {
        cc.class_of[y] = cls;
        cc.witness[y] = g;
      }
    }
  }
  return cc;
}

CyclicIndex cyclic_index(const FiniteGroup& G) {
  CyclicIndex ci;
  ci.id_of.assign(G.order(), -1);
  std::unordered_map<ElementSet, int, ElementSet::Hasher> seen;
  for (int x = 0; x < G.order(); ++x) {
    ElementSet cyc(G.order());
    int v = x;
    cyc.set(G.identity());
    while (!cyc.test(v)) {
      cyc.set(v);
      v = G.mul(v, x);
    }
    auto [it, fresh] = seen.emplace(cyc, static_cast<int>(ci.sets.size()));
    if (fresh) ci.sets.push_back(std::move(cyc));
    ci.id_of[x] = it->second;
  }
  return ci;
}

}  // namespace nilgraph
