#include "nilgraph/classify.hpp"

#include <algorithm>

#include "nilgraph/errors.hpp"
#include "nilgraph/parallel.hpp"

namespace nilgraph {

bool is_p_element(const FiniteGroup& G, int x, int p) {
  int ord = G.element_order(x);
  while (ord % p == 0) ord /= p;
  return ord == 1;
}

std::vector<int> p_elements(const FiniteGroup& G, int p) {
  bool prime = p >= 2;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime || G.order() % p != 0)
    throw PrimeNotDividing(std::to_string(p) + " is not a prime divisor of the group order");
  std::vector<int> out;
  for (int x = 0; x < G.order(); ++x)
    if (is_p_element(G, x, p)) out.push_back(x);
  return out;
}

std::vector<ElementSet> subnormalizer_table(PairContext& ctx, int threads) {
  const FiniteGroup& G = ctx.group();
  const int n = G.order();
  ConjugacyClasses cc = conjugacy_classes(G);
  const int nclasses = static_cast<int>(cc.reps.size());
  std::vector<ElementSet> rep_sn(nclasses, ElementSet(0));
  parallel_for(nclasses, threads, [&](int c) {
    const int x = cc.reps[c];
    ElementSet S(n);
    for (int g = 0; g < n; ++g)
      if (ctx.pair_subnormal(x, g)) S.set(g);
    rep_sn[c] = std::move(S);
  });
  std::vector<ElementSet> table(n, ElementSet(n));
  for (int y = 0; y < n; ++y) {
    const ElementSet& base = rep_sn[cc.class_of[y]];
    const int t = cc.witness[y];
    ElementSet& row = table[y];
    base.for_each([&](int h) { row.set(G.conjugate(h, t)); });
  }
  return table;
}

std::vector<ElementSet> engel_table(const FiniteGroup& G, int threads) {
  const int n = G.order();
  std::vector<ElementSet> table(n, ElementSet(0));
  parallel_for(n, threads, [&](int x) { table[x] = engel_set(G, x); });
  return table;
}

namespace {
bool rows_are_subgroups(const FiniteGroup& G, const std::vector<ElementSet>& rows,
                        const std::vector<int>& elems) {
  for (int x : elems)
    if (!is_subgroup(G, rows[x])) return false;
  return true;
}

std::vector<int> all_elements(const FiniteGroup& G) {
  std::vector<int> v(G.order());
  for (int i = 0; i < G.order(); ++i) v[i] = i;
  return v;
}
}  // namespace

ClassProfile classify(PairContext& ctx, const NilTable& nil,
                      const std::vector<ElementSet>& sn_of,
                      const std::vector<ElementSet>& engel_of) {
  const FiniteGroup& G = ctx.group();
  ClassProfile cp;
  cp.n_group = std::all_of(nil.is_subgroup_flag.begin(), nil.is_subgroup_flag.end(),
                           [](char f) { return f != 0; });
  const std::vector<int> everyone = all_elements(G);
  cp.sn_group = rows_are_subgroups(G, sn_of, everyone);
  cp.e_group = rows_are_subgroups(G, engel_of, everyone);
  cp.ac_group = is_ac_group(G);
  cp.centerless = is_centerless(G);
  cp.has_normal_abelian =
      G.order() > 1 && has_nontrivial_normal_abelian_subgroup(G);
  cp.solvable = is_solvable(G);
  cp.nilpotent = is_nilpotent(G).nilpotent;
  cp.weakly_nilpotent = nil.nil_of_group == G.full_set();
  for (int p : G.prime_divisors()) {
    PrimeProfile pp;
    pp.p = p;
    std::vector<int> pelems = p_elements(G, p);
    pp.n_p = true;
    for (int x : pelems)
      if (!nil.is_subgroup_flag[x]) {
        pp.n_p = false;
        break;
      }
    pp.sn_p = rows_are_subgroups(G, sn_of, pelems);
    pp.e_p = rows_are_subgroups(G, engel_of, pelems);
    pp.sylow_abelian = sylow_abelian(G, p);
    cp.per_prime.push_back(pp);
  }
  return cp;
}

bool is_n_group(const FiniteGroup& G) {
  PairContext ctx(G);
  NilTable t = nil_table(ctx);
  return std::all_of(t.is_subgroup_flag.begin(), t.is_subgroup_flag.end(),
                     [](char f) { return f != 0; });
}

bool is_np_group(const FiniteGroup& G, int p) {
  PairContext ctx(G);
  NilTable t = nil_table(ctx);
  for (int x : p_elements(G, p))
    if (!t.is_subgroup_flag[x]) return false;
  return true;
}

bool is_sn_group(const FiniteGroup& G) {
  PairContext ctx(G);
  return rows_are_subgroups(G, subnormalizer_table(ctx), all_elements(G));
}

bool is_snp_group(const FiniteGroup& G, int p) {
  std::vector<int> pelems = p_elements(G, p);
  PairContext ctx(G);
  return rows_are_subgroups(G, subnormalizer_table(ctx), pelems);
}

bool is_e_group(const FiniteGroup& G) {
  return rows_are_subgroups(G, engel_table(G), all_elements(G));
}

bool is_ep_group(const FiniteGroup& G, int p) {
  std::vector<int> pelems = p_elements(G, p);
  return rows_are_subgroups(G, engel_table(G), pelems);
}

bool is_ac_group(const FiniteGroup& G) {
  ElementSet Z = center(G);
  // Centralizers are conjugation-equivariant, so class representatives decide.
  ConjugacyClasses cc = conjugacy_classes(G);
  for (int x : cc.reps) {
    if (Z.test(x)) continue;
    if (!is_abelian(G, centralizer(G, x))) return false;
  }
  return true;
}

bool is_centerless(const FiniteGroup& G) { return center(G).count() == 1; }

ElementSet sylow_subgroup(const FiniteGroup& G, int p) {
  if (p < 2 || G.order() % p != 0)
    throw PrimeNotDividing(std::to_string(p) + " is not a prime divisor of the group order");
  int ppart = 1;
  for (int m = G.order(); m % p == 0; m /= p) ppart *= p;
  ElementSet P = G.trivial_subgroup();
  while (static_cast<int>(P.count()) < ppart) {
    // Any p-element of N_G(P) \ P enlarges P to a bigger p-subgroup.
    std::vector<int> gens = small_generating_set(G, P);
    int grow = -1;
    for (int g = 0; g < G.order() && grow < 0; ++g) {
      if (P.test(g) || !is_p_element(G, g, p)) continue;
      bool normalizes = true;
      for (int t : gens)
        if (!P.test(G.conjugate(t, g))) {
          normalizes = false;
          break;
        }
      if (normalizes) grow = g;
    }
    if (grow < 0) throw NotAGroup("sylow growth stalled (group table is inconsistent)");
    std::vector<int> next_gens = gens;
    next_gens.push_back(grow);
    P = closure_of(G, next_gens);
  }
  return P;
}

bool sylow_abelian(const FiniteGroup& G, int p) {
  return is_abelian(G, sylow_subgroup(G, p));
}

std::vector<ElementSet> minimal_normal_subgroups(const FiniteGroup& G) {
  ConjugacyClasses cc = conjugacy_classes(G);
  std::vector<ElementSet> closures;
  for (int x : cc.reps) {
    if (x == G.identity()) continue;
    ElementSet N = normal_closure(G, x);
    if (std::find(closures.begin(), closures.end(), N) == closures.end())
      closures.push_back(std::move(N));
  }
  std::vector<ElementSet> minimal;
  for (const ElementSet& N : closures) {
    bool is_min = true;
    for (const ElementSet& M : closures)
      if (M != N && M.is_subset_of(N)) {
        is_min = false;
        break;
      }
    if (is_min) minimal.push_back(N);
  }
  return minimal;
}

bool has_nontrivial_normal_abelian_subgroup(const FiniteGroup& G) {
  for (const ElementSet& N : minimal_normal_subgroups(G))
    if (is_abelian(G, N)) return true;
  return false;
}

bool is_simple(const FiniteGroup& G) {
  if (G.order() == 1) return false;
  std::vector<ElementSet> mins = minimal_normal_subgroups(G);
  return mins.size() == 1 && mins[0] == G.full_set();
}

FiniteGroup quotient(const FiniteGroup& G, const ElementSet& N) {
  if (!is_subgroup(G, N)) throw NotASubgroup("quotient: N is not a subgroup");
  if (!is_normal_in(G, G.full_set(), N)) throw NotNormal("quotient: N is not normal");
  const int n = G.order();
  std::vector<int> coset_of(n, -1);
  std::vector<int> reps;
  std::vector<int> members = N.elements();
  for (int x = 0; x < n; ++x) {
    if (coset_of[x] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(x);
    for (int m : members) coset_of[G.mul(x, m)] = id;
  }
  const int q = static_cast<int>(reps.size());
  std::vector<std::vector<int>> rows(q, std::vector<int>(q));
  std::vector<std::string> labels(q);
  for (int i = 0; i < q; ++i) {
    labels[i] = G.label(reps[i]) + "N";
    for (int j = 0; j < q; ++j) rows[i][j] = coset_of[G.mul(reps[i], reps[j])];
  }
  FiniteGroup Q = FiniteGroup::from_cayley_table(rows, std::move(labels), "quotient");
  Q.set_name(G.name() + "/N" + std::to_string(N.count()));
  return Q;
}

bool is_solvable(const FiniteGroup& G) {
  ElementSet D = G.full_set();
  while (true) {
    std::vector<int> xs = D.elements();
    std::vector<int> comms;
    comms.reserve(xs.size());
    for (int a : xs)
      for (int b : xs) comms.push_back(G.commutator(a, b));
    std::sort(comms.begin(), comms.end());
    comms.erase(std::unique(comms.begin(), comms.end()), comms.end());
    ElementSet next = closure_of(G, comms);
    if (next.count() == 1) return true;
    if (next == D) return false;
    D = std::move(next);
  }
}

bool is_weakly_nilpotent(PairContext& ctx) {
  const int n = ctx.group().order();
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (!ctx.pair_nilpotent(x, y)) return false;
  return true;
}

}  // namespace nilgraph
