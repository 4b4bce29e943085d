#include "nilgraph/nilpotentizer.hpp"

#include "nilgraph/errors.hpp"
#include "nilgraph/parallel.hpp"

namespace nilgraph {

ElementSet nilpotentizer(PairContext& ctx, int x) {
  const FiniteGroup& G = ctx.group();
  ElementSet nil(G.order());
  for (int g = 0; g < G.order(); ++g)
    if (ctx.pair_nilpotent(x, g)) nil.set(g);
  return nil;
}

ElementSet nilpotentizer(const FiniteGroup& G, int x) {
  PairContext ctx(G);
  return nilpotentizer(ctx, x);
}

NilTable nil_table(PairContext& ctx, int threads) {
  const FiniteGroup& G = ctx.group();
  const int n = G.order();
  ConjugacyClasses cc = conjugacy_classes(G);
  const int nclasses = static_cast<int>(cc.reps.size());
  std::vector<ElementSet> rep_nil(nclasses, ElementSet(0));
  parallel_for(nclasses, threads,
               [&](int c) { rep_nil[c] = nilpotentizer(ctx, cc.reps[c]); });
  NilTable table;
  table.nil_of.assign(n, ElementSet(n));
  for (int y = 0; y < n; ++y) {
    const ElementSet& base = rep_nil[cc.class_of[y]];
    const int t = cc.witness[y];
    ElementSet& row = table.nil_of[y];
    base.for_each([&](int h) { row.set(G.conjugate(h, t)); });
  }
  table.is_subgroup_flag.resize(n);
  table.nil_of_group = G.full_set();
  for (int y = 0; y < n; ++y) {
    table.is_subgroup_flag[y] = is_subgroup(G, table.nil_of[y]) ? 1 : 0;
    table.nil_of_group &= table.nil_of[y];
  }
  return table;
}

NilTable nil_table_bruteforce(const FiniteGroup& G) {
  const int n = G.order();
  NilTable table;
  table.nil_of.assign(n, ElementSet(n));
  for (int x = 0; x < n; ++x) {
    ElementSet& row = table.nil_of[x];
    for (int g = 0; g < n; ++g) {
      ElementSet K = closure_of(G, {x, g});
      SeriesRecord lcs = lower_central_series(G, K);
      if (lcs.terms[lcs.stabilized_at].count() == 1) row.set(g);
    }
  }
  table.is_subgroup_flag.resize(n);
  table.nil_of_group = G.full_set();
  for (int x = 0; x < n; ++x) {
    table.is_subgroup_flag[x] = is_subgroup(G, table.nil_of[x]) ? 1 : 0;
    table.nil_of_group &= table.nil_of[x];
  }
  return table;
}

ElementSet nilpotentizer_of_set(PairContext& ctx, const ElementSet& S) {
  if (S.empty()) throw EmptySet("nilpotentizer_of_set: empty set");
  ElementSet out = ctx.group().full_set();
  S.for_each([&](int x) { out &= nilpotentizer(ctx, x); });
  return out;
}

}  // namespace nilgraph
