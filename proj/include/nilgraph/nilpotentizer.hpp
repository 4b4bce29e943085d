#pragma once

#include <vector>

#include "nilgraph/elemset.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/series.hpp"

namespace nilgraph {

struct NilTable {
  std::vector<ElementSet> nil_of;        // nil_G(x) per element x
  std::vector<char> is_subgroup_flag;    // whether nil_G(x) is a subgroup
  ElementSet nil_of_group{0};            // nil(G) = intersection of all rows
};

// nil_G(x) = {g : <x,g> is nilpotent}.
ElementSet nilpotentizer(PairContext& ctx, int x);
ElementSet nilpotentizer(const FiniteGroup& G, int x);

// Full table: one row per conjugacy-class representative, the rest obtained
// by nil_G(x^t) = nil_G(x)^t. Parallelizes over representatives.
NilTable nil_table(PairContext& ctx, int threads = 1);

// Element-by-element recomputation with no caching, no conjugacy reuse and
// no commuting shortcut; the independent oracle the accelerated table is
// checked against.
NilTable nil_table_bruteforce(const FiniteGroup& G);

// nil_G(S) = intersection over x in S of nil_G(x). Throws EmptySet.
ElementSet nilpotentizer_of_set(PairContext& ctx, const ElementSet& S);

}  // namespace nilgraph
