#include <algorithm>
#include <string>
#include <vector>

#include "doctest.h"
#include "nilgraph/analyze.hpp"
#include "nilgraph/builtins.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/nilpotentizer.hpp"
#include "oracles.hpp"

using namespace nilgraph;

namespace {

struct BuiltGraphs {
  FiniteGroup G;
  NilTable nil;
  NnGraph full;
  NnGraph reduced;
};

BuiltGraphs graphs_of(const std::string& name) {
  FiniteGroup G = builtin(name);
  PairContext ctx(G);
  NilTable nil = nil_table(ctx);
  NnGraph full = build_full_graph(G, nil);
  NnGraph reduced = build_reduced_graph(G, nil);
  return {std::move(G), std::move(nil), std::move(full), std::move(reduced)};
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("graph");

TEST_CASE("the S3 graphs by hand") {
  BuiltGraphs b = graphs_of("S3");
  // full graph: identity isolated, rotations joined to the three
  // reflections, reflections also joined to each other
  CHECK(b.full.vertex_count == 6);
  CHECK(edge_count(b.full) == 9);
  CHECK(degree_set(b.full) == std::vector<int>{0, 3, 4});
  CHECK(sorted(component_sizes(b.full)) == std::vector<int>{1, 5});
  CHECK(diameter(b.full) == 2);
  REQUIRE(girth(b.full).has_value());
  CHECK(*girth(b.full) == 3);
  CHECK(clique_number(b.full) == 4);
  CHECK(is_planar(b.full));

  CHECK(b.reduced.vertex_count == 5);
  CHECK(edge_count(b.reduced) == 9);
  CHECK(degree_set(b.reduced) == std::vector<int>{3, 4});
  CHECK(component_sizes(b.reduced) == std::vector<int>{5});
  CHECK(diameter(b.reduced) == 2);
  CHECK(clique_number(b.reduced) == 4);
  CHECK(is_planar(b.reduced));
  CHECK(b.reduced.reduced);
  CHECK_FALSE(b.full.reduced);

  // the two rotations generate a cyclic group, so they are non-adjacent
  int r1 = -1, r2 = -1;
  for (int v = 0; v < b.reduced.vertex_count; ++v)
    if (b.G.element_order(b.reduced.vertex_map[v]) == 3) (r1 < 0 ? r1 : r2) = v;
  REQUIRE(r2 >= 0);
  CHECK_FALSE(b.reduced.adjacency[r1].test(r2));
}

TEST_CASE("graph structure mirrors the nilpotentizer table") {
  for (const char* name : {"S3", "S4", "A4", "D12", "T", "Q8", "C12"}) {
    BuiltGraphs b = graphs_of(name);
    CAPTURE(name);
    int n = b.G.order();
    REQUIRE(b.full.vertex_count == n);
    long long degree_sum = 0;
    int isolated = 0;
    for (int x = 0; x < n; ++x) {
      // adjacency row = complement of nil_G(x)
      ElementSet expect = b.nil.nil_of[x].complement();
      CHECK(b.full.adjacency[x] == expect);
      CHECK_FALSE(b.full.adjacency[x].test(x));
      CHECK(b.full.vertex_map[x] == x);
      CHECK(b.full.vertex_labels[x] == b.G.label(x));
      degree_sum += b.full.adjacency[x].count();
      if (b.full.adjacency[x].empty()) ++isolated;
      for (int y = 0; y < n; ++y)
        CHECK(b.full.adjacency[x].test(y) == b.full.adjacency[y].test(x));
    }
    CHECK(degree_sum == 2 * edge_count(b.full));
    CHECK(isolated >= b.nil.nil_of_group.count());

    // reduced graph: exactly the vertices outside nil(G), same adjacency
    CHECK(b.reduced.vertex_count == n - b.nil.nil_of_group.count());
    for (int v = 0; v < b.reduced.vertex_count; ++v) {
      int x = b.reduced.vertex_map[v];
      CHECK_FALSE(b.nil.nil_of_group.test(x));
      CHECK(b.reduced.vertex_labels[v] == b.G.label(x));
      for (int w = 0; w < b.reduced.vertex_count; ++w)
        CHECK(b.reduced.adjacency[v].test(w) ==
              b.full.adjacency[x].test(b.reduced.vertex_map[w]));
    }
  }
}

TEST_CASE("metrics agree with reference algorithms on the corpus") {
  for (const char* name : {"S3", "S4", "A4", "D12", "T", "A5"}) {
    BuiltGraphs b = graphs_of(name);
    CAPTURE(name);
    for (const NnGraph* g : {&b.full, &b.reduced}) {
      CHECK(diameter(*g) == oracle::diameter_bruteforce(*g));
      CHECK(girth(*g) == oracle::girth_bruteforce(*g));
      CHECK(sorted(component_sizes(*g)) ==
            sorted(oracle::component_sizes_bruteforce(*g)));
    }
  }
}

TEST_CASE("metrics agree with reference algorithms on random graphs") {
  for (int trial = 0; trial < 60; ++trial) {
    oracle::Rng rng(0x5eed + trial);
    int n = 1 + rng.below(12);
    int pct = 10 + rng.below(85);
    NnGraph g = oracle::random_graph(n, pct, rng.next());
    CAPTURE(trial);
    CAPTURE(n);
    CHECK(diameter(g) == oracle::diameter_bruteforce(g));
    CHECK(girth(g) == oracle::girth_bruteforce(g));
    CHECK(sorted(component_sizes(g)) ==
          sorted(oracle::component_sizes_bruteforce(g)));
    long long degs = 0;
    for (int v = 0; v < n; ++v) degs += g.adjacency[v].count();
    CHECK(edge_count(g) == degs / 2);

    GraphMetrics m = compute_metrics(g);
    CHECK(m.vertex_count == n);
    CHECK(m.edge_count == edge_count(g));
    CHECK(m.degree_set == degree_set(g));
    CHECK(m.degree_kinds == int(m.degree_set.size()));
    CHECK(m.component_count == int(m.component_sizes.size()));
    CHECK(m.diameter == diameter(g));
    CHECK(m.girth == girth(g));
    CHECK(m.clique_number == clique_number(g));
    CHECK(m.planar == is_planar(g));
    CHECK_FALSE(m.clique_budget_exceeded);
  }
}

TEST_CASE("bfs distances") {
  NnGraph g = oracle::make_graph(6, {{0, 1}, {1, 2}, {2, 3}, {4, 5}});
  std::vector<int> d = bfs_distances(g, 0);
  CHECK(d == std::vector<int>{0, 1, 2, 3, -1, -1});
  std::vector<int> d3 = bfs_distances(g, 3);
  CHECK(d3[0] == 3);
  CHECK(bfs_distances(g, 4) == std::vector<int>{-1, -1, -1, -1, 0, 1});
}

TEST_CASE("degenerate graphs") {
  NnGraph empty = oracle::make_graph(0, {});
  CHECK(diameter(empty) == 0);
  CHECK(edge_count(empty) == 0);
  CHECK_FALSE(girth(empty).has_value());
  CHECK(component_sizes(empty).empty());
  CHECK(is_planar(empty));
  GraphMetrics m = compute_metrics(empty);
  CHECK(m.vertex_count == 0);
  CHECK(m.component_count == 0);

  NnGraph one = oracle::make_graph(1, {});
  CHECK(diameter(one) == 0);
  CHECK(component_sizes(one) == std::vector<int>{1});
  CHECK(clique_number(one) == 1);
  CHECK(is_planar(one));
  CHECK_FALSE(girth(one).has_value());

  NnGraph forest = oracle::make_graph(7, {{0, 1}, {1, 2}, {3, 4}, {5, 6}});
  CHECK_FALSE(girth(forest).has_value());
  CHECK(compute_metrics(forest).girth == std::nullopt);
  CHECK(diameter(forest) == 2);  // max over components

  // nilpotent group: reduced graph is empty, full graph edgeless
  BuiltGraphs b = graphs_of("Q8");
  CHECK(b.reduced.vertex_count == 0);
  CHECK(edge_count(b.full) == 0);
  CHECK(compute_metrics(b.full).degree_set == std::vector<int>{0});
}

TEST_CASE("dot export is deterministic and exact for reduced S3") {
  BuiltGraphs b = graphs_of("S3");
  std::string dot = to_dot(b.reduced, "S3 reduced");
  CHECK(dot == to_dot(b.reduced, "S3 reduced"));

  // one line per vertex, one line per edge, vertex-index order
  CHECK(dot.find("graph \"S3 reduced\" {") == 0);
  size_t nodes = 0, edges = 0, pos = 0;
  for (std::string::size_type at = dot.find('\n'); at != std::string::npos;
       at = dot.find('\n', pos)) {
    std::string line = dot.substr(pos, at - pos);
    if (line.find("--") != std::string::npos)
      ++edges;
    else if (line.find("label=") != std::string::npos)
      ++nodes;
    pos = at + 1;
  }
  CHECK(nodes == 5);
  CHECK(edges == 9);
}

TEST_SUITE_END();
