#include "doctest.h"
#include "nilgraph/builtins.hpp"
#include "nilgraph/errors.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/nilpotentizer.hpp"
#include "oracles.hpp"

using namespace nilgraph;

TEST_SUITE_BEGIN("clique");

TEST_CASE("clique number on structured graphs") {
  for (int n = 1; n <= 10; ++n) CHECK(clique_number(oracle::complete_graph(n)) == n);
  CHECK(clique_number(oracle::complete_bipartite(3, 3)) == 2);
  CHECK(clique_number(oracle::complete_bipartite(1, 7)) == 2);
  CHECK(clique_number(oracle::cycle_graph(5)) == 2);
  CHECK(clique_number(oracle::cycle_graph(3)) == 3);
  CHECK(clique_number(oracle::make_graph(4, {})) == 1);
  CHECK(clique_number(oracle::make_graph(0, {})) == 0);
  CHECK(clique_number(oracle::drop_edge(oracle::complete_graph(6), 0, 1)) == 5);
}

TEST_CASE("clique number matches brute force on random graphs") {
  for (int trial = 0; trial < 90; ++trial) {
    oracle::Rng rng(0xc11e + trial);
    int n = 1 + rng.below(17);
    int pct = 15 + rng.below(80);
    NnGraph g = oracle::random_graph(n, pct, rng.next());
    CAPTURE(trial);
    CAPTURE(n);
    CAPTURE(pct);
    CHECK(clique_number(g) == oracle::clique_bruteforce(g));
  }
}

TEST_CASE("clique numbers of the small group graphs match brute force") {
  for (const char* name : {"S3", "A4", "D12", "T", "C12"}) {
    FiniteGroup G = builtin(name);
    CAPTURE(name);
    PairContext ctx(G);
    NilTable nil = nil_table(ctx);
    NnGraph full = build_full_graph(G, nil);
    CHECK(clique_number(full) == oracle::clique_bruteforce(full));
  }
}

TEST_CASE("frozen clique values") {
  auto omega = [](const char* name) {
    FiniteGroup G = builtin(name);
    PairContext ctx(G);
    NilTable nil = nil_table(ctx);
    return clique_number(build_full_graph(G, nil));
  };
  CHECK(omega("S3") == 4);
  CHECK(omega("A4") == 5);
  CHECK(omega("D12") == 4);
  CHECK(omega("T") == 4);
  CHECK(omega("S4") == 7);
  CHECK(omega("A5") == 21);
}

TEST_CASE("budget exhaustion raises and compute_metrics records it") {
  NnGraph g = oracle::random_graph(40, 70, 0xbead);
  CHECK_THROWS_AS(clique_number(g, 3), CliqueBudgetExceeded);
  GraphMetrics m = compute_metrics(g, 3);
  CHECK(m.clique_budget_exceeded);
  CHECK(m.clique_number == -1);
  // everything else is still filled in
  CHECK(m.vertex_count == 40);
  CHECK(m.edge_count == edge_count(g));

  GraphMetrics full = compute_metrics(g);
  CHECK_FALSE(full.clique_budget_exceeded);
  CHECK(full.clique_number >= 3);
}

TEST_SUITE_END();
