#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "nilgraph/builtins.hpp"
#include "nilgraph/errors.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/perm.hpp"

using namespace nilgraph;

namespace {

// Hand-checked multiplication table of S3 acting on {1,2,3}, elements in the
// order e, (123), (132), (12), (23), (13), product = apply left then right.
// Spot checks: (12)(23) = (132), (123)(123) = (132), (123)(12) = (23).
const std::vector<std::vector<int>> kS3Table = {
    {0, 1, 2, 3, 4, 5},
    {1, 2, 0, 4, 5, 3},
    {2, 0, 1, 5, 3, 4},
    {3, 5, 4, 0, 2, 1},
    {4, 3, 5, 1, 0, 2},
    {5, 4, 3, 2, 1, 0},
};
const std::vector<std::string> kS3Labels = {"e", "(123)", "(132)", "(12)", "(23)", "(13)"};

// A Latin square with two-sided identity 0 that fails associativity:
// (1*2)*2 = 3*2 = 1 but 1*(2*2) = 1*4 = 2.
const std::vector<std::vector<int>> kLoopTable = {
    {0, 1, 2, 3, 4},
    {1, 0, 3, 4, 2},
    {2, 3, 4, 0, 1},
    {3, 4, 1, 2, 0},
    {4, 2, 0, 1, 3},
};

std::multiset<int> order_multiset(const FiniteGroup& G) {
  std::multiset<int> out;
  for (int x = 0; x < G.order(); ++x) out.insert(G.element_order(x));
  return out;
}

int count_of_order(const FiniteGroup& G, int k) {
  int c = 0;
  for (int x = 0; x < G.order(); ++x)
    if (G.element_order(x) == k) ++c;
  return c;
}

}  // namespace

TEST_SUITE_BEGIN("group");

TEST_CASE("hand-checked S3 table builds, validates and matches the builtin") {
  FiniteGroup G = FiniteGroup::from_cayley_table(kS3Table, kS3Labels);
  G.validate();
  CHECK(G.order() == 6);
  CHECK(G.identity() == 0);
  CHECK(G.label(3) == "(12)");
  CHECK(order_multiset(G) == std::multiset<int>{1, 2, 2, 2, 3, 3});
  CHECK(center(G).count() == 1);
  CHECK_FALSE(is_abelian(G, G.full_set()));
  CHECK(G.inv(1) == 2);
  CHECK(G.inv(3) == 3);
  CHECK(closure_of(G, {1, 3}) == G.full_set());

  FiniteGroup B = builtin("S3");
  B.validate();
  CHECK(B.order() == 6);
  CHECK(order_multiset(B) == order_multiset(G));
  CHECK(center(B).count() == 1);
  CHECK_FALSE(is_abelian(B, B.full_set()));
  CHECK(conjugacy_classes(B).reps.size() == 3);
}

TEST_CASE("validate rejects a non-associative Latin square with identity") {
  CHECK_THROWS_AS(
      [] {
        FiniteGroup L = FiniteGroup::from_cayley_table(kLoopTable);
        L.validate();
      }(),
      NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {0, 1}}), NotAGroup);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}, {1, 2}}), MalformedTable);
  CHECK_THROWS_AS(FiniteGroup::from_cayley_table({{0, 1}}), MalformedTable);
}

TEST_CASE("builtin families have the right orders") {
  CHECK(builtin("C6").order() == 6);
  CHECK(builtin("C12").order() == 12);
  CHECK(builtin("D8").order() == 8);
  CHECK(builtin("D10").order() == 10);
  CHECK(builtin("D12").order() == 12);
  CHECK(builtin("Q8").order() == 8);
  CHECK(builtin("T").order() == 12);
  CHECK(builtin("S4").order() == 24);
  CHECK(builtin("S5").order() == 120);
  CHECK(builtin("S6").order() == 720);
  CHECK(builtin("A4").order() == 12);
  CHECK(builtin("A5").order() == 60);
  CHECK(builtin("A6").order() == 360);
  CHECK(builtin("S3xC2").order() == 12);
  CHECK(builtin("A4xC2").order() == 24);

  // |PSL(2,q)| = q(q-1)(q+1)/gcd(2,q-1)
  for (int q : {4, 5, 7, 8, 9, 11, 13}) {
    int expect = q * (q - 1) * (q + 1) / (q % 2 == 0 ? 1 : 2);
    CHECK(builtin("PSL(2," + std::to_string(q) + ")").order() == expect);
  }
  CHECK(builtin("PSL(2,4)").order() == 60);
  CHECK(builtin("PSL(2,8)").order() == 504);
}

TEST_CASE("builtin names are case-insensitive and errors are typed") {
  CHECK(builtin("s3").order() == 6);
  CHECK(builtin("psl(2,7)").order() == 168);
  CHECK(builtin("d12").order() == 12);
  CHECK_THROWS_AS(builtin("NOPE"), UnknownFamily);
  CHECK_THROWS_AS(builtin(""), UnknownFamily);
  CHECK_THROWS_AS(builtin("D7"), UnknownFamily);
  CHECK_THROWS_AS(builtin("S7"), UnknownFamily);
  CHECK_THROWS_AS(builtin("PSL(2,16)"), UnknownFamily);
  CHECK_THROWS_AS(builtin("C99999"), CapExceeded);

  std::vector<std::string> names = list_builtins();
  CHECK(names.size() >= 10);
  for (const std::string& n : names) CHECK(builtin(n).order() >= 1);
}

TEST_CASE("small builtins pass the exhaustive axiom audit") {
  for (const char* name : {"S3", "S4", "S5", "A4", "A5", "D8", "D10", "D12", "Q8",
                           "T", "C6", "C12", "S3xC2", "A4xC2", "A6", "PSL(2,4)"}) {
    FiniteGroup G = builtin(name);
    CAPTURE(name);
    CHECK_NOTHROW(G.validate());
  }
}

TEST_CASE("structural fingerprints separate the order-12 groups") {
  // A4, D12, T = Dic3 and S3xC2 all have order 12 but different involution
  // counts / element orders.
  CHECK(count_of_order(builtin("A4"), 2) == 3);
  CHECK(count_of_order(builtin("D12"), 2) == 7);
  CHECK(count_of_order(builtin("T"), 2) == 1);
  CHECK(count_of_order(builtin("S3xC2"), 2) == 7);
  CHECK(count_of_order(builtin("T"), 4) == 6);
  CHECK(count_of_order(builtin("D12"), 6) == 2);
  CHECK(count_of_order(builtin("S3xC2"), 6) == 2);
  // D12 has 6-element cyclic subgroup with reflections outside; S3xC2 too,
  // but T is told apart above and A4 has no element of order 6.
  CHECK(count_of_order(builtin("A4"), 6) == 0);
}

TEST_CASE("T satisfies its defining relations") {
  FiniteGroup G = builtin("T");
  bool found = false;
  for (int x = 0; x < G.order() && !found; ++x) {
    if (G.element_order(x) != 6) continue;
    for (int y = 0; y < G.order(); ++y) {
      if (G.mul(y, y) != G.power(x, 3)) continue;
      if (G.conjugate(x, y) != G.inv(x)) continue;
      if (closure_of(G, {x, y}) != G.full_set()) continue;
      found = true;
      break;
    }
  }
  CHECK(found);
}

TEST_CASE("Q8 structure") {
  FiniteGroup G = builtin("Q8");
  CHECK(count_of_order(G, 2) == 1);
  CHECK(count_of_order(G, 4) == 6);
  CHECK(center(G).count() == 2);
}

TEST_CASE("direct products multiply orders and keep structure") {
  FiniteGroup G = builtin("S3xC2");
  CHECK(G.order() == 12);
  CHECK(center(G).count() == 2);
  FiniteGroup H = builtin("C6");
  CHECK(is_abelian(H, H.full_set()));
  CHECK(order_multiset(H) == std::multiset<int>{1, 2, 3, 3, 6, 6});
  CHECK_THROWS_AS(builtin("S6xS6"), CapExceeded);
}

TEST_CASE("closure is monotone, idempotent and sized by element order") {
  FiniteGroup G = builtin("S4");
  for (int x = 0; x < G.order(); ++x) {
    ElementSet c = closure_of(G, {x});
    CHECK(c.count() == G.element_order(x));
    CHECK(c.test(x));
    CHECK(c.test(G.identity()));
    CHECK(closure(G, c) == c);
    CHECK(is_subgroup(G, c));
  }
  CHECK(closure(G, ElementSet(G.order())) == G.trivial_subgroup());
  ElementSet pair = closure_of(G, {1, 2});
  ElementSet bigger = closure(G, pair | closure_of(G, {3}));
  CHECK(pair.is_subset_of(bigger));
}

TEST_CASE("power agrees with iterated multiplication and negative exponents") {
  FiniteGroup G = builtin("D12");
  for (int x = 0; x < G.order(); ++x) {
    int acc = G.identity();
    for (int k = 0; k <= 14; ++k) {
      CHECK(G.power(x, k) == acc);
      acc = G.mul(acc, x);
    }
    CHECK(G.power(x, -1) == G.inv(x));
    CHECK(G.power(x, -3) == G.inv(G.power(x, 3)));
    CHECK(G.power(x, G.element_order(x)) == G.identity());
  }
}

TEST_CASE("centralizers and center") {
  FiniteGroup G = builtin("S4");
  CHECK(centralizer(G, G.identity()) == G.full_set());
  for (int x = 0; x < G.order(); ++x) {
    ElementSet c = centralizer(G, x);
    CHECK(c.test(x));
    CHECK(is_subgroup(G, c));
    ElementSet h = closure_of(G, {1, 2});
    CHECK(centralizer_in(G, h, x) == (h & c));
  }
  CHECK(center(builtin("S3")).count() == 1);
  CHECK(center(builtin("D8")).count() == 2);
  CHECK(center(builtin("C12")).count() == 12);
}

TEST_CASE("conjugacy classes partition the group with working witnesses") {
  for (const char* name : {"S4", "D12", "A5"}) {
    FiniteGroup G = builtin(name);
    CAPTURE(name);
    ConjugacyClasses cc = conjugacy_classes(G);
    REQUIRE(cc.class_of.size() == size_t(G.order()));
    REQUIRE(cc.witness.size() == size_t(G.order()));
    std::vector<int> sizes(cc.reps.size(), 0);
    for (int y = 0; y < G.order(); ++y) {
      int c = cc.class_of[y];
      REQUIRE(c >= 0);
      REQUIRE(c < int(cc.reps.size()));
      ++sizes[c];
      CHECK(G.conjugate(cc.reps[c], cc.witness[y]) == y);
      CHECK(G.element_order(y) == G.element_order(cc.reps[c]));
    }
    CHECK(std::accumulate(sizes.begin(), sizes.end(), 0) == G.order());
    for (size_t c = 0; c < cc.reps.size(); ++c) {
      CHECK(cc.class_of[cc.reps[c]] == int(c));
      CHECK(G.order() % sizes[c] == 0);  // orbit sizes divide |G|
    }
  }
}

TEST_CASE("cyclic index matches per-element closures") {
  FiniteGroup G = builtin("S4");
  CyclicIndex ci = cyclic_index(G);
  std::set<ElementSet> distinct;
  for (int x = 0; x < G.order(); ++x) {
    CHECK(ci.sets[ci.id_of[x]] == closure_of(G, {x}));
    distinct.insert(ci.sets[ci.id_of[x]]);
  }
  CHECK(distinct.size() == ci.sets.size());
}

TEST_CASE("normal closures and normality") {
  FiniteGroup G = builtin("S4");
  int three_cycle = -1, transposition = -1, double_transposition = -1;
  for (int x = 0; x < G.order(); ++x) {
    if (G.element_order(x) == 3 && three_cycle < 0) three_cycle = x;
    if (G.element_order(x) == 2) {
      // class size tells the involutions apart: 6 transpositions, 3 doubles
      ElementSet cls(G.order());
      for (int t = 0; t < G.order(); ++t) cls.set(G.conjugate(x, t));
      if (cls.count() == 6 && transposition < 0) transposition = x;
      if (cls.count() == 3 && double_transposition < 0) double_transposition = x;
    }
  }
  REQUIRE(three_cycle >= 0);
  REQUIRE(transposition >= 0);
  REQUIRE(double_transposition >= 0);

  ElementSet a4 = normal_closure(G, three_cycle);
  CHECK(a4.count() == 12);
  CHECK(is_normal_in(G, G.full_set(), a4));
  CHECK(normal_closure(G, transposition) == G.full_set());
  ElementSet v4 = normal_closure(G, double_transposition);
  CHECK(v4.count() == 4);
  CHECK(is_normal_in(G, G.full_set(), v4));
  CHECK(is_normal_in(G, a4, v4));
  CHECK_FALSE(is_normal_in(G, G.full_set(), closure_of(G, {transposition})));

  ElementSet inside = normal_closure_in(G, a4, G.singleton(double_transposition));
  CHECK(inside == v4);
}

TEST_CASE("small generating sets generate and are deterministic") {
  for (const char* name : {"S4", "A5", "D12", "Q8", "C12"}) {
    FiniteGroup G = builtin(name);
    CAPTURE(name);
    std::vector<int> gens = small_generating_set(G, G.full_set());
    CHECK(closure_of(G, gens) == G.full_set());
    CHECK(small_generating_set(G, G.full_set()) == gens);
    CHECK(gens.size() <= 3);
  }
}

TEST_CASE("subgroup re-indexing preserves multiplication") {
  FiniteGroup G = builtin("S4");
  ElementSet a4(G.order());
  for (int x = 0; x < G.order(); ++x)
    if (G.element_order(x) == 3) a4 |= closure_of(G, {x});
  a4 = closure(G, a4);
  REQUIRE(a4.count() == 12);

  SubgroupView v = subgroup_as_group(G, a4);
  CHECK(v.group.order() == 12);
  v.group.validate();
  for (int i = 0; i < 12; ++i) {
    CHECK(v.from_parent[v.to_parent[i]] == i);
    CHECK(v.group.label(i) == G.label(v.to_parent[i]));
    for (int j = 0; j < 12; ++j)
      CHECK(v.to_parent[v.group.mul(i, j)] == G.mul(v.to_parent[i], v.to_parent[j]));
  }
  for (int x = 0; x < G.order(); ++x)
    if (!a4.test(x)) CHECK(v.from_parent[x] == -1);
  CHECK_THROWS_AS(subgroup_as_group(G, ElementSet::of(G.order(), {0, 1, 2})),
                  NotASubgroup);
}

TEST_CASE("prime helpers") {
  CHECK(prime_factors(1) == std::vector<int>{});
  CHECK(prime_factors(12) == std::vector<int>{2, 3});
  CHECK(prime_factors(60) == std::vector<int>{2, 3, 5});
  CHECK(prime_factors(97) == std::vector<int>{97});
  CHECK(builtin("PSL(2,7)").prime_divisors() == std::vector<int>{2, 3, 7});
  FiniteGroup G = builtin("D12");
  for (int x = 0; x < G.order(); ++x)
    CHECK(G.pi_of(x) == prime_factors(G.element_order(x)));
}

TEST_CASE("permutation generators enumerate the right group under a cap") {
  FiniteGroup G = FiniteGroup::from_permutation_generators(
      {parse_cycles("(12)", 4), parse_cycles("(1234)", 4)});
  CHECK(G.order() == 24);
  CHECK(G.perm_images().size() == 24);
  CHECK_THROWS_AS(FiniteGroup::from_permutation_generators(
                      {parse_cycles("(12)", 4), parse_cycles("(1234)", 4)},
                      "permutation", 10),
                  CapExceeded);
}

TEST_SUITE_END();
