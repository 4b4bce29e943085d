#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "nilgraph/elemset.hpp"
#include "nilgraph/errors.hpp"
#include "nilgraph/graph.hpp"

namespace nilgraph {
namespace {

// Branch-and-bound maximum clique in the style of Tomita's MCQ: at every
// node the candidate set is greedily colored, vertices are expanded in
// decreasing color order, and a branch is cut once |R| + color can no
// longer beat the incumbent. Work is metered in expand() entries so runaway
// instances fail loudly instead of silently returning a lower bound.
class CliqueSolver {
 public:
  CliqueSolver(const std::vector<ElementSet>& adj, long long node_budget)
      : adj_(adj), budget_(node_budget) {}

  int solve(ElementSet cand) {
    best_ = greedy_clique(cand);
    if (best_ > 0) expand(std::move(cand), 0);
    return best_;
  }

 private:
  // Cheap incumbent: always extend by the candidate of maximum remaining
  // degree. On graphs close to complete multipartite this is already optimal
  // and lets the root prune almost everything.
  int greedy_clique(const ElementSet& cand) const {
    ElementSet cur = cand;
    int size = 0;
    while (!cur.empty()) {
      int pick = -1, pick_deg = -1;
      cur.for_each([&](int v) {
        ElementSet common = cur;
        common &= adj_[v];
        int d = common.count();
        if (d > pick_deg) {
          pick_deg = d;
          pick = v;
        }
      });
      ++size;
      cur &= adj_[pick];
    }
    return size;
  }

  void expand(ElementSet cand, int rsize) {
    if (++used_ > budget_) {
      throw CliqueBudgetExceeded("clique search exceeded " +
                                 std::to_string(budget_) + " nodes");
    }

    // Greedy coloring: a color class is an independent set, so a clique in
    // cand meets each class at most once and max color bounds its size.
    std::vector<int> order, color;
    order.reserve(size_t(cand.count()));
    color.reserve(order.capacity());
    ElementSet left = cand;
    int classes = 0;
    while (!left.empty()) {
      ++classes;
      ElementSet avail = left;
      for (int v = avail.first(); v >= 0; v = avail.first()) {
        order.push_back(v);
        color.push_back(classes);
        left.reset(v);
        avail.reset(v);
        avail.subtract(adj_[v]);
      }
    }

    for (int i = int(order.size()) - 1; i >= 0; --i) {
      if (rsize + color[i] <= best_) return;  // lower colors can't win either
      int v = order[i];
      if (rsize + 1 > best_) best_ = rsize + 1;
      ElementSet next = cand;
      next &= adj_[v];  // v itself drops out: the diagonal is empty
      if (!next.empty()) expand(std::move(next), rsize + 1);
      cand.reset(v);
    }
  }

  const std::vector<ElementSet>& adj_;
  long long budget_ = 0;
  long long used_ = 0;
  int best_ = 0;
};

}  // namespace

int clique_number(const NnGraph& g, long long node_budget) {
  int n = g.vertex_count;
  if (n == 0) return 0;
  // Relabel by descending degree. First-fit coloring then builds classes
  // around high-degree vertices and mops the shared low-degree ones into
  // existing classes, which keeps the bound tight on these graphs.
  std::vector<int> deg(n), order(n), newpos(n);
  for (int v = 0; v < n; ++v) deg[v] = g.adjacency[v].count();
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return deg[a] > deg[b]; });
  for (int i = 0; i < n; ++i) newpos[order[i]] = i;
  std::vector<ElementSet> adj(n, ElementSet(n));
  for (int v = 0; v < n; ++v)
    g.adjacency[v].for_each([&](int w) { adj[newpos[v]].set(newpos[w]); });
  return CliqueSolver(adj, node_budget).solve(ElementSet::full(n));
}

}  // namespace nilgraph
