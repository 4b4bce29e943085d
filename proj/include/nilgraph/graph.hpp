#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nilgraph/elemset.hpp"
#include "nilgraph/group.hpp"
#include "nilgraph/nilpotentizer.hpp"

namespace nilgraph {

inline constexpr long long kDefaultCliqueBudget = 100'000'000;

// Undirected simple graph over group elements. For the full graph vertices
// are all of G; for the reduced graph only G \ nil(G), with vertex_map
// translating graph indices back to element indices.
struct NnGraph {
  int vertex_count = 0;
  std::vector<ElementSet> adjacency;       // symmetric, empty diagonal
  std::vector<std::string> vertex_labels;
  std::vector<int> vertex_map;
  bool reduced = false;
};

// Adjacency row of x is the complement of nil_G(x) (x itself lies in its
// own nilpotentizer, so the diagonal is empty by construction).
NnGraph build_full_graph(const FiniteGroup& G, const NilTable& nil);
NnGraph build_reduced_graph(const FiniteGroup& G, const NilTable& nil);

std::vector<int> degree_set(const NnGraph& g);         // distinct, ascending
std::vector<int> component_sizes(const NnGraph& g);    // BFS discovery order
// Max over components of that component's diameter (isolated vertices
// contribute 0). Zero for the empty graph.
int diameter(const NnGraph& g);
// Per-source distances (-1 = unreachable), for path-length checks.
std::vector<int> bfs_distances(const NnGraph& g, int source);
std::optional<int> girth(const NnGraph& g);            // nullopt for forests
long long edge_count(const NnGraph& g);

// Exact maximum clique via branch-and-bound with greedy-coloring bounds.
// Throws CliqueBudgetExceeded when node_budget expansions are spent.
int clique_number(const NnGraph& g, long long node_budget = kDefaultCliqueBudget);

// Exact planarity: Euler-bound reject, then per-biconnected-block
// Demoucron face embedding.
bool is_planar(const NnGraph& g);
bool is_planar_adj(const std::vector<ElementSet>& adjacency);

std::string to_dot(const NnGraph& g, const std::string& graph_name);
void export_dot(const NnGraph& g, const std::string& path, const std::string& graph_name);

struct GraphMetrics {
  int vertex_count = 0;
  long long edge_count = 0;
  std::vector<int> degree_set;
  int degree_kinds = 0;
  std::vector<int> component_sizes;
  int component_count = 0;
  int diameter = 0;
  std::optional<int> girth;
  int clique_number = 0;               // -1 when the budget was exhausted
  bool clique_budget_exceeded = false;
  bool planar = false;
};

GraphMetrics compute_metrics(const NnGraph& g,
                             long long clique_budget = kDefaultCliqueBudget);

}  // namespace nilgraph
