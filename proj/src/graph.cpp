#include "nilgraph/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "nilgraph/errors.hpp"

namespace nilgraph {

NnGraph build_full_graph(const FiniteGroup& G, const NilTable& nil) {
  NnGraph g;
  g.vertex_count = G.order();
  g.reduced = false;
  g.vertex_labels = G.labels();
  g.vertex_map.resize(G.order());
  g.adjacency.reserve(G.order());
  for (int x = 0; x < G.order(); ++x) {
    g.vertex_map[x] = x;
    g.adjacency.push_back(nil.nil_of[x].complement());
  }
  return g;
}

NnGraph build_reduced_graph(const FiniteGroup& G, const NilTable& nil) {
  NnGraph g;
  g.reduced = true;
  std::vector<int> keep;
  for (int x = 0; x < G.order(); ++x)
    if (!nil.nil_of_group.test(x)) keep.push_back(x);
  g.vertex_count = static_cast<int>(keep.size());
  g.vertex_map = keep;
  std::vector<int> local(G.order(), -1);
  for (int i = 0; i < g.vertex_count; ++i) local[keep[i]] = i;
  g.vertex_labels.resize(g.vertex_count);
  g.adjacency.assign(g.vertex_count, ElementSet(g.vertex_count));
  for (int i = 0; i < g.vertex_count; ++i) {
    g.vertex_labels[i] = G.label(keep[i]);
    const ElementSet& nilrow = nil.nil_of[keep[i]];
    for (int j = 0; j < g.vertex_count; ++j)
      if (i != j && !nilrow.test(keep[j])) g.adjacency[i].set(j);
  }
  return g;
}

std::vector<int> degree_set(const NnGraph& g) {
  std::vector<int> degs;
  for (const ElementSet& row : g.adjacency) degs.push_back(row.count());
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  return degs;
}

long long edge_count(const NnGraph& g) {
  long long total = 0;
  for (const ElementSet& row : g.adjacency) total += row.count();
  return total / 2;
}

std::vector<int> component_sizes(const NnGraph& g) {
  std::vector<int> sizes;
  ElementSet visited(g.vertex_count);
  for (int v = 0; v < g.vertex_count; ++v) {
    if (visited.test(v)) continue;
    ElementSet frontier(g.vertex_count);
    frontier.set(v);
    int size = 0;
    while (frontier.any()) {
      visited |= frontier;
      size += frontier.count();
      ElementSet next(g.vertex_count);
      frontier.for_each([&](int u) { next |= g.adjacency[u]; });
      next.subtract(visited);
      frontier = std::move(next);
    }
    sizes.push_back(size);
  }
  return sizes;
}

std::vector<int> bfs_distances(const NnGraph& g, int source) {
  std::vector<int> dist(g.vertex_count, -1);
  ElementSet visited(g.vertex_count);
  ElementSet frontier(g.vertex_count);
  frontier.set(source);
  int level = 0;
  while (frontier.any()) {
    visited |= frontier;
    frontier.for_each([&](int u) { dist[u] = level; });
    ElementSet next(g.vertex_count);
    frontier.for_each([&](int u) { next |= g.adjacency[u]; });
    next.subtract(visited);
    frontier = std::move(next);
    ++level;
  }
  return dist;
}

int diameter(const NnGraph& g) {
  int best = 0;
  for (int v = 0; v < g.vertex_count; ++v) {
    ElementSet visited(g.vertex_count);
    ElementSet frontier(g.vertex_count);
    frontier.set(v);
    int level = -1;
    while (frontier.any()) {
      ++level;
      visited |= frontier;
      ElementSet next(g.vertex_count);
      frontier.for_each([&](int u) { next |= g.adjacency[u]; });
      next.subtract(visited);
      frontier = std::move(next);
    }
    best = std::max(best, level);
  }
  return best;
}

std::optional<int> girth(const NnGraph& g) {
  // Triangle fast path: almost every nonempty case here has girth 3.
  for (int u = 0; u < g.vertex_count; ++u) {
    bool found = false;
    g.adjacency[u].for_each([&](int v) {
      if (v > u && !found && g.adjacency[u].intersects(g.adjacency[v])) found = true;
    });
    if (found) return 3;
  }
  // General case: BFS from every vertex; every non-tree edge (u,w) closes a
  // cycle of length at most dist[u]+dist[w]+1, and a root on a shortest
  // cycle realizes the girth exactly.
  int best = -1;
  std::vector<int> dist(g.vertex_count), parent(g.vertex_count), queue(g.vertex_count);
  for (int r = 0; r < g.vertex_count; ++r) {
    std::fill(dist.begin(), dist.end(), -1);
    int head = 0, tail = 0;
    queue[tail++] = r;
    dist[r] = 0;
    parent[r] = -1;
    while (head < tail) {
      int u = queue[head++];
      g.adjacency[u].for_each([&](int w) {
        if (dist[w] < 0) {
          dist[w] = dist[u] + 1;
          parent[w] = u;
          queue[tail++] = w;
        } else if (w != parent[u]) {
          int len = dist[u] + dist[w] + 1;
          if (best < 0 || len < best) best = len;
        }
      });
    }
  }
  if (best < 0) return std::nullopt;
  return best;
}

static std::string escape_label(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

std::string to_dot(const NnGraph& g, const std::string& graph_name) {
  std::ostringstream os;
  os << "graph \"" << escape_label(graph_name) << "\" {\n";
  for (int v = 0; v < g.vertex_count; ++v)
    os << "  v" << v << " [label=\"" << escape_label(g.vertex_labels[v]) << "\"];\n";
  for (int u = 0; u < g.vertex_count; ++u)
    g.adjacency[u].for_each([&](int v) {
      if (u < v) os << "  v" << u << " -- v" << v << ";\n";
    });
  os << "}\n";
  return os.str();
}

void export_dot(const NnGraph& g, const std::string& path, const std::string& graph_name) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << to_dot(g, graph_name);
  if (!out) throw IoError("write failed for " + path);
}

GraphMetrics compute_metrics(const NnGraph& g, long long clique_budget) {
  GraphMetrics m;
  m.vertex_count = g.vertex_count;
  m.edge_count = edge_count(g);
  m.degree_set = degree_set(g);
  m.degree_kinds = static_cast<int>(m.degree_set.size());
  m.component_sizes = component_sizes(g);
  m.component_count = static_cast<int>(m.component_sizes.size());
  m.diameter = diameter(g);
  m.girth = girth(g);
  try {
    m.clique_number = clique_number(g, clique_budget);
  } catch (const CliqueBudgetExceeded&) {
    m.clique_number = -1;
    m.clique_budget_exceeded = true;
  }
  m.planar = is_planar(g);
  return m;
}

}  // namespace nilgraph
