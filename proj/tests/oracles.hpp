#pragma once

// Independent reference implementations that the fast library code is
// checked against. Everything here favors obviousness over speed and avoids
// sharing algorithms with the code under test.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nilgraph/classify.hpp"
#include "nilgraph/graph.hpp"
#include "nilgraph/group.hpp"

namespace oracle {

using nilgraph::ElementSet;
using nilgraph::FiniteGroup;
using nilgraph::NnGraph;

// Deterministic xorshift64; every test fixes its own seed.
struct Rng {
  uint64_t s;
  explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ull) {}
  uint64_t next() {
    s ^= s << 13;
    s ^= s >> 7;
    s ^= s << 17;
    return s;
  }
  int below(int n) { return int(next() % uint64_t(n)); }
  bool chance(int pct) { return below(100) < pct; }
};

// ---- graph construction --------------------------------------------------

inline NnGraph make_graph(int n, const std::vector<std::pair<int, int>>& edges) {
  NnGraph g;
  g.vertex_count = n;
  g.adjacency.assign(n, ElementSet(n));
  for (int i = 0; i < n; ++i) {
    g.vertex_labels.push_back("v" + std::to_string(i));
    g.vertex_map.push_back(i);
  }
  for (auto [a, b] : edges) {
    g.adjacency[a].set(b);
    g.adjacency[b].set(a);
  }
  return g;
}

inline NnGraph random_graph(int n, int edge_pct, uint64_t seed) {
  Rng rng(seed);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng.chance(edge_pct)) edges.push_back({i, j});
  return make_graph(n, edges);
}

inline NnGraph complete_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.push_back({i, j});
  return make_graph(n, edges);
}

inline NnGraph complete_bipartite(int a, int b) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) edges.push_back({i, a + j});
  return make_graph(a + b, edges);
}

inline NnGraph cycle_graph(int n) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) edges.push_back({i, (i + 1) % n});
  return make_graph(n, edges);
}

inline NnGraph drop_edge(NnGraph g, int a, int b) {
  g.adjacency[a].reset(b);
  g.adjacency[b].reset(a);
  return g;
}

inline NnGraph disjoint_union(const NnGraph& g, const NnGraph& h) {
  int n = g.vertex_count, m = h.vertex_count;
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (g.adjacency[i].test(j)) edges.push_back({i, j});
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (h.adjacency[i].test(j)) edges.push_back({n + i, n + j});
  return make_graph(n + m, edges);
}

// ---- reference graph algorithms -------------------------------------------

// Maximum clique by marking every clique subset of 2^n (n <= 20 or so).
inline int clique_bruteforce(const NnGraph& g) {
  int n = g.vertex_count;
  if (n == 0) return 0;
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (g.adjacency[v].test(u)) nbr[v] |= uint32_t{1} << u;
  std::vector<char> clique(size_t{1} << n, 0);
  clique[0] = 1;
  int best = 0;
  for (uint32_t mask = 1; mask < (uint32_t{1} << n); ++mask) {
    int v = std::countr_zero(mask);
    uint32_t rest = mask & (mask - 1);
    if (clique[rest] && (rest & ~nbr[v]) == 0) {
      clique[mask] = 1;
      best = std::max(best, std::popcount(mask));
    }
  }
  return best;
}

// Diameter via Floyd-Warshall: max finite pairwise distance, 0 when empty.
inline int diameter_bruteforce(const NnGraph& g) {
  int n = g.vertex_count;
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (int i = 0; i < n; ++i) d[i][i] = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (g.adjacency[i].test(j)) d[i][j] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
  int best = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i][j] < inf) best = std::max(best, d[i][j]);
  return best;
}

inline std::vector<int> bfs_from(const NnGraph& g, int src,
                                 std::pair<int, int> skip_edge = {-1, -1}) {
  std::vector<int> dist(g.vertex_count, -1);
  std::vector<int> queue{src};
  dist[src] = 0;
  for (size_t h = 0; h < queue.size(); ++h) {
    int v = queue[h];
    for (int u = 0; u < g.vertex_count; ++u) {
      if (!g.adjacency[v].test(u) || dist[u] >= 0) continue;
      if ((v == skip_edge.first && u == skip_edge.second) ||
          (v == skip_edge.second && u == skip_edge.first))
        continue;
      dist[u] = dist[v] + 1;
      queue.push_back(u);
    }
  }
  return dist;
}

// Girth by edge removal: shortest cycle through edge (u,v) is 1 + the
// shortest u-v path avoiding that edge.
inline std::optional<int> girth_bruteforce(const NnGraph& g) {
  std::optional<int> best;
  for (int v = 0; v < g.vertex_count; ++v)
    for (int u = v + 1; u < g.vertex_count; ++u) {
      if (!g.adjacency[v].test(u)) continue;
      std::vector<int> dist = bfs_from(g, v, {v, u});
      if (dist[u] >= 0 && (!best || dist[u] + 1 < *best)) best = dist[u] + 1;
    }
  return best;
}

inline std::vector<int> component_sizes_bruteforce(const NnGraph& g) {
  std::vector<char> seen(g.vertex_count, 0);
  std::vector<int> sizes;
  for (int v = 0; v < g.vertex_count; ++v) {
    if (seen[v]) continue;
    std::vector<int> dist = bfs_from(g, v);
    int size = 0;
    for (int u = 0; u < g.vertex_count; ++u)
      if (dist[u] >= 0 && !seen[u]) {
        seen[u] = 1;
        ++size;
      }
    sizes.push_back(size);
  }
  return sizes;
}

// ---- planarity by forbidden minors (n <= 8) --------------------------------

// Whether g contains the given complete or complete-bipartite minor: label
// vertices with 0 (unused) or a branch set 1..parts, require every part
// nonempty and connected, and every required part pair joined by an edge.
inline bool has_minor(const NnGraph& g, int parts, bool bipartite) {
  int n = g.vertex_count;
  if (n < parts) return false;
  std::vector<int> lab(n, 0);
  std::vector<uint32_t> part_mask(parts + 1, 0);
  std::vector<uint32_t> nbr(n, 0);
  for (int v = 0; v < n; ++v)
    for (int u = 0; u < n; ++u)
      if (g.adjacency[v].test(u)) nbr[v] |= uint32_t{1} << u;

  auto connected = [&](uint32_t mask) {
    uint32_t seen = mask & (~mask + 1);  // lowest bit
    for (;;) {
      uint32_t grow = seen;
      uint32_t scan = seen;
      while (scan) {
        int v = std::countr_zero(scan);
        scan &= scan - 1;
        grow |= nbr[v] & mask;
      }
      if (grow == seen) break;
      seen = grow;
    }
    return seen == mask;
  };

  for (;;) {
    for (int p = 1; p <= parts; ++p) part_mask[p] = 0;
    for (int v = 0; v < n; ++v)
      if (lab[v]) part_mask[lab[v]] |= uint32_t{1} << v;
    bool ok = true;
    for (int p = 1; p <= parts && ok; ++p)
      ok = part_mask[p] != 0 && connected(part_mask[p]);
    if (ok) {
      auto touching = [&](int p, int q) {
        uint32_t scan = part_mask[p];
        while (scan) {
          int v = std::countr_zero(scan);
          scan &= scan - 1;
          if (nbr[v] & part_mask[q]) return true;
        }
        return false;
      };
      bool all = true;
      if (bipartite) {
        int half = parts / 2;
        for (int p = 1; p <= half && all; ++p)
          for (int q = half + 1; q <= parts && all; ++q) all = touching(p, q);
      } else {
        for (int p = 1; p <= parts && all; ++p)
          for (int q = p + 1; q <= parts && all; ++q) all = touching(p, q);
      }
      if (all) return true;
    }
    int i = 0;
    while (i < n && lab[i] == parts) lab[i++] = 0;
    if (i == n) return false;
    ++lab[i];
  }
}

// Wagner's characterization: planar iff no K5 minor and no K3,3 minor.
inline bool planar_bruteforce(const NnGraph& g) {
  return !has_minor(g, 5, false) && !has_minor(g, 6, true);
}

// ---- reference group algorithms --------------------------------------------

// Worklist closure that shares no code with nilgraph::closure.
inline ElementSet close_set(const FiniteGroup& G, ElementSet S) {
  S.set(G.identity());
  std::vector<int> work = S.elements();
  while (!work.empty()) {
    int x = work.back();
    work.pop_back();
    std::vector<int> members = S.elements();
    for (int y : members) {
      for (int z : {G.mul(x, y), G.mul(y, x), G.inv(x)}) {
        if (!S.test(z)) {
          S.set(z);
          work.push_back(z);
        }
      }
    }
  }
  return S;
}

// Normal closure of x inside K: closure of all conjugates of x by K.
inline ElementSet normal_closure_oracle(const FiniteGroup& G, const ElementSet& K, int x) {
  ElementSet seed(G.order());
  K.for_each([&](int t) { seed.set(G.conjugate(x, t)); });
  return close_set(G, seed);
}

// <x> subnormal in K, by the descending normal-closure chain.
inline bool subnormal_oracle(const FiniteGroup& G, int x, const ElementSet& K) {
  ElementSet cyc = close_set(G, ElementSet::of(G.order(), {x}));
  ElementSet cur = K;
  for (;;) {
    if (cur == cyc) return true;
    ElementSet next = normal_closure_oracle(G, cur, x);
    if (next == cur) return false;
    cur = next;
  }
}

inline ElementSet subnormalizer_oracle(const FiniteGroup& G, int x) {
  ElementSet out(G.order());
  for (int g = 0; g < G.order(); ++g) {
    ElementSet pair = close_set(G, ElementSet::of(G.order(), {x, g}));
    if (subnormal_oracle(G, x, pair)) out.set(g);
  }
  return out;
}

// Solvability via the derived series.
inline bool solvable_bruteforce(const FiniteGroup& G) {
  ElementSet H = G.full_set();
  for (;;) {
    ElementSet comms(G.order());
    H.for_each([&](int a) { H.for_each([&](int b) { comms.set(G.commutator(a, b)); }); });
    ElementSet derived = close_set(G, comms);
    if (derived == H) return H.count() == 1;
    H = derived;
  }
}

// Nilpotency via "every Sylow subgroup is normal", a different
// characterization than either central series.
inline bool nilpotent_sylow_oracle(const FiniteGroup& G) {
  for (int p : G.prime_divisors())
    if (!nilgraph::is_normal_in(G, G.full_set(), nilgraph::sylow_subgroup(G, p)))
      return false;
  return true;
}

}  // namespace oracle
