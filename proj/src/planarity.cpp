#include <algorithm>
#include <limits>
#include <utility>
#include <vector>

#include "nilgraph/elemset.hpp"
#include "nilgraph/graph.hpp"

namespace nilgraph {
namespace {

struct Edge {
  int u, v;
};

// Hopcroft-Tarjan biconnected components; each block comes out as an edge
// list. Planarity is decided per block: a graph is planar iff every block is.
struct BlockFinder {
  const std::vector<std::vector<int>>& adj;
  std::vector<int> disc, low, parent;
  std::vector<Edge> estack;
  std::vector<std::vector<Edge>> blocks;
  int timer = 0;

  explicit BlockFinder(const std::vector<std::vector<int>>& a)
      : adj(a), disc(a.size(), -1), low(a.size(), 0), parent(a.size(), -1) {}

  void run() {
    for (int r = 0; r < int(adj.size()); ++r)
      if (disc[r] < 0) dfs(r);
  }

  void dfs(int u) {
    disc[u] = low[u] = timer++;
    for (int v : adj[u]) {
      if (disc[v] < 0) {
        parent[v] = u;
        estack.push_back({u, v});
        dfs(v);
        low[u] = std::min(low[u], low[v]);
        if (low[v] >= disc[u]) {
          std::vector<Edge> blk;
          while (true) {
            Edge e = estack.back();
            estack.pop_back();
            blk.push_back(e);
            if (e.u == u && e.v == v) break;
          }
          blocks.push_back(std::move(blk));
        }
      } else if (v != parent[u] && disc[v] < disc[u]) {
        estack.push_back({u, v});
        low[u] = std::min(low[u], disc[v]);
      }
    }
  }
};

struct Face {
  std::vector<int> order;  // boundary as a simple vertex cycle
  ElementSet members;
};

// Demoucron-Malgrange-Pertuiset planarity for one biconnected block on
// local vertices 0..n-1 with n >= 3 and m <= 3n-6. Start from any cycle,
// then repeatedly pick a fragment with the fewest admissible faces and draw
// one of its paths into such a face, splitting it. A fragment with no
// admissible face certifies nonplanarity.
bool demoucron(int n, const std::vector<std::vector<int>>& adj, long long m) {
  // Initial cycle: first DFS back edge closes one (biconnected => exists).
  std::vector<int> par(n, -1), disc(n, -1), cyc;
  {
    std::vector<std::pair<int, int>> st;
    st.push_back({0, 0});
    disc[0] = 0;
    int timer = 1;
    while (!st.empty() && cyc.empty()) {
      auto& [u, it] = st.back();
      if (it >= int(adj[u].size())) {
        st.pop_back();
        continue;
      }
      int v = adj[u][it++];
      if (disc[v] < 0) {
        par[v] = u;
        disc[v] = timer++;
        st.push_back({v, 0});
      } else if (v != par[u] && disc[v] < disc[u]) {
        for (int w = u; w != v; w = par[w]) cyc.push_back(w);
        cyc.push_back(v);
      }
    }
  }

  std::vector<char> embv(n, 0);
  std::vector<ElementSet> embadj(n, ElementSet(n));
  long long embedded = 0;
  auto embed_edge = [&](int a, int b) {
    embadj[a].set(b);
    embadj[b].set(a);
    ++embedded;
  };

  std::vector<Face> faces;
  {
    Face f;
    f.order = cyc;
    f.members = ElementSet(n);
    for (int v : cyc) {
      f.members.set(v);
      embv[v] = 1;
    }
    for (size_t i = 0; i < cyc.size(); ++i)
      embed_edge(cyc[i], cyc[(i + 1) % cyc.size()]);
    Face rev = f;
    std::reverse(rev.order.begin(), rev.order.end());
    faces.push_back(std::move(f));
    faces.push_back(std::move(rev));
  }

  struct Frag {
    ElementSet att;   // embedded attachment vertices (>= 2 in a block)
    ElementSet comp;  // unembedded interior (empty for a chord)
    int cu = -1, cv = -1;
    bool chord = false;
  };

  while (embedded < m) {
    std::vector<Frag> frags;
    for (int u = 0; u < n; ++u) {
      if (!embv[u]) continue;
      for (int v : adj[u])
        if (v > u && embv[v] && !embadj[u].test(v)) {
          Frag f{ElementSet(n), ElementSet(n), u, v, true};
          f.att.set(u);
          f.att.set(v);
          frags.push_back(std::move(f));
        }
    }
    {
      std::vector<char> seen(n, 0);
      for (int s = 0; s < n; ++s) {
        if (embv[s] || seen[s]) continue;
        Frag f{ElementSet(n), ElementSet(n), -1, -1, false};
        std::vector<int> q{s};
        seen[s] = 1;
        while (!q.empty()) {
          int u = q.back();
          q.pop_back();
          f.comp.set(u);
          for (int v : adj[u]) {
            if (embv[v])
              f.att.set(v);
            else if (!seen[v]) {
              seen[v] = 1;
              q.push_back(v);
            }
          }
        }
        frags.push_back(std::move(f));
      }
    }

    int pick = -1, pick_face = -1, pick_count = std::numeric_limits<int>::max();
    for (int i = 0; i < int(frags.size()); ++i) {
      int cnt = 0, firstf = -1;
      for (int j = 0; j < int(faces.size()); ++j)
        if (frags[i].att.is_subset_of(faces[j].members)) {
          if (firstf < 0) firstf = j;
          ++cnt;
        }
      if (cnt == 0) return false;
      if (cnt < pick_count) {
        pick_count = cnt;
        pick = i;
        pick_face = firstf;
      }
    }

    // One path across the chosen fragment, endpoints on the chosen face.
    const Frag& fr = frags[pick];
    std::vector<int> path;
    if (fr.chord) {
      path = {fr.cu, fr.cv};
    } else {
      int a = fr.att.first();
      std::vector<int> bpar(n, -2);
      std::vector<int> queue;
      for (int v : adj[a])
        if (fr.comp.test(v) && bpar[v] == -2) {
          bpar[v] = -1;
          queue.push_back(v);
        }
      int tip = -1, b = -1;
      for (size_t head = 0; head < queue.size() && tip < 0; ++head) {
        int u = queue[head];
        for (int v : adj[u]) {
          if (embv[v] && v != a) {
            tip = u;
            b = v;
            break;
          }
          if (!embv[v] && fr.comp.test(v) && bpar[v] == -2) {
            bpar[v] = u;
            queue.push_back(v);
          }
        }
      }
      for (int w = tip; w >= 0; w = bpar[w]) path.push_back(w);
      path.push_back(a);
      std::reverse(path.begin(), path.end());
      path.push_back(b);
    }

    // Split the face along the path: forward arc + reversed interior, and
    // backward arc + interior.
    Face F = std::move(faces[pick_face]);
    faces.erase(faces.begin() + pick_face);
    int k = int(F.order.size());
    int ia = -1, ib = -1;
    for (int t = 0; t < k; ++t) {
      if (F.order[t] == path.front()) ia = t;
      if (F.order[t] == path.back()) ib = t;
    }
    std::vector<int> interior(path.begin() + 1, path.end() - 1);
    Face A, B;
    for (int t = ia;; t = (t + 1) % k) {
      A.order.push_back(F.order[t]);
      if (t == ib) break;
    }
    A.order.insert(A.order.end(), interior.rbegin(), interior.rend());
    for (int t = ib;; t = (t + 1) % k) {
      B.order.push_back(F.order[t]);
      if (t == ia) break;
    }
    B.order.insert(B.order.end(), interior.begin(), interior.end());
    A.members = ElementSet(n);
    for (int v : A.order) A.members.set(v);
    B.members = ElementSet(n);
    for (int v : B.order) B.members.set(v);

    for (size_t t = 0; t + 1 < path.size(); ++t) embed_edge(path[t], path[t + 1]);
    for (int w : interior) embv[w] = 1;
    faces.push_back(std::move(A));
    faces.push_back(std::move(B));
  }
  return true;
}

}  // namespace

bool is_planar_adj(const std::vector<ElementSet>& adjacency) {
  int n = int(adjacency.size());
  if (n <= 4) return true;
  long long m = 0;
  for (const auto& row : adjacency) m += row.count();
  m /= 2;
  if (m == 0) return true;
  if (m > 3LL * n - 6) return false;

  std::vector<std::vector<int>> adj(n);
  for (int u = 0; u < n; ++u)
    adjacency[u].for_each([&](int v) { adj[u].push_back(v); });

  BlockFinder bf(adj);
  bf.run();
  for (const auto& blk : bf.blocks) {
    std::vector<int> local(n, -1), verts;
    for (const Edge& e : blk) {
      if (local[e.u] < 0) {
        local[e.u] = int(verts.size());
        verts.push_back(e.u);
      }
      if (local[e.v] < 0) {
        local[e.v] = int(verts.size());
        verts.push_back(e.v);
      }
    }
    int k = int(verts.size());
    if (k <= 4) continue;
    long long mb = (long long)blk.size();
    if (mb > 3LL * k - 6) return false;
    std::vector<std::vector<int>> ladj(k);
    for (const Edge& e : blk) {
      ladj[local[e.u]].push_back(local[e.v]);
      ladj[local[e.v]].push_back(local[e.u]);
    }
    if (!demoucron(k, ladj, mb)) return false;
  }
  return true;
}

bool is_planar(const NnGraph& g) { return is_planar_adj(g.adjacency); }

}  // namespace nilgraph
