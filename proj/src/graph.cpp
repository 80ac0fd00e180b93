#include "weyl/graph.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <queue>

namespace weyl {

std::vector<GenSet> graph_components(const UGraph& g) {
  std::vector<GenSet> comps;
  std::vector<bool> used(g.n, false);
  for (int s = 0; s < g.n; ++s) {
    if (used[s]) continue;
    GenSet comp = 0;
    std::vector<int> stack{s};
    used[s] = true;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp |= GenSet{1} << v;
      for (int u = 0; u < g.n; ++u)
        if (!used[u] && g.has_edge(v, u)) {
          used[u] = true;
          stack.push_back(u);
        }
    }
    comps.push_back(comp);
  }
  return comps;
}

namespace {

std::vector<int> lexbfs_order(const UGraph& g) {
  std::vector<std::vector<int>> label(g.n);
  std::vector<bool> done(g.n, false);
  std::vector<int> order;
  for (int step = 0; step < g.n; ++step) {
    int best = -1;
    for (int v = 0; v < g.n; ++v) {
      if (done[v]) continue;
      if (best < 0 || label[v] > label[best]) best = v;
    }
    done[best] = true;
    order.push_back(best);
    for (int u = 0; u < g.n; ++u)
      if (!done[u] && g.has_edge(best, u)) label[u].push_back(g.n - step);
  }
  return order;
}

// Shortest u-w path avoiding `banned`; empty if none. A shortest path in
// the restricted graph is induced there.
std::vector<int> restricted_path(const UGraph& g, int u, int w,
                                 GenSet banned) {
  std::vector<int> prev(g.n, -1);
  std::queue<int> q;
  q.push(u);
  prev[u] = u;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    if (v == w) break;
    for (int x = 0; x < g.n; ++x) {
      if (prev[x] >= 0 || !g.has_edge(v, x)) continue;
      if ((banned >> x) & 1u) continue;
      prev[x] = v;
      q.push(x);
    }
  }
  if (prev[w] < 0) return {};
  std::vector<int> path;
  for (int v = w; v != u; v = prev[v]) path.push_back(v);
  path.push_back(u);
  std::reverse(path.begin(), path.end());
  return path;
}

std::vector<int> chordless_cycle_through(const UGraph& g, int v, int u,
                                         int w) {
  GenSet banned = (g.adj[v] | (GenSet{1} << v)) & ~(GenSet{1} << u) &
                  ~(GenSet{1} << w);
  std::vector<int> path = restricted_path(g, u, w, banned);
  if (path.empty()) return {};
  path.insert(path.begin(), v);
  return path;
}

std::vector<int> find_chordless_cycle(const UGraph& g) {
  for (int v = 0; v < g.n; ++v)
    for (int u = 0; u < g.n; ++u)
      for (int w = u + 1; w < g.n; ++w) {
        if (u == v || w == v) continue;
        if (!g.has_edge(v, u) || !g.has_edge(v, w) || g.has_edge(u, w))
          continue;
        auto c = chordless_cycle_through(g, v, u, w);
        if (!c.empty()) return c;
      }
  return {};
}

}  // namespace

ChordalityResult is_chordal(const UGraph& g) {
  std::vector<int> order = lexbfs_order(g);
  std::reverse(order.begin(), order.end());  // elimination order
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[order[i]] = i;
  for (int i = 0; i < g.n; ++i) {
    int v = order[i];
    int u = -1;
    for (int x = 0; x < g.n; ++x)
      if (g.has_edge(v, x) && pos[x] > i && (u < 0 || pos[x] < pos[u]))
        u = x;
    if (u < 0) continue;
    for (int w = 0; w < g.n; ++w) {
      if (w == u || !g.has_edge(v, w) || pos[w] <= i) continue;
      if (!g.has_edge(u, w)) {
        // v's later neighborhood is not a clique; extract a witness.
        auto cycle = chordless_cycle_through(g, v, u, w);
        if (cycle.empty()) cycle = find_chordless_cycle(g);
        return {false, {}, cycle};
      }
    }
  }
  return {true, order, {}};
}

bool is_chordal_bruteforce(const UGraph& g) {
  // An induced cycle of length >= 4 exists iff some subset induces a
  // 2-regular connected graph on >= 4 vertices.
  for (GenSet sub = 0; sub < (GenSet{1} << g.n); ++sub) {
    if (popcount(sub) < 4) continue;
    bool cycle = true;
    for (int v = 0; v < g.n && cycle; ++v)
      if ((sub >> v) & 1u)
        if (popcount(g.adj[v] & sub) != 2) cycle = false;
    if (!cycle) continue;
    // connectivity of the induced subgraph
    int start = std::countr_zero(sub);
    GenSet seen = GenSet{1} << start;
    std::vector<int> stack{start};
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      GenSet next = g.adj[v] & sub & ~seen;
      while (next) {
        int u = std::countr_zero(next);
        next &= next - 1;
        seen |= GenSet{1} << u;
        stack.push_back(u);
      }
    }
    if (seen == sub) return false;
  }
  return true;
}

namespace {

void bron_kerbosch(const UGraph& g, GenSet r, GenSet p, GenSet x,
                   std::vector<GenSet>& out) {
  if (p == 0 && x == 0) {
    out.push_back(r);
    return;
  }
  int pivot = -1, best = -1;
  GenSet px = p | x;
  for (GenSet t = px; t; t &= t - 1) {
    int v = std::countr_zero(t);
    int deg = popcount(p & g.adj[v]);
    if (deg > best) {
      best = deg;
      pivot = v;
    }
  }
  GenSet cand = p & ~g.adj[pivot];
  for (GenSet t = cand; t; t &= t - 1) {
    int v = std::countr_zero(t);
    GenSet vb = GenSet{1} << v;
    bron_kerbosch(g, r | vb, p & g.adj[v], x & g.adj[v], out);
    p &= ~vb;
    x |= vb;
  }
}

}  // namespace

std::vector<GenSet> maximal_cliques(const UGraph& g) {
  std::vector<GenSet> out;
  if (g.n == 0) return out;
  bron_kerbosch(g, 0, full_set(g.n), 0, out);
  std::sort(out.begin(), out.end(), subset_size_lex_less);
  return out;
}

CliqueTree clique_tree(const UGraph& g) {
  auto chord = is_chordal(g);
  if (!chord.chordal)
    throw Error(ErrorCode::NotChordal, "graph has a chordless cycle");
  CliqueTree t;
  t.cliques = maximal_cliques(g);
  const int k = static_cast<int>(t.cliques.size());
  struct E {
    int w, i, j;
  };
  std::vector<E> es;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j)
      es.push_back({popcount(t.cliques[i] & t.cliques[j]), i, j});
  std::stable_sort(es.begin(), es.end(), [](const E& a, const E& b) {
    if (a.w != b.w) return a.w > b.w;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  });
  std::vector<int> uf(k);
  std::iota(uf.begin(), uf.end(), 0);
  auto find = [&](int v) {
    while (uf[v] != v) v = uf[v] = uf[uf[v]];
    return v;
  };
  for (const E& e : es) {
    int a = find(e.i), b = find(e.j);
    if (a == b) continue;
    uf[a] = b;
    t.edges.push_back({e.i, e.j});
  }
  if (!has_clique_intersection_property(t))
    throw Error(ErrorCode::Internal,
                "clique tree lacks the intersection property");
  return t;
}

bool has_clique_intersection_property(const CliqueTree& t) {
  const int k = static_cast<int>(t.cliques.size());
  std::vector<std::vector<int>> adj(k);
  for (auto [a, b] : t.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      GenSet meet = t.cliques[i] & t.cliques[j];
      // path i -> j by DFS
      std::vector<int> prev(k, -1), stack{i};
      prev[i] = i;
      while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : adj[v])
          if (prev[u] < 0) {
            prev[u] = v;
            stack.push_back(u);
          }
      }
      if (prev[j] < 0) return false;  // not even connected
      for (int v = j; v != i; v = prev[v])
        if ((meet & ~t.cliques[v]) != 0) return false;
    }
  return true;
}

}  // namespace weyl
