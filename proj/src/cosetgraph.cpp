#include "weyl/cosetgraph.hpp"

#include <algorithm>
#include <map>

namespace weyl {

Word minimal_coset_rep(const WordEngine& eng, const Word& nf, GenSet J) {
  Word w = nf;
  for (;;) {
    bool divided = false;
    for (int s = 0; s < eng.system().rank(); ++s) {
      if (!((J >> s) & 1u)) continue;
      Word ws = eng.multiply(w, s);
      if (ws.size() < w.size()) {
        w = std::move(ws);
        divided = true;
        break;
      }
    }
    if (!divided) return w;
  }
}

CosetGraph coset_graph(const WordEngine& eng,
                       const GraphOfSpecialSubgroups& gog, int radius,
                       std::size_t cap) {
  CosetGraph g;
  g.radius = radius;
  Ball ball = enumerate_ball(eng, radius, cap);

  std::map<std::pair<int, Word>, int> vertex_index;
  auto vertex_of = [&](int v, const Word& w) {
    Word rep = minimal_coset_rep(eng, w, gog.vertex_sets[v]);
    auto key = std::make_pair(v, rep);
    auto it = vertex_index.find(key);
    if (it != vertex_index.end()) return it->second;
    int id = static_cast<int>(g.vertices.size());
    vertex_index[key] = id;
    g.vertices.push_back({v, rep});
    return id;
  };

  for (const Word& w : ball.elements)
    for (int v = 0; v < static_cast<int>(gog.vertex_sets.size()); ++v)
      vertex_of(v, w);

  std::map<std::pair<int, Word>, int> edge_index;
  for (const Word& w : ball.elements)
    for (int e = 0; e < static_cast<int>(gog.edges.size()); ++e) {
      Word rep = minimal_coset_rep(eng, w, gog.edges[e].set);
      auto key = std::make_pair(e, rep);
      if (edge_index.count(key)) continue;
      edge_index[key] = static_cast<int>(g.edges.size());
      // o(w W_{S_e}) = w W_{S_{o(e)}}, likewise for the terminus
      int o = vertex_of(gog.edges[e].u, rep);
      int t = vertex_of(gog.edges[e].v, rep);
      g.edges.push_back({e, rep, o, t});
    }
  return g;
}

TreeVerdict is_tree_within_ball(const CosetGraph& g) {
  TreeVerdict verdict;
  verdict.caveat =
      "verdict holds for the radius-" + std::to_string(g.radius) +
      " ball only: necessary, not sufficient, for the full graph to be "
      "a tree";
  const int n = static_cast<int>(g.vertices.size());
  std::vector<std::vector<std::pair<int, int>>> adj(n);  // (neighbor, edge)
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int a = g.edges[e].origin, b = g.edges[e].terminus;
    adj[a].push_back({b, e});
    adj[b].push_back({a, e});
  }
  // DFS cycle search; a repeated vertex reached by a different edge
  // residue closes a cycle.
  std::vector<int> state(n, -2), prev_vertex(n, -1), prev_edge(n, -1);
  for (int root = 0; root < n; ++root) {
    if (state[root] != -2) continue;
    std::vector<int> stack{root};
    state[root] = root;
    prev_vertex[root] = root;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (auto [u, e] : adj[v]) {
        if (e == prev_edge[v] && u == prev_vertex[v]) continue;
        if (state[u] == -2) {
          state[u] = root;
          prev_vertex[u] = v;
          prev_edge[u] = e;
          stack.push_back(u);
        } else {
          // walk both ancestries up to the root to produce a witness
          std::vector<int> pv, pu{u};
          for (int x = v; x != root; x = prev_vertex[x]) pv.push_back(x);
          pv.push_back(root);
          for (int x = u; x != root; x = prev_vertex[x]) pu.push_back(x);
          pu.push_back(root);
          while (pv.size() >= 2 && pu.size() >= 2 &&
                 pv[pv.size() - 2] == pu[pu.size() - 2]) {
            pv.pop_back();
            pu.pop_back();
          }
          verdict.kind = TreeVerdict::CycleFound;
          verdict.cycle = pv;
          for (auto it = pu.rbegin(); it != pu.rend(); ++it)
            if (verdict.cycle.empty() || *it != verdict.cycle.back())
              verdict.cycle.push_back(*it);
          if (verdict.cycle.size() > 1 &&
              verdict.cycle.front() == verdict.cycle.back())
            verdict.cycle.pop_back();
          return verdict;
        }
      }
    }
  }
  for (int v = 0; v < n; ++v)
    if (state[v] != (n > 0 ? state[0] : 0)) {
      verdict.kind = TreeVerdict::Disconnected;
      return verdict;
    }
  verdict.kind = TreeVerdict::AcyclicConnected;
  return verdict;
}

ChamberGraph chamber_graph(const WordEngine& eng, int radius,
                           std::size_t cap) {
  ChamberGraph g;
  g.radius = radius;
  g.ball = enumerate_ball(eng, radius, cap);
  for (int i = 0; i < static_cast<int>(g.ball.elements.size()); ++i)
    for (int s = 0; s < eng.system().rank(); ++s) {
      Word w = eng.multiply(g.ball.elements[i], s);
      auto it = g.ball.index.find(w);
      if (it != g.ball.index.end() && it->second > i)
        g.edges.push_back({i, it->second});
    }
  return g;
}

int ends_estimate(const ChamberGraph& g, int r, int R) {
  if (!(0 <= r && r < R && R == g.radius))
    throw Error(ErrorCode::BadRadii, "need 0 <= r < R = ball radius");
  const int n = static_cast<int>(g.ball.elements.size());
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : g.edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<int> comp(n, -1);
  int ncomp = 0;
  auto outside = [&](int v) {
    return static_cast<int>(g.ball.elements[v].size()) > r;
  };
  for (int v = 0; v < n; ++v) {
    if (!outside(v) || comp[v] >= 0) continue;
    std::vector<int> stack{v};
    comp[v] = ncomp;
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (int u : adj[x])
        if (outside(u) && comp[u] < 0) {
          comp[u] = ncomp;
          stack.push_back(u);
        }
    }
    ++ncomp;
  }
  std::vector<bool> meets_sphere(ncomp, false);
  for (int v = 0; v < n; ++v)
    if (comp[v] >= 0 && static_cast<int>(g.ball.elements[v].size()) == R)
      meets_sphere[comp[v]] = true;
  int count = 0;
  for (bool b : meets_sphere) count += b;
  return count;
}

}  // namespace weyl
