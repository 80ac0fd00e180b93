#ifndef WEYL_GRAPH_HPP
#define WEYL_GRAPH_HPP

#include <vector>

#include "weyl/coxeter.hpp"

namespace weyl {

// Simple undirected graph on vertices 0..n-1, n <= 31, adjacency rows
// as bitsets. Big enough for presentation diagrams and test graphs.
struct UGraph {
  int n = 0;
  std::vector<GenSet> adj;

  explicit UGraph(int n_ = 0) : n(n_), adj(n_, 0) {}

  void add_edge(int u, int v) {
    adj[u] |= GenSet{1} << v;
    adj[v] |= GenSet{1} << u;
  }
  bool has_edge(int u, int v) const {
    return (adj[u] >> v) & 1u;
  }
};

// Connected components in first-seen vertex order.
std::vector<GenSet> graph_components(const UGraph& g);

struct ChordalityResult {
  bool chordal;
  std::vector<int> elimination_order;  // perfect elimination order if chordal
  std::vector<int> witness_cycle;      // induced cycle >= 4 if not
};

// LexBFS followed by perfect-elimination verification.
ChordalityResult is_chordal(const UGraph& g);

// Brute-force chordality: searches for an induced cycle of length >= 4.
// Exponential; for cross-checking on small graphs only.
bool is_chordal_bruteforce(const UGraph& g);

// Maximal cliques, Bron-Kerbosch with pivoting, sorted by (size, lex).
std::vector<GenSet> maximal_cliques(const UGraph& g);

struct CliqueTree {
  std::vector<GenSet> cliques;
  std::vector<std::pair<int, int>> edges;  // |cliques| - 1 of them
};

// Maximum-weight spanning tree of the complete clique graph, weights =
// intersection sizes; zero-weight edges are allowed so that the result
// spans even a disconnected graph. Verifies the clique intersection
// property. Throws NotChordal on non-chordal input.
CliqueTree clique_tree(const UGraph& g);

// True iff for every pair of cliques the intersection is contained in
// every clique on the tree path between them.
bool has_clique_intersection_property(const CliqueTree& t);

}  // namespace weyl

#endif
