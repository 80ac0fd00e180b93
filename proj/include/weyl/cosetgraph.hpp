#ifndef WEYL_COSETGRAPH_HPP
#define WEYL_COSETGRAPH_HPP

#include <string>
#include <vector>

#include "weyl/decompose.hpp"
#include "weyl/words.hpp"

namespace weyl {

// Minimal-length representative of the coset (element of nf's coset) w W_J:
// greedy right-division by descents inside J.
Word minimal_coset_rep(const WordEngine& eng, const Word& nf, GenSet J);

// Residue graph of a graph of special subgroups over a ball of the
// Coxeter complex: one vertex per residue w W_{S_v}, one edge per residue
// w W_{S_e}, endpoints given by enlarging the edge residue.
struct CosetGraph {
  struct Vertex {
    int gog_vertex;
    Word rep;
  };
  struct Edge {
    int gog_edge;
    Word rep;
    int origin;    // index into vertices
    int terminus;  // index into vertices
  };
  int radius;
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
};

CosetGraph coset_graph(const WordEngine& eng,
                       const GraphOfSpecialSubgroups& gog, int radius,
                       std::size_t cap = 1000000);

struct TreeVerdict {
  enum Kind { AcyclicConnected, CycleFound, Disconnected } kind;
  std::vector<int> cycle;  // vertex indices when kind == CycleFound
  std::string caveat;      // ball-truncation disclaimer
};

// Cycle detection first, then connectivity; verdict applies to the ball
// only (necessary, not sufficient, for global tree-ness).
TreeVerdict is_tree_within_ball(const CosetGraph& g);

// Cayley graph of the ball of radius R with generator edges.
struct ChamberGraph {
  int radius;
  Ball ball;
  std::vector<std::pair<int, int>> edges;  // indices into ball.elements
};

ChamberGraph chamber_graph(const WordEngine& eng, int radius,
                           std::size_t cap = 1000000);

// Number of components of ball(R) minus ball(r) meeting the sphere of
// radius R; 0 when that sphere is empty. Lower-bound heuristic for the
// number of ends.
int ends_estimate(const ChamberGraph& g, int r, int R);

}  // namespace weyl

#endif
