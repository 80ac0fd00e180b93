#ifndef WEYL_DECOMPOSE_HPP
#define WEYL_DECOMPOSE_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "weyl/catalog.hpp"
#include "weyl/coxeter.hpp"
#include "weyl/graph.hpp"

namespace weyl {

// Induced subgraph of the presentation diagram on S \ J, with vertex i of
// the graph corresponding to generator verts[i].
struct XiGraph {
  std::vector<int> verts;
  UGraph graph;
  std::vector<GenSet> components;  // as subsets of the original S
};

XiGraph xi_graph(const CoxeterSystem& sys, GenSet J);

// S = down u up, meet = down n up, m = inf across the two differences.
struct InfinityDecomposition {
  GenSet down;
  GenSet up;
  GenSet meet;
};

// Scans spherical J < S by (size, lex); first J with Xi_J disconnected
// wins. down = first component of Xi_J together with J.
std::optional<InfinityDecomposition> find_spherical_infinity_decomposition(
    const CoxeterSystem& sys);

enum class Ends { Zero, One, Two, Infinite };

const char* ends_name(Ends e);

// 0 iff spherical; 1 if no spherical infinity-decomposition; 2 exactly
// when the group is virtually Z (one infinite component, of rank 2 with
// m = inf, all others spherical); infinity otherwise.
Ends ends(const CoxeterSystem& sys);

// Tree of special subgroups: vertex and edge labels are subsets of S,
// every edge label contained in both endpoint labels.
struct GraphOfSpecialSubgroups {
  struct Edge {
    int u;
    int v;
    GenSet set;
  };
  std::vector<GenSet> vertex_sets;
  std::vector<Edge> edges;
  bool visual = false;
};

enum class DecompPredicate { Spherical, SphericalOrAffine, AtMostOneEnd };

using UserPredicate = std::function<bool(const CoxeterSystem&, GenSet)>;

// Clique tree of the presentation diagram mapped to special subgroups.
// Every maximal clique must satisfy the predicate.
GraphOfSpecialSubgroups visual_decomposition(const CoxeterSystem& sys,
                                             DecompPredicate pred);
GraphOfSpecialSubgroups visual_decomposition(const CoxeterSystem& sys,
                                             const UserPredicate& pred);

// Infinite, presentation diagram chordal, every maximal clique spherical.
bool is_virtually_free(const CoxeterSystem& sys);

// Iterated splitting along spherical infinity-decompositions until no
// vertex group splits. Vertex groups end up with at most one end; edge
// groups are spherical.
GraphOfSpecialSubgroups accessibility_tree(const CoxeterSystem& sys);

}  // namespace weyl

#endif
