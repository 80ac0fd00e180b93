#include "weyl/decompose.hpp"

#include <algorithm>
#include <bit>

namespace weyl {

XiGraph xi_graph(const CoxeterSystem& sys, GenSet J) {
  if ((J & ~sys.all()) != 0)
    throw Error(ErrorCode::UnknownGenerator, "subset not contained in S");
  if (J == sys.all())
    throw Error(ErrorCode::Invalid, "J must be a proper subset of S");
  XiGraph xi;
  for (int s = 0; s < sys.rank(); ++s)
    if (!((J >> s) & 1u)) xi.verts.push_back(s);
  xi.graph = UGraph(static_cast<int>(xi.verts.size()));
  for (size_t a = 0; a < xi.verts.size(); ++a)
    for (size_t b = a + 1; b < xi.verts.size(); ++b)
      if (sys.label(xi.verts[a], xi.verts[b]) != kInfLabel)
        xi.graph.add_edge(static_cast<int>(a), static_cast<int>(b));
  for (GenSet comp : graph_components(xi.graph)) {
    GenSet orig = 0;
    for (size_t a = 0; a < xi.verts.size(); ++a)
      if ((comp >> a) & 1u) orig |= GenSet{1} << xi.verts[a];
    xi.components.push_back(orig);
  }
  return xi;
}

namespace {

// Split search restricted to the generators in V.
std::optional<InfinityDecomposition> find_split(const CoxeterSystem& sys,
                                                GenSet V) {
  std::vector<GenSet> candidates;
  for (GenSet J : spherical_subsets(sys))
    if ((J & ~V) == 0 && J != V) candidates.push_back(J);
  // already (size, lex) sorted
  for (GenSet J : candidates) {
    // components of the presentation diagram induced on V \ J
    std::vector<int> verts;
    for (int s = 0; s < sys.rank(); ++s)
      if (((V >> s) & 1u) && !((J >> s) & 1u)) verts.push_back(s);
    UGraph g(static_cast<int>(verts.size()));
    for (size_t a = 0; a < verts.size(); ++a)
      for (size_t b = a + 1; b < verts.size(); ++b)
        if (sys.label(verts[a], verts[b]) != kInfLabel)
          g.add_edge(static_cast<int>(a), static_cast<int>(b));
    auto comps = graph_components(g);
    if (comps.size() < 2) continue;
    GenSet L = 0;
    for (size_t a = 0; a < verts.size(); ++a)
      if ((comps[0] >> a) & 1u) L |= GenSet{1} << verts[a];
    return InfinityDecomposition{L | J, V & ~L, J};
  }
  return std::nullopt;
}

}  // namespace

std::optional<InfinityDecomposition> find_spherical_infinity_decomposition(
    const CoxeterSystem& sys) {
  return find_split(sys, sys.all());
}

const char* ends_name(Ends e) {
  switch (e) {
    case Ends::Zero: return "0";
    case Ends::One: return "1";
    case Ends::Two: return "2";
    case Ends::Infinite: return "infinity";
  }
  return "?";
}

Ends ends(const CoxeterSystem& sys) {
  if (is_spherical(sys, sys.all())) return Ends::Zero;
  if (!find_spherical_infinity_decomposition(sys)) return Ends::One;
  int infinite_comps = 0;
  bool virtually_z = true;
  for (GenSet comp : sys.irreducible_components()) {
    if (is_spherical(sys, comp)) continue;
    ++infinite_comps;
    // virtually Z needs the unique infinite component to be the rank-2
    // system with m = inf
    if (popcount(comp) != 2) {
      virtually_z = false;
      continue;
    }
    int a = std::countr_zero(comp);
    int b = std::countr_zero(comp & (comp - 1));
    if (sys.label(a, b) != kInfLabel) virtually_z = false;
  }
  if (infinite_comps == 1 && virtually_z) return Ends::Two;
  return Ends::Infinite;
}

namespace {

GraphOfSpecialSubgroups clique_tree_to_gog(const CoxeterSystem& sys,
                                           const UserPredicate& pred) {
  UGraph g(sys.rank());
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      if (sys.label(i, j) != kInfLabel) g.add_edge(i, j);
  CliqueTree t = clique_tree(g);
  for (GenSet c : t.cliques)
    if (!pred(sys, c))
      throw Error(ErrorCode::CliquePredicateFailed, sys.subset_to_string(c));
  GraphOfSpecialSubgroups gog;
  gog.vertex_sets = t.cliques;
  for (auto [a, b] : t.edges)
    gog.edges.push_back({a, b, t.cliques[a] & t.cliques[b]});
  gog.visual = true;
  return gog;
}

}  // namespace

GraphOfSpecialSubgroups visual_decomposition(const CoxeterSystem& sys,
                                             const UserPredicate& pred) {
  return clique_tree_to_gog(sys, pred);
}

GraphOfSpecialSubgroups visual_decomposition(const CoxeterSystem& sys,
                                             DecompPredicate pred) {
  switch (pred) {
    case DecompPredicate::Spherical:
      return clique_tree_to_gog(sys, [](const CoxeterSystem& s, GenSet c) {
        return is_spherical(s, c);
      });
    case DecompPredicate::SphericalOrAffine:
      return clique_tree_to_gog(sys, [](const CoxeterSystem& s, GenSet c) {
        return is_positive_type(s, c);
      });
    case DecompPredicate::AtMostOneEnd:
      return clique_tree_to_gog(sys, [](const CoxeterSystem& s, GenSet c) {
        Ends e = ends(s.restrict_to(c));
        return e == Ends::Zero || e == Ends::One;
      });
  }
  throw Error(ErrorCode::Internal, "unreachable");
}

bool is_virtually_free(const CoxeterSystem& sys) {
  if (is_spherical(sys, sys.all())) return false;
  UGraph g(sys.rank());
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j)
      if (sys.label(i, j) != kInfLabel) g.add_edge(i, j);
  if (!is_chordal(g).chordal) return false;
  for (GenSet c : maximal_cliques(g))
    if (!is_spherical(sys, c)) return false;
  return true;
}

namespace {

GraphOfSpecialSubgroups single_vertex(GenSet V) {
  GraphOfSpecialSubgroups gog;
  gog.vertex_sets.push_back(V);
  gog.visual = true;
  return gog;
}

GraphOfSpecialSubgroups build_tree(const CoxeterSystem& sys, GenSet V) {
  auto split = find_split(sys, V);
  if (!split) return single_vertex(V);
  GraphOfSpecialSubgroups left = build_tree(sys, split->down);
  GraphOfSpecialSubgroups right = build_tree(sys, split->up);
  int off = static_cast<int>(left.vertex_sets.size());
  GraphOfSpecialSubgroups out = left;
  out.vertex_sets.insert(out.vertex_sets.end(), right.vertex_sets.begin(),
                         right.vertex_sets.end());
  for (auto e : right.edges) out.edges.push_back({e.u + off, e.v + off, e.set});
  // The meet is spherical, hence a clique of the presentation diagram, so
  // it survives intact into some vertex group on each side.
  auto attach = [&](int lo, int hi) {
    for (int i = lo; i < hi; ++i)
      if ((split->meet & ~out.vertex_sets[i]) == 0) return i;
    throw Error(ErrorCode::Internal, "no vertex group contains the meet");
  };
  out.edges.push_back({attach(0, off),
                       attach(off, static_cast<int>(out.vertex_sets.size())),
                       split->meet});
  out.visual = true;
  return out;
}

}  // namespace

GraphOfSpecialSubgroups accessibility_tree(const CoxeterSystem& sys) {
  return build_tree(sys, sys.all());
}

}  // namespace weyl
