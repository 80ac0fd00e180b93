#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "weyl/cosetgraph.hpp"
#include "weyl/davis.hpp"
#include "weyl/invariants.hpp"

namespace {

using nlohmann::ordered_json;
using namespace weyl;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Malformed, "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

CoxeterSystem load_system(const std::string& path) {
  return CoxeterSystem::parse(read_file(path));
}

ordered_json subset_json(const CoxeterSystem& sys, GenSet J) {
  ordered_json arr = ordered_json::array();
  for (int i = 0; i < sys.rank(); ++i)
    if ((J >> i) & 1u) arr.push_back(sys.name(i));
  return arr;
}

ordered_json cmd_classify(const CoxeterSystem& sys) {
  ordered_json out;
  out["rank"] = sys.rank();
  out["spherical"] = is_spherical(sys, sys.all());
  ordered_json comps = ordered_json::array();
  for (GenSet comp : sys.irreducible_components()) {
    TypeLabel t = classify_irreducible(sys.restrict_to(comp));
    ordered_json c;
    c["generators"] = subset_json(sys, comp);
    c["family"] = type_family_name(t.family);
    if (!t.name.empty()) c["name"] = t.name;
    comps.push_back(c);
  }
  out["components"] = comps;
  Signature sig = bilinear_signature(sys);
  out["signature"] = {{"n_plus", sig.n_plus},
                      {"n_minus", sig.n_minus},
                      {"n_zero", sig.n_zero},
                      {"advisory", true}};
  out["provenance"] = {{"classification", "CATALOG_ISOMORPHISM"},
                       {"signature", "FLOATING_ADVISORY"}};
  return out;
}

ordered_json vcd_json(const VcdBounds& v) {
  ordered_json j;
  if (v.exact)
    j["exact"] = v.lo;
  else
    j["interval"] = {v.lo, v.hi};
  j["provenance"] = v.provenance;
  return j;
}

ordered_json cmd_invariants(const CoxeterSystem& sys) {
  InvariantReport rep = invariant_report(sys);
  ordered_json out;
  out["rank"] = sys.rank();
  out["ends"] = ends_name(rep.ends);
  out["cd_q"] = rep.cd_q;
  out["alg_rank"] = rep.alg_rank;
  out["vcd"] = vcd_json(rep.vcd);
  out["flat_rank_note"] = rep.flat_rank_note;
  out["krammer_note"] = rep.krammer_note;
  out["weyl_notes"] = rep.weyl_notes;
  out["provenance"] = {{"ends", "XI_J_ROUTE"},
                       {"cd_q", "DAVIS_ROUTE"},
                       {"alg_rank", "KRAMMER_RULE"},
                       {"vcd", rep.vcd.provenance}};
  return out;
}

ordered_json cmd_ends(const CoxeterSystem& sys) {
  ordered_json out;
  out["ends"] = ends_name(ends(sys));
  if (auto d = find_spherical_infinity_decomposition(sys)) {
    out["decomposition"] = {{"down", subset_json(sys, d->down)},
                            {"up", subset_json(sys, d->up)},
                            {"meet", subset_json(sys, d->meet)}};
  }
  out["h1_route_agrees"] = (more_than_one_end_h1(sys) ==
                            (find_spherical_infinity_decomposition(sys)
                                 .has_value()));
  out["provenance"] = {{"ends", "XI_J_ROUTE"},
                       {"cross_check", "DAVIS_ROUTE"}};
  return out;
}

ordered_json gog_json(const CoxeterSystem& sys,
                      const GraphOfSpecialSubgroups& g) {
  ordered_json out;
  ordered_json vs = ordered_json::array();
  for (GenSet v : g.vertex_sets) vs.push_back(subset_json(sys, v));
  out["vertices"] = vs;
  ordered_json es = ordered_json::array();
  for (const auto& e : g.edges)
    es.push_back({e.u, e.v, subset_json(sys, e.set)});
  out["edges"] = es;
  out["visual"] = g.visual;
  return out;
}

std::string gog_dot(const CoxeterSystem& sys,
                    const GraphOfSpecialSubgroups& g) {
  std::ostringstream out;
  out << "graph decomposition {\n";
  for (size_t i = 0; i < g.vertex_sets.size(); ++i)
    out << "  v" << i << " [label=\"" << sys.subset_to_string(g.vertex_sets[i])
        << "\"];\n";
  for (const auto& e : g.edges)
    out << "  v" << e.u << " -- v" << e.v << " [label=\""
        << sys.subset_to_string(e.set) << "\"];\n";
  out << "}\n";
  return out.str();
}

GraphOfSpecialSubgroups load_gog(const CoxeterSystem& sys,
                                 const std::string& path) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::Malformed, e.what());
  }
  if (!doc.is_object() || !doc.contains("vertices"))
    throw Error(ErrorCode::Malformed, "gog file needs \"vertices\"");
  auto to_set = [&](const nlohmann::json& arr) {
    if (!arr.is_array())
      throw Error(ErrorCode::Malformed, "generator set must be an array");
    GenSet s = 0;
    for (const auto& n : arr)
      s |= GenSet{1} << sys.index_of(n.get<std::string>());
    return s;
  };
  GraphOfSpecialSubgroups g;
  for (const auto& v : doc["vertices"]) g.vertex_sets.push_back(to_set(v));
  if (doc.contains("edges"))
    for (const auto& e : doc["edges"]) {
      if (!e.is_array() || e.size() != 3)
        throw Error(ErrorCode::Malformed, "edge must be [u, v, [names]]");
      int u = e[0].get<int>(), v = e[1].get<int>();
      int n = static_cast<int>(g.vertex_sets.size());
      if (u < 0 || u >= n || v < 0 || v >= n)
        throw Error(ErrorCode::Malformed, "edge endpoint out of range");
      GenSet s = to_set(e[2]);
      if ((s & ~g.vertex_sets[u]) || (s & ~g.vertex_sets[v]))
        throw Error(ErrorCode::Malformed,
                    "edge set not contained in endpoint sets");
      g.edges.push_back({u, v, s});
    }
  return g;
}

ordered_json cmd_davis(const CoxeterSystem& sys) {
  ChamberComplex k = chamber_complex(sys);
  ordered_json out;
  ordered_json vs = ordered_json::array();
  for (GenSet v : k.vertices) vs.push_back(subset_json(sys, v));
  out["vertices"] = vs;
  out["dim"] = k.dim();
  ordered_json table = ordered_json::array();
  for (GenSet J : k.vertices) {
    ordered_json row;
    row["J"] = subset_json(sys, J);
    row["dims"] = relative_cohomology(sys, J);
    table.push_back(row);
  }
  out["table"] = table;
  out["rational_cd"] = rational_cd(sys);
  out["more_than_one_end_h1"] = more_than_one_end_h1(sys);
  out["provenance"] = {{"table", "DAVIS_ROUTE"}};
  return out;
}

std::string davis_tsv(const CoxeterSystem& sys) {
  std::ostringstream out;
  out << "J\tdims\n";
  for (GenSet J : spherical_subsets(sys)) {
    out << sys.subset_to_string(J) << "\t";
    auto dims = relative_cohomology(sys, J);
    for (size_t i = 0; i < dims.size(); ++i)
      out << (i ? "," : "") << dims[i];
    out << "\n";
  }
  return out.str();
}

ordered_json cmd_growth(const CoxeterSystem& sys, int radius,
                        std::size_t ball_cap, std::size_t braid_cap) {
  WordEngine eng(sys, braid_cap);
  Ball ball = enumerate_ball(eng, radius, ball_cap);
  ordered_json out;
  out["radius"] = radius;
  out["counts"] = ball.counts;
  std::uint64_t total = 0;
  for (auto c : ball.counts) total += c;
  out["total"] = total;
  out["provenance"] = {{"counts", "BALL_ENUMERATION"}};
  return out;
}

ordered_json cmd_double_cosets(const CoxeterSystem& sys,
                               const std::string& thickness_csv,
                               std::uint64_t bound, std::size_t ball_cap,
                               std::size_t braid_cap) {
  std::vector<std::uint64_t> q;
  std::stringstream ss(thickness_csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      q.push_back(std::stoull(item));
    } catch (const std::exception&) {
      throw Error(ErrorCode::InvalidThickness, "bad thickness value " + item);
    }
  }
  WordEngine eng(sys, braid_cap);
  auto counts = weighted_element_counts(eng, q, bound, ball_cap);
  ordered_json out;
  out["bound"] = bound;
  ordered_json table = ordered_json::object();
  for (auto [n, c] : counts) table[std::to_string(n)] = c;
  out["counts"] = table;
  out["provenance"] = {{"counts", "LOG2_BOUNDED_BALL"}};
  return out;
}

std::string coset_graph_dot(const CoxeterSystem& sys, const CosetGraph& g) {
  std::ostringstream out;
  out << "graph cosets {\n";
  for (size_t i = 0; i < g.vertices.size(); ++i)
    out << "  n" << i << " [label=\"" << g.vertices[i].gog_vertex << ":"
        << word_to_string(sys, g.vertices[i].rep) << "\"];\n";
  for (const auto& e : g.edges)
    out << "  n" << e.origin << " -- n" << e.terminus << " [label=\""
        << word_to_string(sys, e.rep) << "\"];\n";
  out << "}\n";
  return out.str();
}

ordered_json coset_graph_json(const CoxeterSystem& sys, const CosetGraph& g) {
  ordered_json out;
  out["radius"] = g.radius;
  ordered_json vs = ordered_json::array();
  for (const auto& v : g.vertices)
    vs.push_back({{"gog_vertex", v.gog_vertex},
                  {"rep", word_to_string(sys, v.rep)}});
  out["vertices"] = vs;
  ordered_json es = ordered_json::array();
  for (const auto& e : g.edges)
    es.push_back({{"gog_edge", e.gog_edge},
                  {"rep", word_to_string(sys, e.rep)},
                  {"origin", e.origin},
                  {"terminus", e.terminus}});
  out["edges"] = es;
  TreeVerdict v = is_tree_within_ball(g);
  const char* kind = v.kind == TreeVerdict::AcyclicConnected
                         ? "ACYCLIC_CONNECTED"
                         : v.kind == TreeVerdict::CycleFound ? "CYCLE_FOUND"
                                                             : "DISCONNECTED";
  out["verdict"] = kind;
  if (v.kind == TreeVerdict::CycleFound) out["cycle"] = v.cycle;
  out["caveat"] = v.caveat;
  return out;
}

int error_exit_code(ErrorCode c) {
  switch (c) {
    case ErrorCode::LimitExceeded: return 2;
    case ErrorCode::Internal: return 3;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weyl-invariants of Coxeter systems"};
  app.require_subcommand(1);

  std::string input;
  bool each = false;
  app.add_option("-i,--input", input);
  app.add_flag("--each", each, "treat the input as a directory of systems");

  std::size_t ball_cap = 1000000;
  std::size_t braid_cap = 200000;
  app.add_option("--ball-cap", ball_cap, "element limit for ball enumeration");
  app.add_option("--braid-cap", braid_cap, "braid-class size limit");

  std::string format = "json";
  std::string predicate = "spherical";
  std::string strategy = "clique-tree";
  std::string gog_path;
  std::string thickness;
  bool table = false;
  int radius = 3;
  int small_r = 1;
  int big_r = 4;
  std::uint64_t bound = 1;

  auto add_input = [&](CLI::App* sub) {
    sub->fallthrough();
    sub->add_option("input", input, "system JSON file or, with --each, a "
                                    "directory of them");
  };

  auto* c_classify = app.add_subcommand("classify", "type of each component");
  add_input(c_classify);
  auto* c_inv = app.add_subcommand("invariants", "consolidated report");
  add_input(c_inv);
  auto* c_ends = app.add_subcommand("ends", "number of ends");
  add_input(c_ends);
  auto* c_dec = app.add_subcommand("decompose", "graph-of-groups splitting");
  add_input(c_dec);
  c_dec->add_option("--predicate", predicate)
      ->check(CLI::IsMember({"spherical", "affine", "one-ended"}));
  c_dec->add_option("--strategy", strategy)
      ->check(CLI::IsMember({"clique-tree", "iterated-split"}));
  c_dec->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  auto* c_davis = app.add_subcommand("davis", "relative cohomology table");
  add_input(c_davis);
  c_davis->add_flag("--table", table);
  c_davis->add_option("--format", format)
      ->check(CLI::IsMember({"json", "tsv"}));
  auto* c_growth = app.add_subcommand("growth", "ball growth counts");
  add_input(c_growth);
  c_growth->add_option("--radius", radius)->required();
  auto* c_dc = app.add_subcommand("double-cosets", "weighted element counts");
  add_input(c_dc);
  c_dc->add_option("--thickness", thickness, "comma list, generator order")
      ->required();
  c_dc->add_option("--bound", bound)->required();
  auto* c_cg = app.add_subcommand("coset-graph", "residue graph over a ball");
  add_input(c_cg);
  c_cg->add_option("--gog", gog_path, "graph-of-groups JSON file")->required();
  c_cg->add_option("--radius", radius)->required();
  c_cg->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  auto* c_ch = app.add_subcommand("chamber-graph", "Cayley ball");
  add_input(c_ch);
  c_ch->add_option("--radius", radius)->required();
  c_ch->add_option("--format", format)->check(CLI::IsMember({"dot", "json"}));
  auto* c_ee = app.add_subcommand("ends-estimate",
                                  "ball-complement component count");
  add_input(c_ee);
  c_ee->add_option("--r", small_r)->required();
  c_ee->add_option("--R", big_r)->required();

  CLI11_PARSE(app, argc, argv);

  auto run_one = [&](const std::string& path) {
    CoxeterSystem sys = load_system(path);
    if (c_classify->parsed()) {
      std::cout << cmd_classify(sys).dump(2) << "\n";
    } else if (c_inv->parsed()) {
      std::cout << cmd_invariants(sys).dump(2) << "\n";
    } else if (c_ends->parsed()) {
      std::cout << cmd_ends(sys).dump(2) << "\n";
    } else if (c_dec->parsed()) {
      GraphOfSpecialSubgroups g;
      if (strategy == "iterated-split") {
        g = accessibility_tree(sys);
      } else {
        DecompPredicate p = predicate == "spherical"
                                ? DecompPredicate::Spherical
                                : predicate == "affine"
                                      ? DecompPredicate::SphericalOrAffine
                                      : DecompPredicate::AtMostOneEnd;
        g = visual_decomposition(sys, p);
      }
      if (format == "dot")
        std::cout << gog_dot(sys, g);
      else
        std::cout << gog_json(sys, g).dump(2) << "\n";
    } else if (c_davis->parsed()) {
      if (format == "tsv")
        std::cout << davis_tsv(sys);
      else
        std::cout << cmd_davis(sys).dump(2) << "\n";
    } else if (c_growth->parsed()) {
      std::cout << cmd_growth(sys, radius, ball_cap, braid_cap).dump(2)
                << "\n";
    } else if (c_dc->parsed()) {
      std::cout << cmd_double_cosets(sys, thickness, bound, ball_cap,
                                     braid_cap)
                       .dump(2)
                << "\n";
    } else if (c_cg->parsed()) {
      WordEngine eng(sys, braid_cap);
      CosetGraph g = coset_graph(eng, load_gog(sys, gog_path), radius,
                                 ball_cap);
      if (format == "dot")
        std::cout << coset_graph_dot(sys, g);
      else
        std::cout << coset_graph_json(sys, g).dump(2) << "\n";
    } else if (c_ch->parsed()) {
      WordEngine eng(sys, braid_cap);
      ChamberGraph g = chamber_graph(eng, radius, ball_cap);
      if (format == "dot") {
        std::cout << "graph chambers {\n";
        for (size_t i = 0; i < g.ball.elements.size(); ++i)
          std::cout << "  n" << i << " [label=\""
                    << word_to_string(sys, g.ball.elements[i]) << "\"];\n";
        for (auto [a, b] : g.edges)
          std::cout << "  n" << a << " -- n" << b << ";\n";
        std::cout << "}\n";
      } else {
        ordered_json out;
        out["radius"] = g.radius;
        out["vertices"] = g.ball.elements.size();
        out["edges"] = g.edges.size();
        out["counts"] = g.ball.counts;
        std::cout << out.dump(2) << "\n";
      }
    } else if (c_ee->parsed()) {
      WordEngine eng(sys, braid_cap);
      ChamberGraph g = chamber_graph(eng, big_r, ball_cap);
      ordered_json out;
      out["r"] = small_r;
      out["R"] = big_r;
      out["estimate"] = ends_estimate(g, small_r, big_r);
      out["provenance"] = {{"estimate", "BALL_COMPLEMENT"}};
      std::cout << out.dump(2) << "\n";
    }
  };

  try {
    if (input.empty())
      throw Error(ErrorCode::Malformed, "no input file given");
    if (each) {
      std::vector<std::string> files;
      for (const auto& e : std::filesystem::directory_iterator(input))
        if (e.path().extension() == ".json") files.push_back(e.path().string());
      std::sort(files.begin(), files.end());
      for (const auto& f : files) {
        std::cout << "# " << f << "\n";
        run_one(f);
      }
    } else {
      run_one(input);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return error_exit_code(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: INTERNAL: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
