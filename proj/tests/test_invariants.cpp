#include "doctest.h"

#include <tuple>

#include "weyl/davis.hpp"
#include "weyl/invariants.hpp"

using namespace weyl;

namespace {

CoxeterSystem make(int n, std::vector<std::tuple<int, int, int>> pairs) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  std::vector<std::vector<int>> labels(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) labels[i][i] = 1;
  for (auto [u, v, m] : pairs) labels[u][v] = labels[v][u] = m;
  return CoxeterSystem::from_matrix(names, labels);
}

CoxeterSystem triangle(int p, int q, int r) {
  return make(3, {{0, 1, p}, {1, 2, q}, {0, 2, r}});
}

}  // namespace

TEST_CASE("algebraic rank") {
  CHECK(algebraic_rank(make(2, {{0, 1, 3}})) == 0);                 // A2
  CHECK(algebraic_rank(make(2, {{0, 1, kInfLabel}})) == 1);         // D_inf
  CHECK(algebraic_rank(triangle(3, 3, 3)) == 2);                    // ~A2
  CHECK(algebraic_rank(make(3, {{0, 1, 4}, {1, 2, 4}})) == 2);      // ~C2
  CHECK(algebraic_rank(triangle(2, 3, 7)) == 1);
  // compact hyperbolic square: no two perpendicular infinite pieces
  CHECK(algebraic_rank(
            make(4, {{0, 1, 4}, {1, 2, 3}, {2, 3, 4}, {3, 0, 3}})) == 1);
  // pentagon with all inf labels: any two non-adjacent D_inf subgroups
  // share no perpendicular pair, so rank stays 1
  CHECK(algebraic_rank(make(5, {{0, 1, kInfLabel},
                                {1, 2, kInfLabel},
                                {2, 3, kInfLabel},
                                {3, 4, kInfLabel},
                                {0, 4, kInfLabel}})) == 1);
  // D_inf x D_inf: two perpendicular infinite dihedrals
  CHECK(algebraic_rank(
            make(4, {{0, 1, kInfLabel}, {2, 3, kInfLabel}})) == 2);
  // ~A2 x D_inf
  CHECK(algebraic_rank(make(5, {{0, 1, 3},
                                {1, 2, 3},
                                {0, 2, 3},
                                {3, 4, kInfLabel}})) == 3);
  CHECK_THROWS_AS(algebraic_rank(triangle(3, 3, 3), 2), Error);
}

TEST_CASE("rank-3 cases") {
  Rank3Case sph = rank3_case(triangle(2, 3, 5));  // H3
  CHECK(sph.tag == 1);
  CHECK(sph.alg_rank == 0);
  CHECK(sph.cd_q == 0);
  CHECK(sph.vcd == 0);

  Rank3Case aff = rank3_case(triangle(3, 3, 3));
  CHECK(aff.tag == 2);
  CHECK(aff.alg_rank == 2);
  CHECK(aff.cd_q == 2);
  CHECK(aff.vcd == 2);
  CHECK(rank3_case(triangle(2, 4, 4)).tag == 2);
  CHECK(rank3_case(triangle(2, 3, 6)).tag == 2);

  Rank3Case fr = rank3_case(triangle(2, 3, kInfLabel));
  CHECK(fr.tag == 3);
  CHECK(fr.alg_rank == 1);
  CHECK(fr.cd_q == 1);
  CHECK(fr.vcd == 1);

  Rank3Case hyp = rank3_case(triangle(2, 3, 7));
  CHECK(hyp.tag == 4);
  CHECK(hyp.alg_rank == 1);
  CHECK(hyp.cd_q == 2);
  CHECK(hyp.vcd == 2);

  CHECK_THROWS_AS(rank3_case(make(2, {{0, 1, 3}})), Error);
}

TEST_CASE("rank-3 table agrees with the general routines") {
  const int labels[] = {2, 3, 4, 6, kInfLabel};
  for (int p : labels)
    for (int q : labels)
      for (int r : labels) {
        auto sys = triangle(p, q, r);
        Rank3Case c = rank3_case(sys);
        CHECK(c.alg_rank == algebraic_rank(sys));
        CHECK(c.cd_q == rational_cd(sys));
        VcdBounds v = vcd_bounds(sys);
        CHECK(v.exact);
        CHECK(v.lo == c.vcd);
      }
}

TEST_CASE("vcd bounds") {
  auto square = make(4, {{0, 1, 4}, {1, 2, 3}, {2, 3, 4}, {3, 0, 3}});
  VcdBounds vs = vcd_bounds(square);
  CHECK(vs.exact);
  CHECK(vs.lo == 3);
  CHECK(vs.hi == 3);
  CHECK(vs.provenance == "HYPERBOLIC_TABLE");

  // path 6,3,5: noncompact hyperbolic of rank 4, vcd = |S| - 2
  auto chain = make(4, {{0, 1, 6}, {1, 2, 3}, {2, 3, 5}});
  VcdBounds vc = vcd_bounds(chain);
  CHECK(vc.exact);
  CHECK(vc.lo == 2);
  CHECK(vc.provenance == "HYPERBOLIC_TABLE");

  // pentagon with inf labels: not covered by a table, but the Davis lower
  // bound meets the spherical upper bound
  auto pent = make(5, {{0, 1, kInfLabel},
                       {1, 2, kInfLabel},
                       {2, 3, kInfLabel},
                       {3, 4, kInfLabel},
                       {0, 4, kInfLabel}});
  VcdBounds vp = vcd_bounds(pent);
  CHECK(vp.lo == 2);
  CHECK(vp.hi == 2);
  CHECK(vp.exact);
  CHECK(vp.provenance == "DAVIS_LOWER_BOUND");

  // product rule: ~A2 x D_inf sums component values
  auto prod = make(5, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {3, 4, kInfLabel}});
  VcdBounds vprod = vcd_bounds(prod);
  CHECK(vprod.exact);
  CHECK(vprod.lo == 3);

  // mixed provenance: ~A2 x (2,3,7) triangle joins two table tags
  auto mixed = make(6, {{0, 1, 3},
                        {1, 2, 3},
                        {0, 2, 3},
                        {3, 4, 3},
                        {4, 5, 7}});
  VcdBounds vmix = vcd_bounds(mixed);
  CHECK(vmix.exact);
  CHECK(vmix.lo == 4);
  CHECK(vmix.provenance.find('+') != std::string::npos);

  VcdBounds vfin = vcd_bounds(make(2, {{0, 1, 3}}));
  CHECK(vfin.exact);
  CHECK(vfin.lo == 0);
}

TEST_CASE("invariant reports") {
  InvariantReport dinf = invariant_report(make(2, {{0, 1, kInfLabel}}));
  CHECK(dinf.ends == Ends::Two);
  CHECK(dinf.cd_q == 1);
  CHECK(dinf.alg_rank == 1);
  CHECK(dinf.vcd.exact);
  CHECK(dinf.vcd.lo == 1);
  CHECK(dinf.weyl_notes.find("(p+1)-regular tree") != std::string::npos);

  InvariantReport aff = invariant_report(triangle(3, 3, 3));
  CHECK(aff.ends == Ends::One);
  CHECK(aff.cd_q == 2);
  CHECK(aff.alg_rank == 2);
  CHECK(aff.vcd.lo == 2);
  CHECK(aff.weyl_notes.find("(p+1)-regular tree") == std::string::npos);
  CHECK(!aff.flat_rank_note.empty());
  CHECK(!aff.krammer_note.empty());

  InvariantReport fin = invariant_report(make(2, {{0, 1, 3}}));
  CHECK(fin.ends == Ends::Zero);
  CHECK(fin.cd_q == 0);
  CHECK(fin.alg_rank == 0);
  CHECK(fin.vcd.hi == 0);
}

TEST_CASE("the invariant chain holds across a mixed corpus") {
  std::vector<CoxeterSystem> corpus = {
      triangle(3, 3, 3),
      triangle(2, 3, 7),
      triangle(2, 3, kInfLabel),
      make(4, {{0, 1, 4}, {1, 2, 3}, {2, 3, 4}, {3, 0, 3}}),
      make(4, {{0, 1, 6}, {1, 2, 3}, {2, 3, 5}}),
      make(4, {{0, 1, kInfLabel}, {2, 3, kInfLabel}}),
      make(5, {{0, 1, 3}, {1, 2, 3}, {0, 2, 3}, {3, 4, kInfLabel}}),
  };
  for (const auto& sys : corpus) {
    InvariantReport rep = invariant_report(sys);
    CHECK(rep.alg_rank <= rep.cd_q);
    CHECK(rep.cd_q <= rep.vcd.lo);
    CHECK(rep.vcd.lo <= rep.vcd.hi);
    CHECK(rep.vcd.hi <= sys.rank() - 1);
  }
}
