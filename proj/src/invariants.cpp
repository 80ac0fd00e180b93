#include "weyl/invariants.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "weyl/davis.hpp"

namespace weyl {

namespace {

bool connected_in_coxeter_diagram(const CoxeterSystem& sys, GenSet I) {
  return sys.restrict_to(I).irreducible_components().size() == 1;
}

struct AbelianCandidate {
  GenSet set;
  int contribution;
  GenSet perp;  // generators outside `set` commuting with all of it
};

}  // namespace

int algebraic_rank(const CoxeterSystem& sys, int rank_cap) {
  if (sys.rank() > rank_cap)
    throw Error(ErrorCode::LimitExceeded, "rank cap for the family search");
  if (is_spherical(sys, sys.all())) return 0;

  std::vector<AbelianCandidate> cands;
  for (GenSet I = 1; I < (GenSet{1} << sys.rank()); ++I) {
    if (is_spherical(sys, I) || !connected_in_coxeter_diagram(sys, I))
      continue;
    CoxeterSystem sub = sys.restrict_to(I);
    bool affine = classify_irreducible(sub).family == TypeFamily::Affine;
    GenSet perp = 0;
    for (int s = 0; s < sys.rank(); ++s) {
      if ((I >> s) & 1u) continue;
      bool ok = true;
      for (int t = 0; t < sys.rank() && ok; ++t)
        if (((I >> t) & 1u) && sys.label(s, t) != 2) ok = false;
      if (ok) perp |= GenSet{1} << s;
    }
    cands.push_back({I, affine ? popcount(I) - 1 : 1, perp});
  }

  std::map<GenSet, int> memo;
  std::function<int(GenSet)> best = [&](GenSet mask) -> int {
    if (mask == 0) return 0;
    auto it = memo.find(mask);
    if (it != memo.end()) return it->second;
    GenSet low = mask & (~mask + 1);
    int res = best(mask & ~low);  // lowest generator unused by the family
    for (const auto& c : cands) {
      if (!(c.set & low)) continue;
      if ((c.set & ~mask) != 0) continue;
      res = std::max(res, c.contribution + best(mask & ~c.set & c.perp));
    }
    memo[mask] = res;
    return res;
  };
  return best(sys.all());
}

Rank3Case rank3_case(const CoxeterSystem& sys) {
  if (sys.rank() != 3)
    throw Error(ErrorCode::WrongRank, "rank-3 classification needs |S| = 3");
  if (is_spherical(sys, sys.all())) return {1, 0, 0, 0};
  if (sys.irreducible_components().size() == 1 &&
      classify_irreducible(sys).family == TypeFamily::Affine)
    return {2, 2, 2, 2};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (sys.label(i, j) == kInfLabel) return {3, 1, 1, 1};
  // infinite, all labels finite, not affine: compact hyperbolic
  return {4, 1, 2, 2};
}

namespace {

// Exact vcd of an irreducible subsystem if a covered case applies.
std::optional<std::pair<int, std::string>> component_vcd(
    const CoxeterSystem& sub) {
  int r = sub.rank();
  if (is_spherical(sub, sub.all())) return {{0, "SPHERICAL"}};
  TypeLabel t = classify_irreducible(sub);
  if (t.family == TypeFamily::Affine) return {{r - 1, "AFFINE_TABLE"}};
  if (is_virtually_free(sub)) return {{1, "VF_THEOREM"}};
  if (t.family == TypeFamily::HyperbolicCompact)
    return {{r - 1, "HYPERBOLIC_TABLE"}};
  if (t.family == TypeFamily::HyperbolicNoncompact)
    return {{r - 2, "HYPERBOLIC_TABLE"}};
  if (r == 3) return {{rank3_case(sub).vcd, "RANK3_TABLE"}};
  return std::nullopt;
}

}  // namespace

VcdBounds vcd_bounds(const CoxeterSystem& sys) {
  int total = 0;
  std::vector<std::string> tags;
  bool all_exact = true;
  for (GenSet comp : sys.irreducible_components()) {
    auto cv = component_vcd(sys.restrict_to(comp));
    if (!cv) {
      all_exact = false;
      break;
    }
    total += cv->first;
    if (std::find(tags.begin(), tags.end(), cv->second) == tags.end())
      tags.push_back(cv->second);
  }
  if (all_exact) {
    std::string prov;
    for (const auto& t : tags) prov += (prov.empty() ? "" : "+") + t;
    return {total, total, true, prov};
  }
  int lo = rational_cd(sys);
  int hi = 0;
  for (GenSet J : spherical_subsets(sys)) hi = std::max(hi, popcount(J));
  return {lo, hi, lo == hi, "DAVIS_LOWER_BOUND"};
}

InvariantReport invariant_report(const CoxeterSystem& sys) {
  InvariantReport rep;
  rep.ends = ends(sys);
  rep.cd_q = rational_cd(sys);
  rep.alg_rank = algebraic_rank(sys);
  rep.vcd = vcd_bounds(sys);
  rep.flat_rank_note =
      "flat-rk(G) <= alg-rk(W) <= cd_Q(W) = cd_Q(G) for every closed "
      "Weyl-transitive subgroup G of Aut(Delta)";
  rep.krammer_note =
      "KRAMMER_RULE: non-affine irreducible non-spherical pieces contribute "
      "rank 1 to the standard free abelian subgroup";
  rep.weyl_notes =
      "e(G)=0 iff e(W)=0 (G compact iff W spherical); e(G)=1 iff e(W)=1; "
      "for e(W) in {2,infinity} only the lower bound e(W) <= e(G) holds, "
      "so the number of ends is not a Weyl invariant";
  if (rep.ends == Ends::Two)
    rep.weyl_notes +=
        "; e(W)=2 here, yet a group acting Weyl-transitively on the "
        "building of a (p+1)-regular tree has infinitely many ends";

  bool finite = is_spherical(sys, sys.all());
  if (finite) {
    if (rep.cd_q != 0 || rep.alg_rank != 0 || rep.vcd.lo != 0 ||
        rep.vcd.hi != 0)
      throw Error(ErrorCode::Internal, "nonzero invariants for finite W");
  } else {
    if (!(rep.alg_rank <= rep.cd_q && rep.cd_q <= rep.vcd.lo &&
          rep.vcd.lo <= rep.vcd.hi && rep.vcd.hi <= sys.rank() - 1))
      throw Error(ErrorCode::Internal,
                  "invariant chain alg <= cd <= vcd <= |S|-1 violated");
  }
  return rep;
}

}  // namespace weyl
