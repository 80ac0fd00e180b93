#ifndef WEYL_INVARIANTS_HPP
#define WEYL_INVARIANTS_HPP

#include <string>

#include "weyl/decompose.hpp"

namespace weyl {

// Maximal rank of a free abelian subgroup: best family of pairwise
// perpendicular irreducible non-spherical subsets, affine members
// contributing |I|-1 and all others 1 (the KRAMMER_RULE convention).
int algebraic_rank(const CoxeterSystem& sys, int rank_cap = 14);

struct Rank3Case {
  int tag;  // 1 spherical, 2 affine, 3 some m = inf, 4 compact hyperbolic
  int alg_rank;
  int cd_q;
  int vcd;
};

Rank3Case rank3_case(const CoxeterSystem& sys);

struct VcdBounds {
  int lo;
  int hi;
  bool exact;
  std::string provenance;
};

// Exact when every component of the Coxeter diagram falls under a known
// case (summed by the product rule); otherwise the interval
// [rational_cd, max spherical subset size].
VcdBounds vcd_bounds(const CoxeterSystem& sys);

struct InvariantReport {
  Ends ends;
  int cd_q;
  int alg_rank;
  VcdBounds vcd;
  std::string flat_rank_note;
  std::string weyl_notes;
  std::string krammer_note;
};

InvariantReport invariant_report(const CoxeterSystem& sys);

}  // namespace weyl

#endif
