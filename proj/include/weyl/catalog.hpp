#ifndef WEYL_CATALOG_HPP
#define WEYL_CATALOG_HPP

#include <optional>
#include <string>
#include <vector>

#include "weyl/coxeter.hpp"

namespace weyl {

enum class TypeFamily {
  Spherical,
  Affine,
  HyperbolicCompact,
  HyperbolicNoncompact,
  OtherInfinite,
};

struct TypeLabel {
  TypeFamily family;
  std::string name;  // catalog name for Spherical/Affine, otherwise empty
};

const char* type_family_name(TypeFamily f);

// Classifies an irreducible non-empty system. Spherical and affine types are
// recognised by labelled-graph isomorphism against the classical catalogs;
// hyperbolic types by the positive-type criterion on proper special subsets.
// Floating point is never consulted here.
TypeLabel classify_irreducible(const CoxeterSystem& sys);

// True iff every irreducible component of restrict(sys, J) is of spherical
// type. J = empty is spherical.
bool is_spherical(const CoxeterSystem& sys, GenSet J);

// Every component spherical or irreducible affine.
bool is_positive_type(const CoxeterSystem& sys, GenSet J);

// All spherical subsets of S, enumerated by closure from the empty set,
// sorted by (size, lex). Throws LimitExceeded past `cap` subsets.
std::vector<GenSet> spherical_subsets(const CoxeterSystem& sys,
                                      std::size_t cap = (1u << 20));

// Inclusion-maximal spherical subsets, sorted by (size, lex).
std::vector<GenSet> maximal_spherical_subsets(const CoxeterSystem& sys);

struct Signature {
  int n_plus;
  int n_minus;
  int n_zero;
};

// Matrix of the geometric bilinear form, B(a_s,a_t) = -cos(pi/m_st).
std::vector<std::vector<double>> bilinear_form(const CoxeterSystem& sys);

// Eigenvalue signature of the bilinear form; advisory cross-check only,
// never the classifier of record.
Signature bilinear_signature(const CoxeterSystem& sys, double tol = 1e-9);

}  // namespace weyl

#endif
