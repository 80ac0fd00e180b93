#ifndef WEYL_DAVIS_HPP
#define WEYL_DAVIS_HPP

#include <vector>

#include "weyl/catalog.hpp"
#include "weyl/coxeter.hpp"

namespace weyl {

// The Davis chamber K: order complex of the poset of spherical subsets
// (including the empty set). A simplex of dimension k is a chain
// T_0 < T_1 < ... < T_k, stored as indices into `vertices`.
struct ChamberComplex {
  std::vector<GenSet> vertices;  // spherical subsets, (size, lex) order
  // simplices[k] = all k-simplices, each a strictly increasing chain of
  // vertex indices; lexicographic order within each dimension.
  std::vector<std::vector<std::vector<int>>> simplices;

  int dim() const { return static_cast<int>(simplices.size()) - 1; }
};

ChamberComplex chamber_complex(const CoxeterSystem& sys,
                               std::size_t cap = (1u << 20));

// True when the simplex lies in the mirror K_s: every vertex of the chain
// contains s (equivalently the smallest one does).
bool simplex_in_mirror(const ChamberComplex& k, int dim, int index, int s);

// dims of H^k(K; Q) for k = 0..dim K (absolute, unreduced). Used as a
// structural check: K is a cone over its non-empty part, so H^0 = Q and
// all higher groups vanish.
std::vector<int> absolute_cohomology(const ChamberComplex& k);

// dims of H^k(K, K^{S\J}; Q) for k = 0..dim K, where K^T is the union of
// the mirrors K_s for s in T. Requires J spherical. Exact integer-pivot
// rank computations, no floating point.
std::vector<int> relative_cohomology(const CoxeterSystem& sys, GenSet J,
                                     std::size_t cap = (1u << 20));

// max{k : some spherical J has relative_cohomology(sys,J)[k] != 0}.
// Equals 0 exactly when W is finite.
int rational_cd(const CoxeterSystem& sys, std::size_t cap = (1u << 20));

// True iff some spherical J has H^1(K, K^{S\J}) != 0. This is the
// cohomological detector for "more than one end".
bool more_than_one_end_h1(const CoxeterSystem& sys,
                          std::size_t cap = (1u << 20));

// Exact rank of an integer matrix (rows of equal length), fraction-free
// elimination. Exposed for tests.
int integer_matrix_rank(std::vector<std::vector<long long>> rows);

}  // namespace weyl

#endif
