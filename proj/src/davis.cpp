#include "weyl/davis.hpp"

#include <algorithm>
#include <map>

namespace weyl {

namespace {

using Chain = std::vector<int>;

// All chains of the inclusion poset restricted to admissible start
// vertices, grouped by dimension.
struct ChainSets {
  std::vector<std::vector<Chain>> by_dim;
  std::vector<std::map<Chain, int>> index;

  void add(const Chain& c) {
    size_t d = c.size() - 1;
    if (by_dim.size() <= d) {
      by_dim.resize(d + 1);
      index.resize(d + 1);
    }
    index[d][c] = static_cast<int>(by_dim[d].size());
    by_dim[d].push_back(c);
  }
};

void extend_chains(const std::vector<GenSet>& verts, Chain& cur,
                   ChainSets& out) {
  out.add(cur);
  GenSet top = verts[cur.back()];
  for (int v = cur.back() + 1; v < static_cast<int>(verts.size()); ++v) {
    if ((top & ~verts[v]) == 0 && verts[v] != top) {
      cur.push_back(v);
      extend_chains(verts, cur, out);
      cur.pop_back();
    }
  }
}

// Chains whose smallest vertex satisfies `start_ok`. Vertices are in
// (size, lex) order so any extension has a larger index.
ChainSets enumerate_chains(const std::vector<GenSet>& verts,
                           const std::vector<bool>& start_ok) {
  ChainSets out;
  Chain cur;
  for (int v = 0; v < static_cast<int>(verts.size()); ++v) {
    if (!start_ok[v]) continue;
    cur.assign(1, v);
    extend_chains(verts, cur, out);
  }
  return out;
}

constexpr __int128 kOverflowBound = (__int128{1} << 120);

int rank_of(std::vector<std::vector<long long>> rows_ll) {
  if (rows_ll.empty()) return 0;
  std::vector<std::vector<__int128>> a;
  a.reserve(rows_ll.size());
  for (auto& r : rows_ll) a.emplace_back(r.begin(), r.end());
  const int nr = static_cast<int>(a.size());
  const int nc = static_cast<int>(a[0].size());
  int rank = 0;
  __int128 prev = 1;
  for (int col = 0; col < nc && rank < nr; ++col) {
    int piv = -1;
    for (int r = rank; r < nr; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(a[rank], a[piv]);
    for (int r = rank + 1; r < nr; ++r) {
      for (int c = col + 1; c < nc; ++c) {
        __int128 v = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
        v /= prev;
        if (v > kOverflowBound || v < -kOverflowBound)
          throw Error(ErrorCode::Internal, "rank computation overflow");
        a[r][c] = v;
      }
      a[r][col] = 0;
    }
    prev = a[rank][col];
    ++rank;
  }
  return rank;
}

// Coboundary matrix from k-chains to (k+1)-chains within a basis; faces
// outside the basis are zero in the relative complex.
std::vector<std::vector<long long>> coboundary(const ChainSets& cs, int k) {
  std::vector<std::vector<long long>> rows;
  if (k + 1 >= static_cast<int>(cs.by_dim.size())) return rows;
  const auto& cols = cs.index[k];
  const int ncols = static_cast<int>(cs.by_dim[k].size());
  for (const Chain& c : cs.by_dim[k + 1]) {
    std::vector<long long> row(ncols, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      Chain face;
      face.reserve(c.size() - 1);
      for (size_t j = 0; j < c.size(); ++j)
        if (j != i) face.push_back(c[j]);
      auto it = cols.find(face);
      if (it != cols.end()) row[it->second] += (i % 2 == 0) ? 1 : -1;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::vector<int> cohomology_dims(const ChainSets& cs, int full_dim) {
  std::vector<int> dims(full_dim + 1, 0);
  std::vector<int> ranks(full_dim + 2, 0);  // ranks[k] = rank of delta_k
  for (int k = 0; k <= full_dim; ++k) ranks[k] = rank_of(coboundary(cs, k));
  for (int k = 0; k <= full_dim; ++k) {
    int ck = k < static_cast<int>(cs.by_dim.size())
                 ? static_cast<int>(cs.by_dim[k].size())
                 : 0;
    dims[k] = ck - ranks[k] - (k > 0 ? ranks[k - 1] : 0);
    if (dims[k] < 0)
      throw Error(ErrorCode::Internal, "negative cohomology dimension");
  }
  return dims;
}

// Longest chain length minus one: dimension of the order complex.
// Vertices are (size, lex) sorted, so inclusions only point forward.
int complex_dimension(const std::vector<GenSet>& verts) {
  std::vector<int> depth(verts.size(), 0);
  int best = 0;
  for (size_t v = 0; v < verts.size(); ++v) {
    for (size_t u = 0; u < v; ++u)
      if ((verts[u] & ~verts[v]) == 0 && verts[u] != verts[v])
        depth[v] = std::max(depth[v], depth[u] + 1);
    best = std::max(best, depth[v]);
  }
  return best;
}

}  // namespace

ChamberComplex chamber_complex(const CoxeterSystem& sys, std::size_t cap) {
  ChamberComplex k;
  k.vertices = spherical_subsets(sys, cap);
  std::vector<bool> all(k.vertices.size(), true);
  ChainSets cs = enumerate_chains(k.vertices, all);
  k.simplices = cs.by_dim;
  return k;
}

bool simplex_in_mirror(const ChamberComplex& k, int dim, int index, int s) {
  const auto& chain = k.simplices[dim][index];
  GenSet bottom = k.vertices[chain.front()];
  return (bottom & (GenSet{1} << s)) != 0;
}

std::vector<int> absolute_cohomology(const ChamberComplex& k) {
  std::vector<bool> all(k.vertices.size(), true);
  ChainSets cs = enumerate_chains(k.vertices, all);
  return cohomology_dims(cs, k.dim());
}

std::vector<int> relative_cohomology(const CoxeterSystem& sys, GenSet J,
                                     std::size_t cap) {
  if (!is_spherical(sys, J))
    throw Error(ErrorCode::NotSpherical, sys.subset_to_string(J));
  std::vector<GenSet> verts = spherical_subsets(sys, cap);
  // A chain lies in some mirror K_s with s outside J exactly when its
  // smallest vertex is not contained in J; the relative basis is the
  // complement.
  std::vector<bool> start_ok(verts.size());
  for (size_t i = 0; i < verts.size(); ++i)
    start_ok[i] = (verts[i] & ~J) == 0;
  ChainSets cs = enumerate_chains(verts, start_ok);
  return cohomology_dims(cs, complex_dimension(verts));
}

int rational_cd(const CoxeterSystem& sys, std::size_t cap) {
  int best = 0;
  for (GenSet J : spherical_subsets(sys, cap)) {
    auto dims = relative_cohomology(sys, J, cap);
    for (int k = static_cast<int>(dims.size()) - 1; k > best; --k)
      if (dims[k] != 0) {
        best = k;
        break;
      }
  }
  return best;
}

bool more_than_one_end_h1(const CoxeterSystem& sys, std::size_t cap) {
  std::vector<GenSet> verts = spherical_subsets(sys, cap);
  for (GenSet J : verts) {
    std::vector<bool> start_ok(verts.size());
    for (size_t i = 0; i < verts.size(); ++i)
      start_ok[i] = (verts[i] & ~J) == 0;
    ChainSets cs = enumerate_chains(verts, start_ok);
    int c1 = cs.by_dim.size() > 1 ? static_cast<int>(cs.by_dim[1].size()) : 0;
    if (c1 == 0) continue;
    int r0 = rank_of(coboundary(cs, 0));
    int r1 = rank_of(coboundary(cs, 1));
    if (c1 - r0 - r1 > 0) return true;
  }
  return false;
}

int integer_matrix_rank(std::vector<std::vector<long long>> rows) {
  return rank_of(std::move(rows));
}

}  // namespace weyl
