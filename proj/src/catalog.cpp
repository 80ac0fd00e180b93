#include "weyl/catalog.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

namespace weyl {

const char* type_family_name(TypeFamily f) {
  switch (f) {
    case TypeFamily::Spherical: return "SPHERICAL";
    case TypeFamily::Affine: return "AFFINE";
    case TypeFamily::HyperbolicCompact: return "HYPERBOLIC_COMPACT";
    case TypeFamily::HyperbolicNoncompact: return "HYPERBOLIC_NONCOMPACT";
    case TypeFamily::OtherInfinite: return "OTHER_INFINITE";
  }
  return "?";
}

namespace {

using Mat = std::vector<std::vector<int>>;

Mat blank(int n) {
  Mat m(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

void set_edge(Mat& m, int i, int j, int label) { m[i][j] = m[j][i] = label; }

Mat path(const std::vector<int>& labels) {
  int n = static_cast<int>(labels.size()) + 1;
  Mat m = blank(n);
  for (int i = 0; i + 1 < n; ++i) set_edge(m, i, i + 1, labels[i]);
  return m;
}

Mat cycle_all3(int n) {
  Mat m = blank(n);
  for (int i = 0; i < n; ++i) set_edge(m, i, (i + 1) % n, 3);
  return m;
}

// Path of `len` 3-edges plus a fork {a,b} attached to vertex `at`.
Mat forked(int n, int at) {
  Mat m = blank(n);
  for (int i = 0; i + 1 < n - 1; ++i) set_edge(m, i, i + 1, 3);
  set_edge(m, at, n - 1, 3);
  return m;
}

std::vector<int> vertex_label_profile(const Mat& m, int v) {
  std::vector<int> p;
  for (int u = 0; u < static_cast<int>(m.size()); ++u)
    if (u != v && m[v][u] != 2) p.push_back(m[v][u]);
  std::sort(p.begin(), p.end());
  return p;
}

bool extend(const Mat& a, const Mat& b, std::vector<int>& map,
            std::vector<bool>& used, int v) {
  int n = static_cast<int>(a.size());
  if (v == n) return true;
  for (int w = 0; w < n; ++w) {
    if (used[w]) continue;
    bool ok = true;
    for (int u = 0; u < v; ++u)
      if (a[v][u] != b[w][map[u]]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    map[v] = w;
    used[w] = true;
    if (extend(a, b, map, used, v + 1)) return true;
    used[w] = false;
  }
  return false;
}

bool labelled_isomorphic(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  if (static_cast<int>(b.size()) != n) return false;
  std::vector<std::vector<int>> pa, pb;
  for (int v = 0; v < n; ++v) {
    pa.push_back(vertex_label_profile(a, v));
    pb.push_back(vertex_label_profile(b, v));
  }
  auto sa = pa, sb = pb;
  std::sort(sa.begin(), sa.end());
  std::sort(sb.begin(), sb.end());
  if (sa != sb) return false;
  std::vector<int> map(n, -1);
  std::vector<bool> used(n, false);
  return extend(a, b, map, used, 0);
}

Mat matrix_of(const CoxeterSystem& sys) {
  int n = sys.rank();
  Mat m = blank(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) m[i][j] = sys.label(i, j);
  return m;
}

struct Candidate {
  std::string name;
  Mat mat;
};

std::vector<Candidate> spherical_candidates(int r, int max_label) {
  std::vector<Candidate> out;
  if (r == 1) {
    out.push_back({"A1", blank(1)});
    return out;
  }
  if (r == 2) {
    // Every finite label gives a finite dihedral group.
    for (int m = 3; m <= max_label; ++m) {
      std::string name = m == 3 ? "A2"
                       : m == 4 ? "B2"
                                : "I2(" + std::to_string(m) + ")";
      out.push_back({name, path({m})});
    }
    return out;
  }
  {
    std::vector<int> l(r - 1, 3);
    out.push_back({"A" + std::to_string(r), path(l)});
    l.back() = 4;
    out.push_back({"B" + std::to_string(r), path(l)});
  }
  if (r >= 4) out.push_back({"D" + std::to_string(r), forked(r, r - 3)});
  if (r >= 6 && r <= 8)
    out.push_back({"E" + std::to_string(r), forked(r, 2)});
  if (r == 4) out.push_back({"F4", path({3, 4, 3})});
  if (r == 3) out.push_back({"H3", path({5, 3})});
  if (r == 4) out.push_back({"H4", path({5, 3, 3})});
  return out;
}

std::vector<Candidate> affine_candidates(int r) {
  std::vector<Candidate> out;
  if (r == 2) {
    out.push_back({"~A1", path({kInfLabel})});
    return out;
  }
  int n = r - 1;  // affine subscript
  if (n >= 2) out.push_back({"~A" + std::to_string(n), cycle_all3(r)});
  if (n >= 2) {
    std::vector<int> l(r - 1, 3);
    l.front() = 4;
    l.back() = 4;
    out.push_back({"~C" + std::to_string(n), path(l)});
  }
  if (n >= 3) {
    // path with a label-4 end and a fork at the other end
    Mat m = blank(r);
    for (int i = 0; i + 1 <= r - 3; ++i) set_edge(m, i, i + 1, 3);
    set_edge(m, r - 3, r - 2, 3);
    set_edge(m, r - 3, r - 1, 3);
    // label 4 at the non-forked end
    set_edge(m, 0, 1, 4);
    out.push_back({"~B" + std::to_string(n), m});
  }
  if (n >= 4) {
    // forks at both ends of a 3-labelled path
    Mat m = blank(r);
    for (int i = 2; i + 1 <= r - 3; ++i) set_edge(m, i, i + 1, 3);
    set_edge(m, 0, 2, 3);
    set_edge(m, 1, 2, 3);
    set_edge(m, r - 3, r - 2, 3);
    set_edge(m, r - 3, r - 1, 3);
    out.push_back({"~D" + std::to_string(n), m});
  }
  if (r == 7) {
    // three arms of length 2 from a center
    Mat m = blank(7);
    for (int arm = 0; arm < 3; ++arm) {
      set_edge(m, 6, 2 * arm, 3);
      set_edge(m, 2 * arm, 2 * arm + 1, 3);
    }
    out.push_back({"~E6", m});
  }
  if (r == 8) {
    Mat m = blank(8);
    for (int i = 0; i + 1 < 7; ++i) set_edge(m, i, i + 1, 3);
    set_edge(m, 3, 7, 3);
    out.push_back({"~E7", m});
  }
  if (r == 9) {
    Mat m = blank(9);
    for (int i = 0; i + 1 < 8; ++i) set_edge(m, i, i + 1, 3);
    set_edge(m, 2, 8, 3);
    out.push_back({"~E8", m});
  }
  if (r == 5) out.push_back({"~F4", path({3, 3, 4, 3})});
  if (r == 3) out.push_back({"~G2", path({6, 3})});
  return out;
}

std::optional<std::string> match_catalog(const Mat& m,
                                         const std::vector<Candidate>& cands) {
  for (const auto& c : cands)
    if (labelled_isomorphic(m, c.mat)) return c.name;
  return std::nullopt;
}

std::optional<std::string> spherical_name(const CoxeterSystem& sys) {
  int max_label = 2;
  for (int i = 0; i < sys.rank(); ++i)
    for (int j = i + 1; j < sys.rank(); ++j) {
      int l = sys.label(i, j);
      if (l == kInfLabel) return std::nullopt;
      max_label = std::max(max_label, l);
    }
  return match_catalog(matrix_of(sys),
                       spherical_candidates(sys.rank(), max_label));
}

std::optional<std::string> affine_name(const CoxeterSystem& sys) {
  return match_catalog(matrix_of(sys), affine_candidates(sys.rank()));
}

// Classification of a system already known to be irreducible.
TypeLabel classify_connected(const CoxeterSystem& sys) {
  if (auto n = spherical_name(sys)) return {TypeFamily::Spherical, *n};
  if (auto n = affine_name(sys)) return {TypeFamily::Affine, *n};
  const int r = sys.rank();
  bool all_sph = true, all_pos = true;
  for (int s = 0; s < r; ++s) {
    GenSet J = sys.all() & ~(GenSet{1} << s);
    if (!is_spherical(sys, J)) all_sph = false;
    if (!is_positive_type(sys, J)) all_pos = false;
  }
  // Positivity and sphericity are hereditary, so the corank-1 subsets
  // decide all proper subsets.
  if (all_sph) return {TypeFamily::HyperbolicCompact, ""};
  if (all_pos && r >= 3 && r <= 10)
    return {TypeFamily::HyperbolicNoncompact, ""};
  return {TypeFamily::OtherInfinite, ""};
}

}  // namespace

TypeLabel classify_irreducible(const CoxeterSystem& sys) {
  if (sys.empty()) throw Error(ErrorCode::EmptySystem, "empty system");
  if (sys.irreducible_components().size() != 1)
    throw Error(ErrorCode::NotIrreducible, "system is reducible");
  return classify_connected(sys);
}

bool is_spherical(const CoxeterSystem& sys, GenSet J) {
  if ((J & ~sys.all()) != 0)
    throw Error(ErrorCode::UnknownGenerator, "subset not contained in S");
  if (J == 0) return true;
  CoxeterSystem sub = sys.restrict_to(J);
  for (GenSet comp : sub.irreducible_components())
    if (classify_connected(sub.restrict_to(comp)).family !=
        TypeFamily::Spherical)
      return false;
  return true;
}

bool is_positive_type(const CoxeterSystem& sys, GenSet J) {
  if (J == 0) return true;
  CoxeterSystem sub = sys.restrict_to(J);
  for (GenSet comp : sub.irreducible_components()) {
    auto fam = classify_connected(sub.restrict_to(comp)).family;
    if (fam != TypeFamily::Spherical && fam != TypeFamily::Affine)
      return false;
  }
  return true;
}

std::vector<GenSet> spherical_subsets(const CoxeterSystem& sys,
                                      std::size_t cap) {
  // Spherical subsets form a downward-closed family; closure from the
  // empty set reaches all of them.
  std::set<GenSet> found{0};
  std::vector<GenSet> frontier{0};
  while (!frontier.empty()) {
    std::vector<GenSet> next;
    for (GenSet J : frontier) {
      for (int s = 0; s < sys.rank(); ++s) {
        GenSet J2 = J | (GenSet{1} << s);
        if (J2 == J || found.count(J2)) continue;
        if (is_spherical(sys, J2)) {
          found.insert(J2);
          if (found.size() > cap)
            throw Error(ErrorCode::LimitExceeded,
                        "spherical poset cap exceeded");
          next.push_back(J2);
        }
      }
    }
    frontier = std::move(next);
  }
  std::vector<GenSet> out(found.begin(), found.end());
  std::sort(out.begin(), out.end(), subset_size_lex_less);
  return out;
}

std::vector<GenSet> maximal_spherical_subsets(const CoxeterSystem& sys) {
  auto sph = spherical_subsets(sys);
  std::set<GenSet> all(sph.begin(), sph.end());
  std::vector<GenSet> out;
  for (GenSet J : sph) {
    bool maximal = true;
    for (int s = 0; s < sys.rank() && maximal; ++s) {
      GenSet J2 = J | (GenSet{1} << s);
      if (J2 != J && all.count(J2)) maximal = false;
    }
    if (maximal) out.push_back(J);
  }
  return out;
}

std::vector<std::vector<double>> bilinear_form(const CoxeterSystem& sys) {
  const int n = sys.rank();
  std::vector<std::vector<double>> b(n, std::vector<double>(n));
  const double pi = std::acos(-1.0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        b[i][j] = 1.0;
        continue;
      }
      int m = sys.label(i, j);
      b[i][j] = (m == kInfLabel) ? -1.0 : -std::cos(pi / m);
    }
  return b;
}

namespace {

// Cyclic Jacobi sweeps; deterministic and ample for rank <= 31.
std::vector<double> symmetric_eigenvalues(std::vector<std::vector<double>> a) {
  const int n = static_cast<int>(a.size());
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) off += a[p][q] * a[p][q];
    if (off < 1e-26) break;
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        if (std::abs(a[p][q]) < 1e-18) continue;
        double theta = (a[q][q] - a[p][p]) / (2 * a[p][q]);
        double t = (theta >= 0 ? 1.0 : -1.0) /
                   (std::abs(theta) + std::sqrt(theta * theta + 1));
        double c = 1 / std::sqrt(t * t + 1), s = t * c;
        for (int k = 0; k < n; ++k) {
          double akp = a[k][p], akq = a[k][q];
          a[k][p] = c * akp - s * akq;
          a[k][q] = s * akp + c * akq;
        }
        for (int k = 0; k < n; ++k) {
          double apk = a[p][k], aqk = a[q][k];
          a[p][k] = c * apk - s * aqk;
          a[q][k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (int i = 0; i < n; ++i) ev[i] = a[i][i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace

Signature bilinear_signature(const CoxeterSystem& sys, double tol) {
  if (tol <= 0) throw Error(ErrorCode::Invalid, "tol must be positive");
  Signature sig{0, 0, 0};
  for (double ev : symmetric_eigenvalues(bilinear_form(sys))) {
    if (ev > tol)
      ++sig.n_plus;
    else if (ev < -tol)
      ++sig.n_minus;
    else
      ++sig.n_zero;
  }
  return sig;
}

}  // namespace weyl
