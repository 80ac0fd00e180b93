#ifndef WEYL_TESTS_PERM_ORACLE_HPP
#define WEYL_TESTS_PERM_ORACLE_HPP

// Faithful permutation models of small Coxeter groups, used as an oracle
// for the word problem that shares no code with the braid-move solver.

#include <map>
#include <queue>
#include <vector>

namespace oracle {

using Perm = std::vector<int>;

inline Perm identity(int n) {
  Perm p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  return p;
}

inline Perm compose(const Perm& a, const Perm& b) {  // apply b, then a
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

struct PermGroup {
  std::vector<Perm> gens;
  std::map<Perm, int> length;  // Cayley distance from the identity

  void close() {
    Perm e = identity(static_cast<int>(gens[0].size()));
    length[e] = 0;
    std::queue<Perm> q;
    q.push(e);
    while (!q.empty()) {
      Perm cur = q.front();
      q.pop();
      for (const Perm& g : gens) {
        Perm next = compose(cur, g);
        if (!length.count(next)) {
          length[next] = length[cur] + 1;
          q.push(next);
        }
      }
    }
  }

  Perm evaluate(const std::vector<int>& word) const {
    Perm p = identity(static_cast<int>(gens[0].size()));
    for (int s : word) p = compose(p, gens[s]);
    return p;
  }
};

// Dihedral group of order 2m acting on the vertices of an m-gon; the two
// generators are reflections whose product is the rotation i -> i-1.
// Faithful for m >= 3.
inline PermGroup dihedral_model(int m) {
  Perm s(m), t(m);
  for (int i = 0; i < m; ++i) {
    s[i] = ((m - i) % m + m) % m;
    t[i] = ((1 - i) % m + m) % m;
  }
  PermGroup g{{s, t}, {}};
  g.close();
  return g;
}

// Klein four group: coordinate flips of {0,1} x {0,1}.
inline PermGroup klein_model() {
  Perm s{1, 0, 3, 2};  // flip first coordinate
  Perm t{2, 3, 0, 1};  // flip second coordinate
  PermGroup g{{s, t}, {}};
  g.close();
  return g;
}

// Signed permutations of three coordinates acting on
// {e1,e2,e3,-e1,-e2,-e3} = points 0..5. Generators: swap e1/e2, swap
// e2/e3, negate e3. Labels (3,4) along the path, 2 across.
inline PermGroup b3_model() {
  Perm s1{1, 0, 2, 4, 3, 5};
  Perm s2{0, 2, 1, 3, 5, 4};
  Perm s3{0, 1, 5, 3, 4, 2};
  PermGroup g{{s1, s2, s3}, {}};
  g.close();
  return g;
}

}  // namespace oracle

#endif
