#pragma once

// Independent test oracles.  Everything here recomputes expected values by a
// route disjoint from the library implementation it checks.

#include <gmpxx.h>
#include <numeric>
#include <vector>

#include "rdlift/intmat.hpp"

namespace oracles {

// invariant factors via gcds of i x i minors (feasible up to 4 x 4)
inline std::vector<mpz_class> snf_by_minors(const rdlift::IntMatrix& m) {
  const int r = m.rows(), c = m.cols();
  const int nmin = std::min(r, c);
  std::vector<mpz_class> g(nmin + 1, 0);
  g[0] = 1;

  // all k x k minors by determinant expansion over index subsets
  std::vector<int> rowsel, colsel;
  auto det = [&](auto&& self, std::vector<int> rs, std::vector<int> cs) -> mpz_class {
    if (rs.size() == 1) return m.at(rs[0], cs[0]);
    mpz_class d = 0;
    int sign = 1;
    for (size_t j = 0; j < cs.size(); ++j) {
      std::vector<int> rs2(rs.begin() + 1, rs.end());
      std::vector<int> cs2 = cs;
      cs2.erase(cs2.begin() + j);
      d += sign * m.at(rs[0], cs[j]) * self(self, rs2, cs2);
      sign = -sign;
    }
    return d;
  };

  for (int k = 1; k <= nmin; ++k) {
    mpz_class gk = 0;
    std::vector<int> rs(k), cs(k);
    std::vector<int> ridx(k), cidx(k);
    // iterate over k-subsets of rows and columns
    for (int rmask = 0; rmask < (1 << r); ++rmask) {
      if (__builtin_popcount(rmask) != k) continue;
      int t = 0;
      for (int i = 0; i < r; ++i)
        if (rmask & (1 << i)) ridx[t++] = i;
      for (int cmask = 0; cmask < (1 << c); ++cmask) {
        if (__builtin_popcount(cmask) != k) continue;
        t = 0;
        for (int i = 0; i < c; ++i)
          if (cmask & (1 << i)) cidx[t++] = i;
        mpz_class d = det(det, ridx, cidx);
        mpz_class ad = abs(d);
        mpz_gcd(gk.get_mpz_t(), gk.get_mpz_t(), ad.get_mpz_t());
      }
    }
    g[k] = gk;
  }

  std::vector<mpz_class> d(nmin, 0);
  for (int k = 1; k <= nmin; ++k) {
    if (g[k] == 0) break;  // rank reached; remaining factors are zero
    d[k - 1] = g[k] / g[k - 1];
  }
  return d;
}

// number of partitions of n by direct enumeration
inline long count_partitions(int n) {
  std::vector<long> p(n + 1, 0);
  p[0] = 1;
  for (int part = 1; part <= n; ++part)
    for (int s = part; s <= n; ++s) p[s] += p[s - part];
  return p[n];
}

}  // namespace oracles
