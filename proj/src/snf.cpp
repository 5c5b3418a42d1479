#include "rdlift/snf.hpp"

#include <stdexcept>

#include "rdlift/numutil.hpp"

namespace rdlift {

std::vector<mpz_class> SnfResult::torsion() const {
  std::vector<mpz_class> t;
  for (const auto& x : d)
    if (x > 1) t.push_back(x);
  return t;
}

int SnfResult::rank() const {
  int r = 0;
  for (const auto& x : d)
    if (x != 0) ++r;
  return r;
}

namespace {

// position of the nonzero entry of smallest absolute value in a(s:, s:);
// keeping pivots small controls coefficient growth on rank-8 lattices
bool smallest_pivot(const IntMatrix& a, int s, int& pi, int& pj) {
  bool found = false;
  mpz_class best;
  for (int i = s; i < a.rows(); ++i)
    for (int j = s; j < a.cols(); ++j) {
      const mpz_class& x = a.at(i, j);
      if (x == 0) continue;
      mpz_class ax = abs(x);
      if (!found || ax < best) {
        found = true;
        best = ax;
        pi = i;
        pj = j;
      }
    }
  return found;
}

}  // namespace

SnfResult smith_normal_form(const IntMatrix& m) {
  SnfResult res;
  res.rows = m.rows();
  res.cols = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(m.rows());
  IntMatrix v = IntMatrix::identity(m.cols());
  const int nmin = std::min(m.rows(), m.cols());

  for (int s = 0; s < nmin; ++s) {
    int pi, pj;
    if (!smallest_pivot(a, s, pi, pj)) break;
    a.swap_rows(s, pi);
    u.swap_rows(s, pi);
    a.swap_cols(s, pj);
    v.swap_cols(s, pj);

    // clear row and column s; re-pivot whenever a smaller remainder appears
    bool clean = false;
    while (!clean) {
      clean = true;
      for (int i = s + 1; i < a.rows(); ++i) {
        if (a.at(i, s) == 0) continue;
        mpz_class q = a.at(i, s) / a.at(s, s);  // truncated division
        a.add_row(i, s, -q);
        u.add_row(i, s, -q);
        if (a.at(i, s) != 0) {
          // remainder strictly smaller than pivot; promote it
          a.swap_rows(s, i);
          u.swap_rows(s, i);
          clean = false;
        }
      }
      for (int j = s + 1; j < a.cols(); ++j) {
        if (a.at(s, j) == 0) continue;
        mpz_class q = a.at(s, j) / a.at(s, s);
        a.add_col(j, s, -q);
        v.add_col(j, s, -q);
        if (a.at(s, j) != 0) {
          a.swap_cols(s, j);
          v.swap_cols(s, j);
          clean = false;
        }
      }
      if (clean) {
        // enforce divisibility of the lower-right block by the pivot
        for (int i = s + 1; i < a.rows() && clean; ++i)
          for (int j = s + 1; j < a.cols() && clean; ++j)
            if (a.at(i, j) % a.at(s, s) != 0) {
              a.add_row(s, i, 1);
              u.add_row(s, i, 1);
              clean = false;
            }
      }
    }
    if (a.at(s, s) < 0) {
      a.negate_row(s);
      u.negate_row(s);
    }
  }

  res.d.assign(nmin, 0);
  for (int i = 0; i < nmin; ++i) res.d[i] = a.at(i, i);
  res.u = std::move(u);
  res.v = std::move(v);
  return res;
}

std::set<mpz_class> quotient_torsion_primes(int ambient_rank, const IntMatrix& generators) {
  if (generators.cols() != ambient_rank)
    throw std::invalid_argument("quotient_torsion_primes: generator width != ambient rank");
  std::set<mpz_class> out;
  if (generators.rows() == 0) return out;
  SnfResult s = smith_normal_form(generators);
  for (const auto& f : s.torsion())
    for (const auto& p : prime_divisors(f)) out.insert(p);
  return out;
}

}  // namespace rdlift
