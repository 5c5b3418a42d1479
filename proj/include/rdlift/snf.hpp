#pragma once

#include <set>

#include "rdlift/intmat.hpp"

namespace rdlift {

// Smith normal form u*m*v = diag(d), with d divisibility-ordered and
// nonnegative, u and v unimodular.
struct SnfResult {
  std::vector<mpz_class> d;  // invariant factors, d[i] | d[i+1], zeros trailing
  IntMatrix u, v;
  int rows = 0, cols = 0;

  // factors > 1 (torsion part), zeros and units dropped
  std::vector<mpz_class> torsion() const;
  int rank() const;  // number of nonzero invariant factors
};

SnfResult smith_normal_form(const IntMatrix& m);

// primes p such that Z^rank / row-span(generators) has p-torsion
std::set<mpz_class> quotient_torsion_primes(int ambient_rank, const IntMatrix& generators);

}  // namespace rdlift
