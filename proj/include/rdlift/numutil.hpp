#pragma once

#include <gmpxx.h>
#include <set>
#include <vector>

namespace rdlift {

bool is_prime(const mpz_class& n);
mpz_class next_prime_above(const mpz_class& n);

// prime factorization by trial division; inputs here are small (lattice
// indices, Weyl orders, component-group bounds)
std::vector<std::pair<mpz_class, int>> factorize(mpz_class n);

// the set of primes dividing n (n > 0); empty for n = 1
std::set<mpz_class> prime_divisors(const mpz_class& n);

// p-adic valuation of n != 0
int p_valuation(const mpz_class& n, const mpz_class& p);

mpz_class pow_mpz(const mpz_class& base, unsigned long exp);

// all partitions of n as weakly decreasing part lists (independent test oracle
// for type-A orbit counts lives in the test tree; this one feeds Levi naming)
std::vector<std::vector<int>> partitions_of(int n);

}  // namespace rdlift
