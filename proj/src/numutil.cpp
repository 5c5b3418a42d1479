#include "rdlift/numutil.hpp"

#include <stdexcept>

namespace rdlift {

bool is_prime(const mpz_class& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

mpz_class next_prime_above(const mpz_class& n) {
  mpz_class r;
  mpz_nextprime(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::vector<std::pair<mpz_class, int>> factorize(mpz_class n) {
  if (n < 0) n = -n;
  if (n == 0) throw std::invalid_argument("factorize: zero has no factorization");
  std::vector<std::pair<mpz_class, int>> out;
  mpz_class d = 2;
  while (d * d <= n) {
    if (n % d == 0) {
      int e = 0;
      while (n % d == 0) {
        n /= d;
        ++e;
      }
      out.emplace_back(d, e);
    }
    if (d == 2) d = 3; else d += 2;
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

std::set<mpz_class> prime_divisors(const mpz_class& n) {
  std::set<mpz_class> out;
  for (const auto& [p, e] : factorize(n)) out.insert(p);
  return out;
}

int p_valuation(const mpz_class& n, const mpz_class& p) {
  if (n == 0) throw std::invalid_argument("p_valuation of zero");
  mpz_class m = abs(n);
  int v = 0;
  while (m % p == 0) {
    m /= p;
    ++v;
  }
  return v;
}

mpz_class pow_mpz(const mpz_class& base, unsigned long exp) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

namespace {
void partitions_rec(int n, int maxpart, std::vector<int>& cur,
                    std::vector<std::vector<int>>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, maxpart); part >= 1; --part) {
    cur.push_back(part);
    partitions_rec(n - part, part, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

}  // namespace rdlift
