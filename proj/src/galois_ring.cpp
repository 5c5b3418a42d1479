#include "rdlift/galois_ring.hpp"

#include <stdexcept>

#include "rdlift/numutil.hpp"

namespace rdlift {

namespace {

using Poly = std::vector<mpz_class>;  // dense, poly[i] = coeff of x^i

Poly poly_trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

Poly poly_mul_mod_p(const Poly& a, const Poly& b, const mpz_class& p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  for (auto& x : c) x = ((x % p) + p) % p;
  return poly_trim(std::move(c));
}

// remainder of a modulo monic f, coefficients mod p
Poly poly_rem_mod_p(Poly a, const Poly& f, const mpz_class& p) {
  int df = static_cast<int>(f.size()) - 1;
  a = poly_trim(std::move(a));
  while (static_cast<int>(a.size()) - 1 >= df) {
    int shift = static_cast<int>(a.size()) - 1 - df;
    mpz_class c = a.back();
    for (int i = 0; i <= df; ++i) {
      a[shift + i] -= c * f[i];
      a[shift + i] = ((a[shift + i] % p) + p) % p;
    }
    a = poly_trim(std::move(a));
  }
  return a;
}

Poly poly_powmod(Poly base, mpz_class exp, const Poly& f, const mpz_class& p) {
  Poly r = {1};
  base = poly_rem_mod_p(std::move(base), f, p);
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) r = poly_rem_mod_p(poly_mul_mod_p(r, base, p), f, p);
    base = poly_rem_mod_p(poly_mul_mod_p(base, base, p), f, p);
    exp >>= 1;
  }
  return r;
}

Poly poly_gcd_mod_p(Poly a, Poly b, const mpz_class& p) {
  a = poly_trim(std::move(a));
  b = poly_trim(std::move(b));
  while (!b.empty()) {
    // make b monic
    mpz_class lead = b.back(), li;
    mpz_invert(li.get_mpz_t(), lead.get_mpz_t(), p.get_mpz_t());
    for (auto& x : b) x = (x * li) % p;
    a = poly_rem_mod_p(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

bool poly_irreducible_mod_p(const Poly& f, const mpz_class& p) {
  int e = static_cast<int>(f.size()) - 1;
  Poly x = {0, 1};
  // x^(p^e) = x mod f, and gcd(x^(p^d) - x, f) = 1 for proper divisors d of e
  Poly xq = x;
  for (int d = 1; d <= e; ++d) {
    xq = poly_powmod(xq, p, f, p);
    if (d < e && e % d == 0) {
      Poly diff = xq;
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = ((diff[1] - 1) % p + p) % p;
      diff = poly_trim(std::move(diff));
      Poly g = poly_gcd_mod_p(diff, f, p);
      if (static_cast<int>(g.size()) - 1 != 0) return false;
    }
  }
  Poly diff = xq;
  if (diff.size() < 2) diff.resize(2, 0);
  diff[1] = ((diff[1] - 1) % p + p) % p;
  return poly_trim(std::move(diff)).empty();
}

}  // namespace

std::vector<mpz_class> find_irreducible_poly(const mpz_class& p, int e) {
  if (e == 1) return {0};  // modulus x
  // enumerate non-leading coefficient vectors by ascending integer value
  mpz_class total = pow_mpz(p, static_cast<unsigned long>(e));
  for (mpz_class code = 0; code < total; ++code) {
    Poly f(e + 1, 0);
    f[e] = 1;
    mpz_class c = code;
    for (int i = 0; i < e; ++i) {
      f[i] = c % p;
      c /= p;
    }
    if (f[0] == 0) continue;  // divisible by x
    if (poly_irreducible_mod_p(f, p)) {
      std::vector<mpz_class> mod(e);
      for (int i = 0; i < e; ++i) mod[i] = f[i];
      return mod;
    }
  }
  throw std::logic_error("find_irreducible_poly: none found");
}

GaloisRing::GaloisRing(const mpz_class& p, int k, int e) : p_(p), k_(k), e_(e) {
  if (!is_prime(p)) throw std::invalid_argument("GaloisRing: p must be prime");
  if (k < 1 || e < 1) throw std::invalid_argument("GaloisRing: need k >= 1, e >= 1");
  pk_ = pow_mpz(p, static_cast<unsigned long>(k));
  mod_ = find_irreducible_poly(p, e);
}

mpz_class GaloisRing::residue_card() const { return pow_mpz(p_, static_cast<unsigned long>(e_)); }

GaloisRing::Elem GaloisRing::one() const {
  Elem a(e_, 0);
  a[0] = 1;
  return a;
}

GaloisRing::Elem GaloisRing::from_int(const mpz_class& v) const {
  Elem a(e_, 0);
  a[0] = ((v % pk_) + pk_) % pk_;
  return a;
}

GaloisRing::Elem GaloisRing::make(std::vector<mpz_class> coeffs) const {
  if (static_cast<int>(coeffs.size()) != e_)
    throw std::invalid_argument("GaloisRing::make: wrong coefficient count");
  reduce_inplace(coeffs);
  return coeffs;
}

void GaloisRing::reduce_inplace(Elem& a) const {
  for (auto& x : a) x = ((x % pk_) + pk_) % pk_;
}

GaloisRing::Elem GaloisRing::add(const Elem& a, const Elem& b) const {
  Elem c(e_);
  for (int i = 0; i < e_; ++i) c[i] = (a[i] + b[i]) % pk_;
  return c;
}

GaloisRing::Elem GaloisRing::sub(const Elem& a, const Elem& b) const {
  Elem c(e_);
  for (int i = 0; i < e_; ++i) c[i] = ((a[i] - b[i]) % pk_ + pk_) % pk_;
  return c;
}

GaloisRing::Elem GaloisRing::neg(const Elem& a) const {
  Elem c(e_);
  for (int i = 0; i < e_; ++i) c[i] = ((-a[i]) % pk_ + pk_) % pk_;
  return c;
}

GaloisRing::Elem GaloisRing::mul_raw(const Elem& a, const Elem& b) const {
  std::vector<mpz_class> c(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < e_; ++j) c[i + j] += a[i] * b[j];
  }
  // reduce by monic modulus x^e + mod_{e-1} x^{e-1} + ... + mod_0
  for (int d = 2 * e_ - 2; d >= e_; --d) {
    if (c[d] == 0) continue;
    mpz_class top = c[d];
    c[d] = 0;
    for (int i = 0; i < e_; ++i) c[d - e_ + i] -= top * mod_[i];
  }
  Elem r(c.begin(), c.begin() + e_);
  reduce_inplace(r);
  return r;
}

GaloisRing::Elem GaloisRing::mul(const Elem& a, const Elem& b) const {
  if (e_ == 1) {
    Elem c(1);
    c[0] = (a[0] * b[0]) % pk_;
    return c;
  }
  return mul_raw(a, b);
}

GaloisRing::Elem GaloisRing::mul_int(const Elem& a, const mpz_class& c) const {
  Elem r(e_);
  mpz_class cc = ((c % pk_) + pk_) % pk_;
  for (int i = 0; i < e_; ++i) r[i] = (a[i] * cc) % pk_;
  return r;
}

GaloisRing::Elem GaloisRing::pow(Elem base, mpz_class exp) const {
  if (exp < 0) throw std::invalid_argument("GaloisRing::pow: negative exponent");
  Elem r = one();
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) r = mul(r, base);
    base = mul(base, base);
    exp >>= 1;
  }
  return r;
}

bool GaloisRing::is_zero(const Elem& a) const {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

int GaloisRing::val(const Elem& a) const {
  int v = k_;
  for (const auto& x : a) {
    if (x == 0) continue;
    v = std::min(v, p_valuation(x, p_));
    if (v == 0) break;
  }
  return v;
}

GaloisRing::Elem GaloisRing::divide_exact_p(const Elem& a, int v) const {
  if (val(a) < v) throw std::invalid_argument("divide_exact_p: insufficient valuation");
  mpz_class pv = pow_mpz(p_, static_cast<unsigned long>(v));
  Elem r(e_);
  for (int i = 0; i < e_; ++i) r[i] = a[i] / pv;
  return r;
}

GaloisRing::Elem GaloisRing::inv(const Elem& a) const {
  if (!is_unit(a)) throw std::invalid_argument("GaloisRing::inv: not a unit");
  // inverse mod p by Fermat in the residue field, then Newton lifting
  GaloisRing f0 = (k_ == 1) ? *this : with_precision(1);
  Elem a0(e_);
  for (int i = 0; i < e_; ++i) a0[i] = a[i] % p_;
  Elem z0 = f0.pow(a0, f0.residue_card() - 2);
  Elem z = z0;
  z.resize(e_);
  reduce_inplace(z);
  // z <- z(2 - az), doubling correct digits each round
  for (int it = 0; it < k_ + 1; ++it) {
    Elem az = mul(a, z);
    Elem t = sub(from_int(2), az);
    z = mul(z, t);
    if (mul(a, z) == one()) break;
  }
  if (mul(a, z) != one()) throw std::logic_error("GaloisRing::inv: lift failed");
  return z;
}

GaloisRing::Elem GaloisRing::reduce_elem(const Elem& a, int j) const {
  mpz_class pj = pow_mpz(p_, static_cast<unsigned long>(j));
  Elem r(e_);
  for (int i = 0; i < e_; ++i) r[i] = a[i] % pj;
  return r;
}

GaloisRing::Elem GaloisRing::teichmuller(const Elem& a) const {
  if (!is_unit(a)) throw std::invalid_argument("teichmuller: residue must be nonzero");
  mpz_class q = residue_card();
  Elem t = a;
  // x -> x^(p^e) contracts toward the prime-to-p torsion section
  for (int it = 0; it < 2 * k_ + 4; ++it) {
    Elem next = pow(t, q);
    if (next == t) break;
    t = next;
  }
  if (pow(t, q) != t || pow(t, q - 1) != one())
    throw std::logic_error("teichmuller: iteration did not stabilize");
  return t;
}

bool GaloisRing::is_teichmuller(const Elem& a) const {
  return is_unit(a) && pow(a, residue_card() - 1) == one();
}

GaloisRing::Elem GaloisRing::principal_unit_root(const Elem& a, const mpz_class& d) const {
  if (val(sub(a, one())) < 1)
    throw std::invalid_argument("principal_unit_root: need a = 1 mod p");
  if (d % p_ == 0) throw std::invalid_argument("principal_unit_root: p | d");
  // Newton for c^d = a starting at c = 1; d is a unit so each step is exact
  Elem c = one();
  Elem dinv = inv(from_int(d));
  for (int it = 0; it < k_ + 2; ++it) {
    Elem cd = pow(c, d);
    if (cd == a) break;
    // c <- c - (c^d - a) / (d c^(d-1))
    Elem deriv = mul_int(pow(c, d - 1), d);
    Elem delta = mul(sub(cd, a), inv(deriv));
    c = sub(c, delta);
  }
  if (pow(c, d) != a) throw std::logic_error("principal_unit_root: no convergence");
  return c;
}

}  // namespace rdlift
