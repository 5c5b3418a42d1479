#pragma once

#include <gmpxx.h>
#include <vector>

namespace rdlift {

// Galois ring GR(p^k, e) = (Z/p^k)[x] / (modulus), with modulus a monic
// degree-e polynomial whose reduction mod p is irreducible.  For e = 1 this
// is Z/p^k.  Elements are coefficient vectors of length e with canonical
// entries in [0, p^k).
class GaloisRing {
 public:
  using Elem = std::vector<mpz_class>;

  GaloisRing(const mpz_class& p, int k, int e = 1);

  const mpz_class& p() const { return p_; }
  int k() const { return k_; }
  int e() const { return e_; }
  const mpz_class& pk() const { return pk_; }
  mpz_class residue_card() const;  // p^e
  // modulus coefficients c_0..c_{e-1} of x^e + c_{e-1} x^{e-1} + ... + c_0
  const std::vector<mpz_class>& modulus() const { return mod_; }

  bool same_ring(const GaloisRing& o) const {
    return p_ == o.p_ && k_ == o.k_ && e_ == o.e_;
  }

  Elem zero() const { return Elem(e_, 0); }
  Elem one() const;
  Elem from_int(const mpz_class& v) const;
  Elem make(std::vector<mpz_class> coeffs) const;  // reduces mod p^k

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  Elem mul_int(const Elem& a, const mpz_class& c) const;
  Elem pow(Elem base, mpz_class exp) const;  // exp >= 0

  bool is_zero(const Elem& a) const;
  // p-adic valuation: largest v <= k with a in p^v * R (k for a = 0)
  int val(const Elem& a) const;
  bool is_unit(const Elem& a) const { return val(a) == 0; }
  Elem inv(const Elem& a) const;
  // exact division of canonical coefficients by p^v; requires val(a) >= v
  Elem divide_exact_p(const Elem& a, int v) const;

  // image in GR(p^j, e) for j <= k
  Elem reduce_elem(const Elem& a, int j) const;
  GaloisRing with_precision(int j) const { return GaloisRing(p_, j, e_); }
  GaloisRing residue_field() const { return with_precision(1); }

  // the unique lift t of the residue of a with t^(p^e - 1) = 1; a must be a unit
  Elem teichmuller(const Elem& a) const;
  bool is_teichmuller(const Elem& a) const;

  // unique b = 1 mod p with b^d = a, for a = 1 mod p and gcd(d, p) = 1
  Elem principal_unit_root(const Elem& a, const mpz_class& d) const;

 private:
  mpz_class p_;
  int k_, e_;
  mpz_class pk_;
  std::vector<mpz_class> mod_;

  void reduce_inplace(Elem& a) const;
  Elem mul_raw(const Elem& a, const Elem& b) const;  // poly mul + modulus reduction
};

// smallest monic irreducible of degree e over F_p, ordered by the integer
// value sum c_i p^i of the non-leading coefficients
std::vector<mpz_class> find_irreducible_poly(const mpz_class& p, int e);

}  // namespace rdlift
