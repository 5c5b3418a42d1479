#pragma once

#include "rdlift/galois_ring.hpp"
#include "rdlift/intmat.hpp"

namespace rdlift {

// Matrix over a Galois ring.  Entries are GaloisRing::Elem, row-major.
class RingMatrix {
 public:
  RingMatrix() = default;
  RingMatrix(GaloisRing ring, int rows, int cols);
  static RingMatrix identity(const GaloisRing& ring, int n);
  // entrywise from_int of an integer matrix (e.g. a canonical lift)
  static RingMatrix from_int(const GaloisRing& ring, const IntMatrix& m);

  const GaloisRing& ring() const { return ring_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  GaloisRing::Elem& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const GaloisRing::Elem& at(int i, int j) const {
    return a_[static_cast<size_t>(i) * cols_ + j];
  }

  RingMatrix operator*(const RingMatrix& rhs) const;
  RingMatrix operator+(const RingMatrix& rhs) const;
  RingMatrix operator-(const RingMatrix& rhs) const;
  bool operator==(const RingMatrix& rhs) const;

  RingMatrix scale(const GaloisRing::Elem& c) const;
  RingMatrix pow(mpz_class exp) const;        // square matrices, exp >= 0
  RingMatrix inverse() const;                 // throws if not a unit
  bool is_invertible() const;
  GaloisRing::Elem det() const;               // division-free
  RingMatrix transpose() const;

  bool is_zero() const;
  bool is_identity() const;
  // min valuation over entries (ring().k() for the zero matrix)
  int min_val() const;

  RingMatrix reduced(int precision) const;    // image over GR(p^j, e)
  // canonical entrywise lift into a higher-precision ring
  RingMatrix lifted(const GaloisRing& target) const;

  // flatten to a coefficient row of length rows*cols*e (for span computations)
  std::vector<mpz_class> flatten() const;
  static RingMatrix unflatten(const GaloisRing& ring, int rows, int cols,
                              const std::vector<mpz_class>& flat);

 private:
  GaloisRing ring_{mpz_class(2), 1, 1};
  int rows_ = 0, cols_ = 0;
  std::vector<GaloisRing::Elem> a_;
};

}  // namespace rdlift
