#include "rdlift/ring_matrix.hpp"

#include <stdexcept>

namespace rdlift {

RingMatrix::RingMatrix(GaloisRing ring, int rows, int cols)
    : ring_(std::move(ring)), rows_(rows), cols_(cols) {
  a_.assign(static_cast<size_t>(rows) * cols, ring_.zero());
}

RingMatrix RingMatrix::identity(const GaloisRing& ring, int n) {
  RingMatrix m(ring, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = ring.one();
  return m;
}

RingMatrix RingMatrix::from_int(const GaloisRing& ring, const IntMatrix& im) {
  RingMatrix m(ring, im.rows(), im.cols());
  for (int i = 0; i < im.rows(); ++i)
    for (int j = 0; j < im.cols(); ++j) m.at(i, j) = ring.from_int(im.at(i, j));
  return m;
}

RingMatrix RingMatrix::operator*(const RingMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("RingMatrix: dimension mismatch");
  RingMatrix r(ring_, rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const auto& v = at(i, k);
      if (ring_.is_zero(v)) continue;
      for (int j = 0; j < rhs.cols_; ++j)
        r.at(i, j) = ring_.add(r.at(i, j), ring_.mul(v, rhs.at(k, j)));
    }
  return r;
}

RingMatrix RingMatrix::operator+(const RingMatrix& rhs) const {
  RingMatrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.add(a_[i], rhs.a_[i]);
  return r;
}

RingMatrix RingMatrix::operator-(const RingMatrix& rhs) const {
  RingMatrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.sub(a_[i], rhs.a_[i]);
  return r;
}

bool RingMatrix::operator==(const RingMatrix& rhs) const {
  return rows_ == rhs.rows_ && cols_ == rhs.cols_ && a_ == rhs.a_;
}

RingMatrix RingMatrix::scale(const GaloisRing::Elem& c) const {
  RingMatrix r(ring_, rows_, cols_);
  for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = ring_.mul(a_[i], c);
  return r;
}

RingMatrix RingMatrix::pow(mpz_class exp) const {
  if (rows_ != cols_) throw std::invalid_argument("RingMatrix::pow: not square");
  RingMatrix r = identity(ring_, rows_);
  RingMatrix base = *this;
  while (exp > 0) {
    if (mpz_odd_p(exp.get_mpz_t())) r = r * base;
    base = base * base;
    exp >>= 1;
  }
  return r;
}

bool RingMatrix::is_invertible() const {
  if (rows_ != cols_) return false;
  return ring_.is_unit(det());
}

RingMatrix RingMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("RingMatrix::inverse: not square");
  const int n = rows_;
  RingMatrix a = *this;
  RingMatrix inv = identity(ring_, n);
  // over a local ring a unit pivot exists in every column iff invertible
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int i = col; i < n; ++i)
      if (ring_.is_unit(a.at(i, col))) {
        piv = i;
        break;
      }
    if (piv < 0) throw std::invalid_argument("RingMatrix::inverse: matrix not invertible");
    for (int j = 0; j < n; ++j) {
      std::swap(a.at(col, j), a.at(piv, j));
      std::swap(inv.at(col, j), inv.at(piv, j));
    }
    GaloisRing::Elem pi = ring_.inv(a.at(col, col));
    for (int j = 0; j < n; ++j) {
      a.at(col, j) = ring_.mul(a.at(col, j), pi);
      inv.at(col, j) = ring_.mul(inv.at(col, j), pi);
    }
    for (int i = 0; i < n; ++i) {
      if (i == col || ring_.is_zero(a.at(i, col))) continue;
      GaloisRing::Elem f = a.at(i, col);
      for (int j = 0; j < n; ++j) {
        a.at(i, j) = ring_.sub(a.at(i, j), ring_.mul(f, a.at(col, j)));
        inv.at(i, j) = ring_.sub(inv.at(i, j), ring_.mul(f, inv.at(col, j)));
      }
    }
  }
  return inv;
}

GaloisRing::Elem RingMatrix::det() const {
  if (rows_ != cols_) throw std::invalid_argument("RingMatrix::det: not square");
  const int n = rows_;
  if (n == 0) return ring_.one();
  // subset DP Laplace expansion, division-free (n stays small here)
  std::vector<GaloisRing::Elem> f(size_t(1) << n, ring_.zero());
  f[0] = ring_.one();
  for (unsigned s = 1; s < (1u << n); ++s) {
    int row = __builtin_popcount(s) - 1;
    GaloisRing::Elem acc = ring_.zero();
    int sign = 1;
    for (int j = 0; j < n; ++j) {
      if (!(s & (1u << j))) continue;
      const auto& v = at(row, j);
      if (!ring_.is_zero(v)) {
        GaloisRing::Elem term = ring_.mul(v, f[s & ~(1u << j)]);
        acc = sign > 0 ? ring_.add(acc, term) : ring_.sub(acc, term);
      }
      sign = -sign;
    }
    f[s] = acc;
  }
  return f[(size_t(1) << n) - 1];
}

RingMatrix RingMatrix::transpose() const {
  RingMatrix t(ring_, cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

bool RingMatrix::is_zero() const {
  for (const auto& v : a_)
    if (!ring_.is_zero(v)) return false;
  return true;
}

bool RingMatrix::is_identity() const {
  if (rows_ != cols_) return false;
  return *this == identity(ring_, rows_);
}

int RingMatrix::min_val() const {
  int v = ring_.k();
  for (const auto& x : a_) v = std::min(v, ring_.val(x));
  return v;
}

RingMatrix RingMatrix::reduced(int precision) const {
  GaloisRing target = ring_.with_precision(precision);
  RingMatrix r(target, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = ring_.reduce_elem(at(i, j), precision);
  return r;
}

RingMatrix RingMatrix::lifted(const GaloisRing& target) const {
  RingMatrix r(target, rows_, cols_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) r.at(i, j) = target.make(at(i, j));
  return r;
}

std::vector<mpz_class> RingMatrix::flatten() const {
  std::vector<mpz_class> out;
  out.reserve(a_.size() * ring_.e());
  for (const auto& el : a_)
    for (const auto& c : el) out.push_back(c);
  return out;
}

RingMatrix RingMatrix::unflatten(const GaloisRing& ring, int rows, int cols,
                                 const std::vector<mpz_class>& flat) {
  RingMatrix m(ring, rows, cols);
  size_t idx = 0;
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) {
      GaloisRing::Elem el(ring.e());
      for (int c = 0; c < ring.e(); ++c) el[c] = flat[idx++];
      m.at(i, j) = ring.make(std::move(el));
    }
  return m;
}

}  // namespace rdlift
