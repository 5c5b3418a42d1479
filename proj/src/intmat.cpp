#include "rdlift/intmat.hpp"

#include <stdexcept>

namespace rdlift {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> init) {
  rows_ = static_cast<int>(init.size());
  cols_ = rows_ ? static_cast<int>(init.begin()->size()) : 0;
  a_.reserve(static_cast<size_t>(rows_) * cols_);
  for (const auto& row : init) {
    if (static_cast<int>(row.size()) != cols_)
      throw std::invalid_argument("IntMatrix: ragged initializer");
    for (long v : row) a_.emplace_back(v);
  }
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<mpz_class>>& rows, int cols) {
  IntMatrix m(static_cast<int>(rows.size()), cols);
  for (int i = 0; i < m.rows(); ++i) {
    if (static_cast<int>(rows[i].size()) != cols)
      throw std::invalid_argument("IntMatrix::from_rows: ragged input");
    for (int j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

IntMatrix IntMatrix::operator*(const IntMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntMatrix: dimension mismatch");
  IntMatrix r(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const mpz_class& v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) r.at(i, j) += v * rhs.at(k, j);
    }
  return r;
}

void IntMatrix::swap_rows(int i, int j) {
  if (i == j) return;
  for (int c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
}

void IntMatrix::swap_cols(int i, int j) {
  if (i == j) return;
  for (int r = 0; r < rows_; ++r) std::swap(at(r, i), at(r, j));
}

void IntMatrix::add_row(int i, int j, const mpz_class& c) {
  for (int k = 0; k < cols_; ++k) at(i, k) += c * at(j, k);
}

void IntMatrix::add_col(int i, int j, const mpz_class& c) {
  for (int k = 0; k < rows_; ++k) at(k, i) += c * at(k, j);
}

void IntMatrix::negate_row(int i) {
  for (int k = 0; k < cols_; ++k) at(i, k) = -at(i, k);
}

void IntMatrix::negate_col(int j) {
  for (int k = 0; k < rows_; ++k) at(k, j) = -at(k, j);
}

bool IntMatrix::is_zero() const {
  for (const auto& v : a_)
    if (v != 0) return false;
  return true;
}

}  // namespace rdlift
