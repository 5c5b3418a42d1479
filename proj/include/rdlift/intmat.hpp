#pragma once

#include <gmpxx.h>
#include <initializer_list>
#include <vector>

namespace rdlift {

// Dense matrix over Z with arbitrary-precision entries, row-major.
class IntMatrix {
 public:
  IntMatrix() : rows_(0), cols_(0) {}
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<long>> init);

  static IntMatrix identity(int n);
  static IntMatrix from_rows(const std::vector<std::vector<mpz_class>>& rows, int cols);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  mpz_class& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
  const mpz_class& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  IntMatrix transpose() const;
  IntMatrix operator*(const IntMatrix& rhs) const;
  bool operator==(const IntMatrix& rhs) const = default;

  void swap_rows(int i, int j);
  void swap_cols(int i, int j);
  // row i += c * row j, col i += c * col j
  void add_row(int i, int j, const mpz_class& c);
  void add_col(int i, int j, const mpz_class& c);
  void negate_row(int i);
  void negate_col(int i);

  bool is_zero() const;

 private:
  int rows_, cols_;
  std::vector<mpz_class> a_;
};

}  // namespace rdlift
