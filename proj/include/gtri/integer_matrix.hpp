#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace gtri {

using Integer = boost::multiprecision::cpp_int;

/// Dense matrix of arbitrary-precision integers, row-major.
class IntegerMatrix {
 public:
  IntegerMatrix() = default;
  IntegerMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}
  IntegerMatrix(int rows, int cols, const std::vector<long>& row_major);

  static IntegerMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Integer& operator()(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Integer& operator()(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  IntegerMatrix operator*(const IntegerMatrix& rhs) const;
  IntegerMatrix transpose() const;
  bool is_zero() const;
  /// Bareiss fraction-free determinant; square matrices only.
  Integer determinant() const;

  void swap_rows(int a, int b);
  void swap_cols(int a, int b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(int dst, int src, const Integer& factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(int dst, int src, const Integer& factor);
  void negate_row(int r);

  /// One row per line, entries separated by single spaces.
  std::string str() const;

  friend bool operator==(const IntegerMatrix&, const IntegerMatrix&) = default;

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Integer> data_;
};

struct SmithForm {
  IntegerMatrix S, U, V;  // U * m * V == S

  /// Nonzero diagonal entries of S, in order.
  std::vector<Integer> invariant_factors() const;
  int rank() const { return static_cast<int>(invariant_factors().size()); }
};

/// Smith normal form with smallest-magnitude pivoting: U, V unimodular,
/// S diagonal with non-negative entries, each dividing the next.
SmithForm smith_normal_form(const IntegerMatrix& m);

}  // namespace gtri
