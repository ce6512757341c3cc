#include "gtri/integer_matrix.hpp"

#include <sstream>
#include <stdexcept>

namespace gtri {

IntegerMatrix::IntegerMatrix(int rows, int cols, const std::vector<long>& row_major) : IntegerMatrix(rows, cols) {
  if (row_major.size() != data_.size()) throw std::invalid_argument("IntegerMatrix: entry count mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = row_major[i];
}

IntegerMatrix IntegerMatrix::identity(int n) {
  IntegerMatrix m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntegerMatrix IntegerMatrix::operator*(const IntegerMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("IntegerMatrix: shape mismatch in product");
  IntegerMatrix out(rows_, rhs.cols_);
  for (int i = 0; i < rows_; ++i)
    for (int k = 0; k < cols_; ++k) {
      const Integer& a = (*this)(i, k);
      if (a == 0) continue;
      for (int j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

IntegerMatrix IntegerMatrix::transpose() const {
  IntegerMatrix out(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

bool IntegerMatrix::is_zero() const {
  for (const Integer& x : data_)
    if (x != 0) return false;
  return true;
}

Integer IntegerMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const int n = rows_;
  if (n == 0) return 1;
  IntegerMatrix a = *this;
  Integer sign = 1;
  Integer prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (a(k, k) == 0) {
      int swap = -1;
      for (int i = k + 1; i < n; ++i)
        if (a(i, k) != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      a.swap_rows(k, swap);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) a(i, j) = (a(i, j) * a(k, k) - a(i, k) * a(k, j)) / prev;
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

void IntegerMatrix::swap_rows(int a, int b) {
  if (a == b) return;
  for (int j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntegerMatrix::swap_cols(int a, int b) {
  if (a == b) return;
  for (int i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntegerMatrix::add_row_multiple(int dst, int src, const Integer& factor) {
  if (factor == 0) return;
  for (int j = 0; j < cols_; ++j) (*this)(dst, j) += factor * (*this)(src, j);
}

void IntegerMatrix::add_col_multiple(int dst, int src, const Integer& factor) {
  if (factor == 0) return;
  for (int i = 0; i < rows_; ++i) (*this)(i, dst) += factor * (*this)(i, src);
}

void IntegerMatrix::negate_row(int r) {
  for (int j = 0; j < cols_; ++j) (*this)(r, j) = -(*this)(r, j);
}

std::string IntegerMatrix::str() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) out << (j ? " " : "") << (*this)(i, j);
    out << '\n';
  }
  return out.str();
}

std::vector<Integer> SmithForm::invariant_factors() const {
  std::vector<Integer> out;
  for (int i = 0; i < std::min(S.rows(), S.cols()); ++i)
    if (S(i, i) != 0) out.push_back(S(i, i));
  return out;
}

SmithForm smith_normal_form(const IntegerMatrix& m) {
  SmithForm f{m, IntegerMatrix::identity(m.rows()), IntegerMatrix::identity(m.cols())};
  IntegerMatrix& a = f.S;
  const int rows = a.rows();
  const int cols = a.cols();

  auto row_op = [&](int dst, int src, const Integer& q) {
    a.add_row_multiple(dst, src, q);
    f.U.add_row_multiple(dst, src, q);
  };
  auto col_op = [&](int dst, int src, const Integer& q) {
    a.add_col_multiple(dst, src, q);
    f.V.add_col_multiple(dst, src, q);
  };

  for (int t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero magnitude in the trailing block.
      int pr = -1, pc = -1;
      Integer best;
      for (int i = t; i < rows; ++i)
        for (int j = t; j < cols; ++j) {
          if (a(i, j) == 0) continue;
          Integer mag = abs(a(i, j));
          if (pr < 0 || mag < best) {
            best = mag;
            pr = i;
            pc = j;
          }
        }
      if (pr < 0) return f;
      a.swap_rows(t, pr);
      f.U.swap_rows(t, pr);
      a.swap_cols(t, pc);
      f.V.swap_cols(t, pc);

      bool clean = true;
      for (int i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_op(i, t, -Integer(a(i, t) / a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_op(j, t, -Integer(a(t, j) / a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce divisibility into the trailing block.
      int bad_row = -1;
      for (int i = t + 1; i < rows && bad_row < 0; ++i)
        for (int j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad_row = i;
            break;
          }
      if (bad_row >= 0) {
        row_op(t, bad_row, 1);
        continue;
      }
      if (a(t, t) < 0) {
        a.negate_row(t);
        f.U.negate_row(t);
      }
      break;
    }
  }
  return f;
}

}  // namespace gtri
