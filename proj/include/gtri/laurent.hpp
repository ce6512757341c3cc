#pragma once

#include <map>
#include <string>
#include <vector>

#include "gtri/integer_matrix.hpp"

namespace gtri {

/// Integer Laurent polynomial in one variable t; zero coefficients are never
/// stored.
class LaurentPolynomial {
 public:
  LaurentPolynomial() = default;
  /// Dense coefficients c[0] + c[1] t + ... shifted by t^low.
  LaurentPolynomial(const std::vector<long>& coefficients, int low = 0);
  static LaurentPolynomial constant(const Integer& c);
  /// c * t^k.
  static LaurentPolynomial monomial(const Integer& c, int k);

  bool is_zero() const { return terms_.empty(); }
  /// Exponent of the lowest / highest term; 0 for the zero polynomial.
  int low_degree() const;
  int high_degree() const;
  /// Coefficient of t^k.
  Integer coefficient(int k) const;
  const std::map<int, Integer>& terms() const { return terms_; }

  /// Value at an integer; throws std::domain_error at t = 0 when a negative
  /// power is present.
  Integer evaluate(long t) const;

  LaurentPolynomial operator+(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator-(const LaurentPolynomial& rhs) const;
  LaurentPolynomial operator-() const;
  LaurentPolynomial operator*(const LaurentPolynomial& rhs) const;
  LaurentPolynomial& operator+=(const LaurentPolynomial& rhs);

  /// Multiply by t^k.
  LaurentPolynomial shifted(int k) const;
  /// Substitute t -> t^-1.
  LaurentPolynomial reflected() const;
  /// Unit normal form: lowest exponent 0, positive leading coefficient.
  LaurentPolynomial normalized() const;

  /// Sparse "c*t^k" terms in ascending k, e.g. "1*t^0 - 1*t^2 - 1*t^3"; the
  /// zero polynomial prints as "0".
  std::string str() const;

  friend bool operator==(const LaurentPolynomial&, const LaurentPolynomial&) = default;

 private:
  std::map<int, Integer> terms_;
};

/// Equal up to multiplication by units +-t^k.
bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b);
/// Equal up to units and the substitution t -> t^-1.
bool equal_up_to_units_and_reflection(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Greatest common divisor in Z[t, t^-1], in unit normal form. gcd(0, 0) = 0.
LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Exact division; throws std::domain_error when b does not divide a.
LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b);

/// Determinant of a square matrix of Laurent polynomials (fraction-free
/// Bareiss elimination). The 0x0 determinant is 1.
LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m);

}  // namespace gtri
