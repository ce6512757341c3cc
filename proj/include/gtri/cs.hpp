#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gtri/laurent.hpp"
#include "gtri/presentation.hpp"
#include "gtri/quotients.hpp"

namespace gtri {

using Vec3 = std::array<long, 3>;
using Mat3 = std::array<Vec3, 3>;

/// 3x3 integer matrix with determinant +-1.
class MonodromyMatrix {
 public:
  /// Row-major entries. Throws std::invalid_argument unless det = +-1.
  explicit MonodromyMatrix(const std::array<long, 9>& row_major);
  explicit MonodromyMatrix(const Mat3& m);

  static MonodromyMatrix paper();
  static MonodromyMatrix identity();

  const Mat3& matrix() const { return m_; }
  long operator()(int r, int c) const { return m_[r][c]; }
  long determinant() const;
  /// A^k for any integer k (A^-1 is the adjugate times det). Throws
  /// std::overflow_error when an entry leaves the 64-bit range.
  Mat3 power(long k) const;

 private:
  Mat3 m_;
};

/// Checked 64-bit matrix arithmetic; throws std::overflow_error.
Mat3 multiply(const Mat3& a, const Mat3& b);
Vec3 multiply(const Mat3& a, const Vec3& v);

/// det(A - tI), computed by cofactor expansion over Z[t].
LaurentPolynomial char_poly(const MonodromyMatrix& a);

struct ConditionReport {
  LaurentPolynomial polynomial;
  Integer value_at_0, value_at_1;
  /// p(0) = 1.
  bool p0_is_one = false;
  /// p(1) = +-1.
  bool p1_is_unit = false;
  /// p(t) > 0 for every t < 0, decided by a Sturm sequence over Q.
  bool positive_on_negative_reals = false;

  bool passes() const { return p0_is_one && p1_is_unit && positive_on_negative_reals; }
};

/// Number of distinct real roots of p in the open interval (-inf, 0).
int negative_real_roots(const LaurentPolynomial& p);

ConditionReport cs_conditions(const MonodromyMatrix& a);

/// <x1, x2, x3, t | [x1,x2], [x1,x3], [x2,x3],
///  t x_j t^-1 (x1^A1j x2^A2j x3^A3j)^-1 for j = 1..3>: conjugation by t acts
/// on the fibre lattice as A. Generators 0..2 are x1..x3, generator 3 is t.
GroupPresentation cs_group(const MonodromyMatrix& a);

/// Element (v, k) of Z^3 x|_A Z; (v, k)(w, m) = (v + A^k w, k + m).
struct SemidirectElement {
  Vec3 v{};
  long k = 0;
  friend bool operator==(const SemidirectElement&, const SemidirectElement&) = default;
  std::string str() const;
};

SemidirectElement multiply(const SemidirectElement& x, const SemidirectElement& y, const MonodromyMatrix& a);
SemidirectElement inverse(const SemidirectElement& x, const MonodromyMatrix& a);

/// Left-to-right fold of a word over {x1, x2, x3, t} (generators 0..3) with
/// x_j -> (e_j, 0) and t -> (0, 1). Trivial in the group iff the result is
/// (0, 0). Throws std::invalid_argument on a generator index above 3.
SemidirectElement sd_reduce(const Word& w, const MonodromyMatrix& a);

/// Image of w when generator i maps to images[i].
SemidirectElement evaluate(const Word& w, const std::vector<SemidirectElement>& images, const MonodromyMatrix& a);

/// Sufficient check that the images generate Z^3 x|_A Z: the t-degrees have
/// gcd 1, and with h an element of t-degree 1 built from the images, the
/// lattice spanned by A^j (images[i] h^-k_i) for |j| <= window has index 1.
bool generates(const std::vector<SemidirectElement>& images, const MonodromyMatrix& a, int window = 6);

struct Epimorphism {
  std::vector<SemidirectElement> images;
  int bound = 0;
};

/// Bounded search for a surjection p -> Z^3 x|_A Z. Generator i must map to
/// (w_i, d_i) with d the abelianization degrees (tried as d, then -d) and
/// each w_i in [-bound, bound]^3, enumerated lexicographically (generator 0
/// most significant, entries ascending). Returns the first assignment that
/// kills every relator and passes generates(). Throws std::invalid_argument
/// when the abelianization of p is not Z or bound < 1.
std::optional<Epimorphism> find_epimorphism(const GroupPresentation& p, const MonodromyMatrix& a, int bound);
/// Default search: bound 3, then 5.
std::optional<Epimorphism> find_epimorphism(const GroupPresentation& p, const MonodromyMatrix& a);

struct ComparisonReport {
  /// Fixed order: abelianization, alexander, sym2..sym5, epimorphism.
  std::vector<std::pair<std::string, bool>> checks;
  HomologyGroup abelianization_p, abelianization_cs;
  std::optional<LaurentPolynomial> alexander_p;
  LaurentPolynomial char_poly_a;
  std::vector<QuotientCount> quotients_p, quotients_cs;
  std::optional<Epimorphism> epimorphism;

  bool all_pass() const;
  /// One "<name>: PASS|FAIL" line per check.
  std::string str() const;
};

/// Necessary-condition comparison of p with pi_1 of CS(A); never a proof of
/// isomorphism. The epimorphism search uses the given bound, or the default
/// 3-then-5 schedule.
ComparisonReport compare_invariants(const GroupPresentation& p, const MonodromyMatrix& a,
                                    std::optional<int> bound = std::nullopt);

}  // namespace gtri
