#include "gtri/cs.hpp"

#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <stdexcept>

#include "gtri/fox.hpp"

namespace gtri {

namespace {

using Rational = boost::multiprecision::cpp_rational;
using RationalPoly = std::vector<Rational>;  // c[0] + c[1] t + ...

long checked_add(long a, long b) {
  long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("semidirect arithmetic overflow");
  return r;
}

long checked_mul(long a, long b) {
  long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("semidirect arithmetic overflow");
  return r;
}

long det3(const Mat3& m) {
  long d = 0;
  for (int c = 0; c < 3; ++c) {
    const long minor = checked_add(checked_mul(m[1][(c + 1) % 3], m[2][(c + 2) % 3]),
                                   -checked_mul(m[1][(c + 2) % 3], m[2][(c + 1) % 3]));
    d = checked_add(d, checked_mul(m[0][c], minor));
  }
  return d;
}

}  // namespace

Mat3 multiply(const Mat3& a, const Mat3& b) {
  Mat3 out{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) out[i][j] = checked_add(out[i][j], checked_mul(a[i][k], b[k][j]));
  return out;
}

Vec3 multiply(const Mat3& a, const Vec3& v) {
  Vec3 out{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) out[i] = checked_add(out[i], checked_mul(a[i][k], v[k]));
  return out;
}

MonodromyMatrix::MonodromyMatrix(const Mat3& m) : m_(m) {
  const long d = det3(m_);
  if (d != 1 && d != -1)
    throw std::invalid_argument("monodromy matrix has determinant " + std::to_string(d) + ", not +-1");
}

MonodromyMatrix::MonodromyMatrix(const std::array<long, 9>& e)
    : MonodromyMatrix(Mat3{Vec3{e[0], e[1], e[2]}, Vec3{e[3], e[4], e[5]}, Vec3{e[6], e[7], e[8]}}) {}

MonodromyMatrix MonodromyMatrix::paper() { return MonodromyMatrix(std::array<long, 9>{0, 0, 1, 1, 0, 0, 0, 1, -1}); }
MonodromyMatrix MonodromyMatrix::identity() { return MonodromyMatrix(std::array<long, 9>{1, 0, 0, 0, 1, 0, 0, 0, 1}); }

long MonodromyMatrix::determinant() const { return det3(m_); }

Mat3 MonodromyMatrix::power(long k) const {
  Mat3 base = m_;
  if (k < 0) {
    // Inverse = adjugate / det, and det = +-1.
    const long d = determinant();
    Mat3 adj{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
        adj[i][j] = checked_mul(d, checked_add(checked_mul(m_[r0][c0], m_[r1][c1]),
                                               -checked_mul(m_[r0][c1], m_[r1][c0])));
      }
    base = adj;
    k = -k;
  }
  Mat3 result{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{0, 0, 1}};
  for (; k > 0; k >>= 1) {
    if (k & 1) result = multiply(result, base);
    if (k > 1) base = multiply(base, base);
  }
  return result;
}

LaurentPolynomial char_poly(const MonodromyMatrix& a) {
  std::array<std::array<LaurentPolynomial, 3>, 3> m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = LaurentPolynomial::constant(a(i, j)) - (i == j ? LaurentPolynomial::monomial(1, 1) : LaurentPolynomial());
  LaurentPolynomial det;
  for (int c = 0; c < 3; ++c) {
    const LaurentPolynomial minor = m[1][(c + 1) % 3] * m[2][(c + 2) % 3] - m[1][(c + 2) % 3] * m[2][(c + 1) % 3];
    det += m[0][c] * minor;
  }
  return det;
}

namespace {

void trim(RationalPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

RationalPoly remainder(RationalPoly a, const RationalPoly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    const Rational factor = a.back() / b.back();
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    a.pop_back();
    trim(a);
  }
  return a;
}

int sign(const Rational& r) { return r > 0 ? 1 : (r < 0 ? -1 : 0); }

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

int negative_real_roots(const LaurentPolynomial& p) {
  if (p.is_zero()) throw std::invalid_argument("the zero polynomial has infinitely many roots");
  // Strip the unit t^low; the remaining polynomial has q(0) != 0.
  const LaurentPolynomial q = p.shifted(-p.low_degree());
  RationalPoly p0(static_cast<std::size_t>(q.high_degree()) + 1);
  for (const auto& [k, c] : q.terms()) p0[static_cast<std::size_t>(k)] = Rational(c);
  if (p0.size() == 1) return 0;
  RationalPoly p1(p0.size() - 1);
  for (std::size_t i = 1; i < p0.size(); ++i) p1[i - 1] = p0[i] * static_cast<long>(i);
  std::vector<RationalPoly> chain{p0, p1};
  while (true) {
    RationalPoly r = remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (Rational& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_minus_infinity, at_zero;
  for (const RationalPoly& s : chain) {
    const int degree = static_cast<int>(s.size()) - 1;
    at_minus_infinity.push_back(sign(s.back()) * (degree % 2 == 0 ? 1 : -1));
    at_zero.push_back(sign(s.front()));
  }
  return sign_changes(at_minus_infinity) - sign_changes(at_zero);
}

ConditionReport cs_conditions(const MonodromyMatrix& a) {
  ConditionReport r;
  r.polynomial = char_poly(a);
  r.value_at_0 = r.polynomial.evaluate(0);
  r.value_at_1 = r.polynomial.evaluate(1);
  r.p0_is_one = r.value_at_0 == 1;
  r.p1_is_unit = r.value_at_1 == 1 || r.value_at_1 == -1;
  // No root in (-inf, 0) means constant sign there; test it at t = -1.
  r.positive_on_negative_reals =
      !r.polynomial.is_zero() && negative_real_roots(r.polynomial) == 0 && r.polynomial.evaluate(-1) > 0;
  return r;
}

GroupPresentation cs_group(const MonodromyMatrix& a) {
  GroupPresentation p{{"x1", "x2", "x3", "t"}, {}};
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) p.relators.push_back({{i, 1}, {j, 1}, {i, -1}, {j, -1}});
  for (int j = 0; j < 3; ++j) {
    Word image;
    for (int i = 0; i < 3; ++i)
      for (long e = 0; e < std::abs(a(i, j)); ++e) image.push_back({i, a(i, j) > 0 ? 1 : -1});
    Word r{{3, 1}, {j, 1}, {3, -1}};
    const Word inv = inverse(image);
    r.insert(r.end(), inv.begin(), inv.end());
    r = cyclic_reduce(r);
    if (!r.empty()) p.relators.push_back(std::move(r));
  }
  return p;
}

std::string SemidirectElement::str() const {
  return "((" + std::to_string(v[0]) + "," + std::to_string(v[1]) + "," + std::to_string(v[2]) + ")," +
         std::to_string(k) + ")";
}

SemidirectElement multiply(const SemidirectElement& x, const SemidirectElement& y, const MonodromyMatrix& a) {
  const Vec3 moved = multiply(a.power(x.k), y.v);
  return {{checked_add(x.v[0], moved[0]), checked_add(x.v[1], moved[1]), checked_add(x.v[2], moved[2])},
          checked_add(x.k, y.k)};
}

SemidirectElement inverse(const SemidirectElement& x, const MonodromyMatrix& a) {
  const Vec3 moved = multiply(a.power(-x.k), x.v);
  return {{-moved[0], -moved[1], -moved[2]}, -x.k};
}

SemidirectElement sd_reduce(const Word& w, const MonodromyMatrix& a) {
  std::vector<SemidirectElement> images{{{1, 0, 0}, 0}, {{0, 1, 0}, 0}, {{0, 0, 1}, 0}, {{0, 0, 0}, 1}};
  for (const Letter& l : w)
    if (l.generator < 0 || l.generator > 3) throw std::invalid_argument("sd_reduce: generator index above 3");
  return evaluate(w, images, a);
}

SemidirectElement evaluate(const Word& w, const std::vector<SemidirectElement>& images, const MonodromyMatrix& a) {
  SemidirectElement acc;
  for (const Letter& l : w) {
    const SemidirectElement& g = images.at(static_cast<std::size_t>(l.generator));
    acc = multiply(acc, l.exponent > 0 ? g : inverse(g, a), a);
  }
  return acc;
}

namespace {

SemidirectElement power(const SemidirectElement& x, long e, const MonodromyMatrix& a) {
  const SemidirectElement base = e < 0 ? inverse(x, a) : x;
  SemidirectElement acc;
  for (long i = 0; i < std::abs(e); ++i) acc = multiply(acc, base, a);
  return acc;
}

}  // namespace

bool generates(const std::vector<SemidirectElement>& images, const MonodromyMatrix& a, int window) {
  // Extended Euclid: coefficients c with sum c_i k_i = gcd.
  long g = 0;
  std::vector<long> coeff(images.size(), 0);
  for (std::size_t i = 0; i < images.size(); ++i) {
    const long k = images[i].k;
    if (k == 0) continue;
    if (g == 0) {
      g = k;
      coeff[i] = 1;
      continue;
    }
    // Solve x g + y k = gcd(g, k).
    long old_r = g, r = k, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
      const long q = old_r / r;
      old_r = std::exchange(r, old_r - q * r);
      old_s = std::exchange(s, old_s - q * s);
      old_t = std::exchange(t, old_t - q * t);
    }
    for (std::size_t j = 0; j < i; ++j) coeff[j] *= old_s;
    coeff[i] = old_t;
    g = old_r;
  }
  if (g < 0) {
    g = -g;
    for (long& c : coeff) c = -c;
  }
  if (g != 1) return false;
  SemidirectElement h;
  for (std::size_t i = 0; i < images.size(); ++i) h = multiply(h, power(images[i], coeff[i], a), a);
  // Every element is a product of conjugates h^j n_i h^-j times a power of h,
  // with n_i = images[i] h^-k_i in the fibre.
  std::vector<Vec3> lattice;
  for (const SemidirectElement& x : images) {
    const SemidirectElement n = multiply(x, power(h, -x.k, a), a);
    for (int j = -window; j <= window; ++j) lattice.push_back(multiply(a.power(j), n.v));
  }
  IntegerMatrix m(3, static_cast<int>(lattice.size()));
  for (std::size_t c = 0; c < lattice.size(); ++c)
    for (int r = 0; r < 3; ++r) m(r, static_cast<int>(c)) = lattice[c][r];
  const auto factors = smith_normal_form(m).invariant_factors();
  return factors.size() == 3 && factors.back() == 1;
}

std::optional<Epimorphism> find_epimorphism(const GroupPresentation& p, const MonodromyMatrix& a, int bound) {
  if (bound < 1) throw std::invalid_argument("find_epimorphism: bound must be at least 1");
  const std::vector<int> degrees = abelianization_degrees(p);
  const int n = p.generator_count();
  const int width = 2 * bound + 1;
  for (int sign : {1, -1}) {
    std::vector<SemidirectElement> images(n);
    for (int i = 0; i < n; ++i) images[i].k = sign * degrees[i];
    // Odometer over the 3n fibre entries, last entry fastest.
    std::vector<int> digits(static_cast<std::size_t>(3 * n), 0);
    while (true) {
      for (int i = 0; i < n; ++i)
        for (int c = 0; c < 3; ++c) images[i].v[c] = digits[static_cast<std::size_t>(3 * i + c)] - bound;
      bool kills = true;
      for (const Word& r : p.relators)
        if (!(evaluate(r, images, a) == SemidirectElement{})) {
          kills = false;
          break;
        }
      if (kills && generates(images, a)) return Epimorphism{images, bound};
      int pos = 3 * n - 1;
      while (pos >= 0 && ++digits[static_cast<std::size_t>(pos)] == width) digits[static_cast<std::size_t>(pos--)] = 0;
      if (pos < 0) break;
    }
  }
  return std::nullopt;
}

std::optional<Epimorphism> find_epimorphism(const GroupPresentation& p, const MonodromyMatrix& a) {
  if (auto e = find_epimorphism(p, a, 3)) return e;
  return find_epimorphism(p, a, 5);
}

bool ComparisonReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string ComparisonReport::str() const {
  std::string out;
  for (const auto& [name, ok] : checks) out += name + ": " + (ok ? "PASS" : "FAIL") + "\n";
  return out;
}

ComparisonReport compare_invariants(const GroupPresentation& p, const MonodromyMatrix& a, std::optional<int> bound) {
  ComparisonReport r;
  const GroupPresentation q = cs_group(a);
  r.abelianization_p = abelianization(p);
  r.abelianization_cs = abelianization(q);
  r.checks.push_back({"abelianization", r.abelianization_p == r.abelianization_cs});

  r.char_poly_a = char_poly(a);
  try {
    r.alexander_p = fox_alexander(p, abelianization_degrees(p));
  } catch (const AlexanderError&) {
  }
  r.checks.push_back(
      {"alexander", r.alexander_p && equal_up_to_units_and_reflection(*r.alexander_p, r.char_poly_a)});

  for (int n = 2; n <= 5; ++n) {
    r.quotients_p.push_back(finite_quotients(p, n));
    r.quotients_cs.push_back(finite_quotients(q, n));
    r.checks.push_back({"sym" + std::to_string(n), r.quotients_p.back() == r.quotients_cs.back()});
  }

  try {
    r.epimorphism = bound ? find_epimorphism(p, a, *bound) : find_epimorphism(p, a);
  } catch (const std::invalid_argument&) {
  }
  r.checks.push_back({"epimorphism", r.epimorphism.has_value()});
  return r;
}

}  // namespace gtri
