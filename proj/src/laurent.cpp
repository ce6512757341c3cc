#include "gtri/laurent.hpp"

#include <stdexcept>
#include <utility>

namespace gtri {

namespace {

using Dense = std::vector<Integer>;  // c[0] + c[1] t + ...

Dense to_dense(const LaurentPolynomial& p) {
  Dense d;
  if (p.is_zero()) return d;
  const int low = p.low_degree();
  d.assign(static_cast<std::size_t>(p.high_degree() - low + 1), 0);
  for (const auto& [k, c] : p.terms()) d[static_cast<std::size_t>(k - low)] = c;
  return d;
}

LaurentPolynomial from_dense(const Dense& d) {
  LaurentPolynomial p;
  for (std::size_t i = 0; i < d.size(); ++i) p += LaurentPolynomial::monomial(d[i], static_cast<int>(i));
  return p;
}

void trim(Dense& d) {
  while (!d.empty() && d.back() == 0) d.pop_back();
}

Integer content(const Dense& d) {
  Integer g = 0;
  for (const Integer& c : d) g = boost::multiprecision::gcd(g, c);
  return g;
}

Dense primitive_part(Dense d) {
  const Integer g = content(d);
  if (g > 1)
    for (Integer& c : d) c /= g;
  return d;
}

// Pseudo-remainder of a by b (b nonzero): lc(b)^k a = q b + r, deg r < deg b.
Dense pseudo_remainder(Dense a, const Dense& b) {
  const Integer& lead = b.back();
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const Integer factor = a.back();
    for (Integer& c : a) c *= lead;
    for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= factor * b[i];
    trim(a);
  }
  return a;
}

}  // namespace

LaurentPolynomial::LaurentPolynomial(const std::vector<long>& coefficients, int low) {
  for (std::size_t i = 0; i < coefficients.size(); ++i)
    if (coefficients[i] != 0) terms_[low + static_cast<int>(i)] = coefficients[i];
}

LaurentPolynomial LaurentPolynomial::constant(const Integer& c) { return monomial(c, 0); }

LaurentPolynomial LaurentPolynomial::monomial(const Integer& c, int k) {
  LaurentPolynomial p;
  if (c != 0) p.terms_[k] = c;
  return p;
}

int LaurentPolynomial::low_degree() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int LaurentPolynomial::high_degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Integer LaurentPolynomial::coefficient(int k) const {
  const auto it = terms_.find(k);
  return it == terms_.end() ? Integer(0) : it->second;
}

Integer LaurentPolynomial::evaluate(long t) const {
  if (t == 0) {
    if (!terms_.empty() && low_degree() < 0) throw std::domain_error("Laurent polynomial has a pole at 0");
    return coefficient(0);
  }
  // Only t = +-1 keep negative powers integral.
  if (!terms_.empty() && low_degree() < 0 && t != 1 && t != -1)
    throw std::domain_error("negative powers do not evaluate to integers here");
  Integer sum = 0;
  for (const auto& [k, c] : terms_) {
    const unsigned e = static_cast<unsigned>(k < 0 ? -k : k);
    sum += c * boost::multiprecision::pow(Integer(t), e);
  }
  return sum;
}

LaurentPolynomial& LaurentPolynomial::operator+=(const LaurentPolynomial& rhs) {
  for (const auto& [k, c] : rhs.terms_) {
    Integer& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }
  return *this;
}

LaurentPolynomial LaurentPolynomial::operator+(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out = *this;
  out += rhs;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-() const {
  LaurentPolynomial out = *this;
  for (auto& [k, c] : out.terms_) c = -c;
  return out;
}

LaurentPolynomial LaurentPolynomial::operator-(const LaurentPolynomial& rhs) const { return *this + (-rhs); }

LaurentPolynomial LaurentPolynomial::operator*(const LaurentPolynomial& rhs) const {
  LaurentPolynomial out;
  for (const auto& [i, a] : terms_)
    for (const auto& [j, b] : rhs.terms_) out += monomial(a * b, i + j);
  return out;
}

LaurentPolynomial LaurentPolynomial::shifted(int k) const {
  LaurentPolynomial out;
  for (const auto& [i, c] : terms_) out.terms_[i + k] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::reflected() const {
  LaurentPolynomial out;
  for (const auto& [i, c] : terms_) out.terms_[-i] = c;
  return out;
}

LaurentPolynomial LaurentPolynomial::normalized() const {
  if (terms_.empty()) return {};
  LaurentPolynomial out = shifted(-low_degree());
  if (out.terms_.rbegin()->second < 0) out = -out;
  return out;
}

std::string LaurentPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [k, c] : terms_) {
    const Integer magnitude = c < 0 ? Integer(-c) : c;
    if (first)
      out += (c < 0 ? "-" : "");
    else
      out += (c < 0 ? " - " : " + ");
    out += magnitude.str() + "*t^" + std::to_string(k);
    first = false;
  }
  return out;
}

bool equal_up_to_units(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return a.normalized() == b.normalized();
}

bool equal_up_to_units_and_reflection(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  return equal_up_to_units(a, b) || equal_up_to_units(a, b.reflected());
}

LaurentPolynomial gcd(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (a.is_zero()) return b.normalized();
  if (b.is_zero()) return a.normalized();
  Dense x = to_dense(a.normalized());
  Dense y = to_dense(b.normalized());
  const Integer g = boost::multiprecision::gcd(content(x), content(y));
  x = primitive_part(x);
  y = primitive_part(y);
  if (x.size() < y.size()) std::swap(x, y);
  while (!y.empty()) {
    Dense r = primitive_part(pseudo_remainder(x, y));
    x = std::move(y);
    y = std::move(r);
  }
  for (Integer& c : x) c *= g;
  return from_dense(x).normalized();
}

LaurentPolynomial exact_divide(const LaurentPolynomial& a, const LaurentPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  const int shift = a.low_degree() - b.low_degree();
  Dense num = to_dense(a);
  const Dense den = to_dense(b);
  if (num.size() < den.size()) throw std::domain_error("polynomial division is not exact");
  Dense quotient(num.size() - den.size() + 1, 0);
  for (std::size_t i = quotient.size(); i-- > 0;) {
    const Integer& top = num[i + den.size() - 1];
    if (top % den.back() != 0) throw std::domain_error("polynomial division is not exact");
    quotient[i] = top / den.back();
    for (std::size_t j = 0; j < den.size(); ++j) num[i + j] -= quotient[i] * den[j];
  }
  trim(num);
  if (!num.empty()) throw std::domain_error("polynomial division is not exact");
  return from_dense(quotient).shifted(shift);
}

LaurentPolynomial determinant(std::vector<std::vector<LaurentPolynomial>> m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  if (n == 0) return LaurentPolynomial::constant(1);
  LaurentPolynomial sign = LaurentPolynomial::constant(1);
  LaurentPolynomial previous = LaurentPolynomial::constant(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap_with = k + 1;
      while (swap_with < n && m[swap_with][k].is_zero()) ++swap_with;
      if (swap_with == n) return {};
      std::swap(m[k], m[swap_with]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = exact_divide(m[k][k] * m[i][j] - m[i][k] * m[k][j], previous);
    previous = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace gtri
