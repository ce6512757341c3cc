#include "gtri/fox.hpp"

#include <cstdlib>
#include <numeric>

namespace gtri {

LaurentPolynomial fox_derivative(const Word& w, int g, const std::vector<int>& deg) {
  LaurentPolynomial out;
  int prefix = 0;
  for (const Letter& l : w) {
    if (l.generator == g) {
      if (l.exponent > 0)
        out += LaurentPolynomial::monomial(1, prefix);
      else
        out += LaurentPolynomial::monomial(-1, prefix - deg[g]);
    }
    prefix += l.exponent * deg[l.generator];
  }
  return out;
}

LaurentPolynomial abelianized(const Word& w, const std::vector<int>& deg) {
  int k = 0;
  for (const Letter& l : w) k += l.exponent * deg[l.generator];
  return LaurentPolynomial::monomial(1, k);
}

std::vector<std::vector<LaurentPolynomial>> fox_matrix(const GroupPresentation& p, const std::vector<int>& deg) {
  std::vector<std::vector<LaurentPolynomial>> m;
  for (const Word& r : p.relators) {
    std::vector<LaurentPolynomial> row;
    for (int g = 0; g < p.generator_count(); ++g) row.push_back(fox_derivative(r, g, deg));
    m.push_back(std::move(row));
  }
  return m;
}

std::vector<int> abelianization_degrees(const GroupPresentation& p) {
  const HomologyGroup h = abelianization(p);
  if (h.free_rank != 1 || !h.torsion.empty())
    throw AlexanderError("abelianization is " + h.str() + ", not Z");
  const int n = p.generator_count();
  const IntegerMatrix m = exponent_matrix(p);
  std::vector<int> deg(n);
  if (m.rows() == 0) {
    deg[0] = 1;
    return deg;
  }
  const SmithForm f = smith_normal_form(m);
  // Columns of V past the rank span the kernel, which has rank one here.
  for (int i = 0; i < n; ++i) deg[i] = static_cast<int>(f.V(i, f.rank()));
  for (int i = n - 1; i >= 0; --i)
    if (deg[i] != 0) {
      if (deg[i] < 0)
        for (int& d : deg) d = -d;
      break;
    }
  return deg;
}

namespace {

// Substitute x_j -> y x_i^q in every relator, reusing index j for y.
GroupPresentation nielsen(const GroupPresentation& p, int j, int i, int q) {
  GroupPresentation out{p.names, {}};
  const Letter step{i, q > 0 ? 1 : -1};
  for (const Word& r : p.relators) {
    Word w;
    for (const Letter& l : r) {
      if (l.generator != j) {
        w.push_back(l);
        continue;
      }
      Word piece{{j, 1}};
      for (int k = 0; k < std::abs(q); ++k) piece.push_back(step);
      if (l.exponent < 0) piece = inverse(piece);
      w.insert(w.end(), piece.begin(), piece.end());
    }
    out.relators.push_back(cyclic_reduce(w));
  }
  return out;
}

std::vector<std::vector<int>> subsets(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> pick(k);
  std::iota(pick.begin(), pick.end(), 0);
  if (k > n) return out;
  while (true) {
    out.push_back(pick);
    int i = k - 1;
    while (i >= 0 && pick[i] == n - k + i) --i;
    if (i < 0) return out;
    ++pick[i];
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
}

}  // namespace

LaurentPolynomial fox_alexander(const GroupPresentation& input, const std::vector<int>& input_deg) {
  const int n = input.generator_count();
  if (static_cast<int>(input_deg.size()) != n) throw AlexanderError("degree vector has the wrong length");
  int g = 0;
  for (int d : input_deg) g = std::gcd(g, d);
  if (g != 1) throw AlexanderError("degree map is not onto Z");
  for (const Word& r : input.relators)
    if (abelianized(r, input_deg) != LaurentPolynomial::monomial(1, 0))
      throw AlexanderError("degree map does not vanish on relator " + format_word(r, input.names));
  const HomologyGroup h = abelianization(input);
  if (h.free_rank != 1 || !h.torsion.empty()) throw AlexanderError("abelianization is " + h.str() + ", not Z");

  GroupPresentation p = input;
  std::vector<int> deg = input_deg;
  auto unit_column = [&] {
    for (int i = 0; i < n; ++i)
      if (std::abs(deg[i]) == 1) return i;
    return -1;
  };
  while (unit_column() < 0) {
    // Euclid step on the two smallest nonzero degrees.
    int i = -1, j = -1;
    for (int k = 0; k < n; ++k) {
      if (deg[k] == 0) continue;
      if (i < 0 || std::abs(deg[k]) < std::abs(deg[i])) {
        j = i;
        i = k;
      } else if (j < 0 || std::abs(deg[k]) < std::abs(deg[j])) {
        j = k;
      }
    }
    const int q = deg[j] / deg[i];
    p = nielsen(p, j, i, q);  // x_j = y x_i^q, deg y = deg x_j - q deg x_i
    deg[j] -= q * deg[i];
  }

  const int drop = unit_column();
  if (n == 1) return LaurentPolynomial::constant(1);
  const auto m = fox_matrix(p, deg);
  LaurentPolynomial result;
  for (const auto& rows : subsets(static_cast<int>(m.size()), n - 1)) {
    std::vector<std::vector<LaurentPolynomial>> minor;
    for (int r : rows) {
      std::vector<LaurentPolynomial> row;
      for (int c = 0; c < n; ++c)
        if (c != drop) row.push_back(m[r][c]);
      minor.push_back(std::move(row));
    }
    result = gcd(result, determinant(std::move(minor)));
  }
  return result.normalized();
}

}  // namespace gtri
