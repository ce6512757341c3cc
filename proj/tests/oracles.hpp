#pragma once

// Independent reference computations used to derive expected values. They
// share only plain data accessors with the library, never its algorithms.

#include <algorithm>
#include <array>
#include <boost/multiprecision/cpp_int.hpp>
#include <numeric>
#include <vector>

#include "gtri/integer_matrix.hpp"
#include "gtri/presentation.hpp"
#include "gtri/triangulation.hpp"

namespace oracle {

using boost::multiprecision::cpp_int;
using boost::multiprecision::cpp_rational;
using Dense = std::vector<std::vector<cpp_int>>;

inline Dense dense(const gtri::IntegerMatrix& m) {
  Dense d(m.rows(), std::vector<cpp_int>(m.cols()));
  for (int r = 0; r < m.rows(); ++r)
    for (int c = 0; c < m.cols(); ++c) d[r][c] = m(r, c);
  return d;
}

/// Laplace expansion along the first row.
inline cpp_int laplace(const Dense& m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  cpp_int sum = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c] == 0) continue;
    Dense minor;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<cpp_int> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != c) row.push_back(m[r][k]);
      minor.push_back(std::move(row));
    }
    sum += (c % 2 == 0 ? 1 : -1) * m[0][c] * laplace(minor);
  }
  return sum;
}

inline void choose(int n, int k, int start, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == k) {
    out.push_back(cur);
    return;
  }
  for (int i = start; i < n; ++i) {
    cur.push_back(i);
    choose(n, k, i + 1, cur, out);
    cur.pop_back();
  }
}

/// Invariant factors from determinantal divisors: D_k = gcd of k x k minors,
/// d_k = D_k / D_{k-1}. Exponential; small matrices only.
inline std::vector<cpp_int> invariant_factors(const Dense& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  std::vector<cpp_int> factors;
  cpp_int previous = 1;
  for (int k = 1; k <= std::min(rows, cols); ++k) {
    std::vector<std::vector<int>> rs, cs;
    std::vector<int> cur;
    choose(rows, k, 0, cur, rs);
    choose(cols, k, 0, cur, cs);
    cpp_int g = 0;
    for (const auto& r : rs)
      for (const auto& c : cs) {
        Dense minor(k, std::vector<cpp_int>(k));
        for (int i = 0; i < k; ++i)
          for (int j = 0; j < k; ++j) minor[i][j] = m[r[i]][c[j]];
        g = boost::multiprecision::gcd(g, laplace(minor));
      }
    if (g == 0) break;
    factors.push_back(g / previous);
    previous = g;
  }
  return factors;
}

/// Rank over Q by Gaussian elimination.
inline int rational_rank(const Dense& m) {
  std::vector<std::vector<cpp_rational>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = rank;
    while (pivot < rows && a[pivot][c] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[pivot], a[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const cpp_rational f = a[r][c] / a[rank][c];
      for (int k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Homomorphisms into Sym(n) by exhaustive enumeration of all image tuples
/// (no pruning): {all, transitive}.
inline std::pair<std::uint64_t, std::uint64_t> hom_count(const gtri::GroupPresentation& p, int n) {
  std::vector<std::vector<int>> perms;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do perms.push_back(perm);
  while (std::next_permutation(perm.begin(), perm.end()));
  const int g = p.generator_count();
  std::vector<std::size_t> pick(g, 0);
  std::uint64_t all = 0, transitive = 0;
  while (true) {
    bool ok = true;
    for (const gtri::Word& r : p.relators) {
      for (int x = 0; x < n && ok; ++x) {
        int y = x;
        for (const gtri::Letter& l : r) {
          const auto& q = perms[pick[l.generator]];
          if (l.exponent > 0) {
            y = q[y];
          } else {
            y = static_cast<int>(std::find(q.begin(), q.end(), y) - q.begin());
          }
        }
        ok = y == x;
      }
      if (!ok) break;
    }
    if (ok) {
      ++all;
      std::vector<bool> seen(n, false);
      seen[0] = true;
      for (bool grew = true; grew;) {
        grew = false;
        for (int x = 0; x < n; ++x)
          if (seen[x])
            for (std::size_t k : pick)
              if (!seen[perms[k][x]]) seen[perms[k][x]] = grew = true;
      }
      if (std::all_of(seen.begin(), seen.end(), [](bool b) { return b; })) ++transitive;
    }
    int i = g - 1;
    while (i >= 0 && ++pick[i] == perms.size()) pick[i--] = 0;
    if (i < 0) break;
  }
  if (g == 0) return {1, n == 1 ? 1u : 0u};
  return {all, transitive};
}

/// Automorphisms of a gluing table by brute force over every simplex
/// permutation and every per-simplex relabelling. Each result is
/// (simplex images, relabellings as image arrays).
struct RawIso {
  std::vector<int> simplex;
  std::vector<std::array<int, 5>> relabel;
};

inline std::vector<RawIso> brute_force_automorphisms(const gtri::Triangulation& t) {
  const int n = t.size(), k = t.dimension() + 1;
  std::vector<std::array<int, 5>> labels;
  std::array<int, 5> l{0, 1, 2, 3, 4};
  do labels.push_back(l);
  while (std::next_permutation(l.begin(), l.begin() + k));
  std::vector<RawIso> out;
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    std::vector<std::size_t> pick(n, 0);
    while (true) {
      bool ok = true;
      for (int s = 0; s < n && ok; ++s)
        for (int f = 0; f < k && ok; ++f) {
          const auto& here = labels[pick[s]];
          const auto& p = t.partner({s, f});
          const auto& q = t.partner({sigma[s], here[f]});
          if (!p || !q) {
            ok = !p && !q;
            continue;
          }
          const int s2 = p->facet.simplex;
          const auto& there = labels[pick[s2]];
          ok = q->facet.simplex == sigma[s2] && q->facet.facet == there[p->facet.facet];
          for (int v = 0; v < k && ok; ++v)
            if (v != f) ok = q->map[here[v]] == there[p->map[v]];
        }
      if (ok) out.push_back({sigma, [&] {
                               std::vector<std::array<int, 5>> r;
                               for (std::size_t i : pick) r.push_back(labels[i]);
                               return r;
                             }()});
      int i = n - 1;
      while (i >= 0 && ++pick[i] == labels.size()) pick[i--] = 0;
      if (i < 0) break;
    }
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

}  // namespace oracle
