#include "gtri/quotients.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>

namespace gtri {

namespace {

using Point = std::array<std::uint8_t, 6>;

struct Search {
  int n;
  const GroupPresentation& p;
  std::vector<Point> perms, inverses;
  std::vector<std::vector<const Word*>> ready;  // relators completed by generator g
  std::vector<int> image;                       // perm index per generator
  QuotientCount count;

  bool relator_holds(const Word& w) const {
    for (int x = 0; x < n; ++x) {
      int y = x;
      for (const Letter& l : w) {
        const int k = image[l.generator];
        y = (l.exponent > 0 ? perms[k] : inverses[k])[y];
      }
      if (y != x) return false;
    }
    return true;
  }

  bool transitive() const {
    std::uint8_t seen = 1;
    std::vector<int> stack{0};
    while (!stack.empty()) {
      const int x = stack.back();
      stack.pop_back();
      for (int k : image) {
        const int y = perms[k][x];
        if (!(seen & (1u << y))) {
          seen |= static_cast<std::uint8_t>(1u << y);
          stack.push_back(y);
        }
      }
    }
    return seen == (1u << n) - 1;
  }

  void assign(int g) {
    if (g == p.generator_count()) {
      ++count.homomorphisms;
      if (transitive()) ++count.transitive;
      return;
    }
    for (int k = 0; k < static_cast<int>(perms.size()); ++k) {
      image[g] = k;
      if (std::all_of(ready[g].begin(), ready[g].end(), [&](const Word* w) { return relator_holds(*w); }))
        assign(g + 1);
    }
  }
};

}  // namespace

QuotientCount finite_quotients(const GroupPresentation& p, int n) {
  if (n < 1 || n > 6) throw std::invalid_argument("finite_quotients: degree must be between 1 and 6");
  Search s{n, p, {}, {}, std::vector<std::vector<const Word*>>(p.generator_count()),
           std::vector<int>(p.generator_count()), {n, 0, 0}};
  Point perm{};
  std::iota(perm.begin(), perm.begin() + n, 0);
  do {
    s.perms.push_back(perm);
    Point inv{};
    for (int i = 0; i < n; ++i) inv[perm[i]] = static_cast<std::uint8_t>(i);
    s.inverses.push_back(inv);
  } while (std::next_permutation(perm.begin(), perm.begin() + n));
  for (const Word& r : p.relators) {
    int last = -1;
    for (const Letter& l : r) last = std::max(last, l.generator);
    if (last >= 0) s.ready[last].push_back(&r);
  }
  if (p.generator_count() == 0) {
    s.count.homomorphisms = 1;
    s.count.transitive = n == 1 ? 1 : 0;
    return s.count;
  }
  s.assign(0);
  return s.count;
}

}  // namespace gtri
