#pragma once

#include <cstdint>

#include "gtri/presentation.hpp"

namespace gtri {

struct QuotientCount {
  int degree = 0;
  /// All homomorphisms p -> Sym(degree).
  std::uint64_t homomorphisms = 0;
  /// Those whose image acts transitively on {0, ..., degree-1}.
  std::uint64_t transitive = 0;
  friend bool operator==(const QuotientCount&, const QuotientCount&) = default;
};

/// Count homomorphisms into Sym(n) by backtracking over generator images in
/// order, checking each relator as soon as all of its generators have images.
/// Throws std::invalid_argument unless 1 <= n <= 6.
QuotientCount finite_quotients(const GroupPresentation& p, int n);

}  // namespace gtri
