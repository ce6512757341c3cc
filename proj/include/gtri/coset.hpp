#pragma once

#include <variant>
#include <vector>

#include "gtri/presentation.hpp"

namespace gtri {

/// The coset table closed: the group has this order (index of the trivial
/// subgroup).
struct Index {
  long value = 0;
  friend bool operator==(const Index&, const Index&) = default;
};

/// The budget ran out before the table closed.
struct Inconclusive {
  long live_cosets = 0;
  friend bool operator==(const Inconclusive&, const Inconclusive&) = default;
};

using CosetResult = std::variant<Index, Inconclusive>;

/// Felsch-style Todd-Coxeter enumeration of the cosets of the trivial
/// subgroup in p with extra_relators appended. Cosets are defined in table
/// order (first undefined entry first) and every definition is followed by
/// complete deduction processing. The budget counts live cosets: a definition
/// that would exceed max_cosets returns Inconclusive. Throws
/// std::invalid_argument when max_cosets < 1.
CosetResult coset_enumeration(const GroupPresentation& p, const std::vector<Word>& extra_relators, long max_cosets);

}  // namespace gtri
