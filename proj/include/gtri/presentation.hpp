#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "gtri/chain_complex.hpp"
#include "gtri/word.hpp"

namespace gtri {

struct GroupPresentation {
  std::vector<std::string> names;
  std::vector<Word> relators;

  int generator_count() const { return static_cast<int>(names.size()); }
  int total_length() const;

  /// Generators named x0, x1, ...
  static GroupPresentation free_group(int rank);
};

/// "a b | b a^2 b^-2 a^-3, b^2 a b^-3 a^-2"
std::string format_presentation(const GroupPresentation& p);
GroupPresentation parse_presentation(std::string_view text);

/// Relators x generators matrix of exponent sums.
IntegerMatrix exponent_matrix(const GroupPresentation& p);

/// Cyclically reduce every relator and drop the trivial ones.
GroupPresentation cyclically_reduced(const GroupPresentation& p);

/// Greedy Tietze simplification: while some generator occurs exactly once in
/// some relator, eliminate it with that relator, picking the (relator,
/// generator) pair whose substitution gives the shortest presentation (ties:
/// lowest relator index, then lowest generator index). Deterministic.
GroupPresentation tietze_simplify(const GroupPresentation& p);

/// Rename the generators a, b, c, ... in order.
GroupPresentation relabel_alphabetic(const GroupPresentation& p);

HomologyGroup abelianization(const GroupPresentation& p);

/// Same generator count and relator multisets matching under some generator
/// renaming, each relator up to cyclic rotation (and inversion when allowed).
bool equivalent_relators(const GroupPresentation& a, const GroupPresentation& b, bool allow_inverse);

}  // namespace gtri
