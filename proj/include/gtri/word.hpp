#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace gtri {

struct Letter {
  int generator = 0;
  int exponent = 1;  // +1 or -1

  Letter inverse() const { return {generator, -exponent}; }
  friend bool operator==(const Letter&, const Letter&) = default;
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

/// A word in a free group, as a sequence of letters x^{+1} / x^{-1}.
using Word = std::vector<Letter>;

Word inverse(const Word& w);
/// Cancel adjacent x x^-1 pairs.
Word free_reduce(const Word& w);
/// Free reduction followed by cancellation around the cyclic boundary.
Word cyclic_reduce(const Word& w);
/// w rotated to start at position k.
Word rotate(const Word& w, std::size_t k);
/// Concatenation.
Word operator*(const Word& a, const Word& b);
/// Signed count of occurrences of generator g.
int exponent_sum(const Word& w, int g);
/// Number of letters on generator g, ignoring sign.
int occurrences(const Word& w, int g);

/// True if b is a cyclic rotation of a.
bool cyclically_equal(const Word& a, const Word& b);
/// True if b is a cyclic rotation of a or of a^{-1}.
bool cyclically_equal_up_to_inverse(const Word& a, const Word& b);

/// Token syntax "a b^-1 a^2", using the given generator names. An empty word
/// prints as "1".
std::string format_word(const Word& w, const std::vector<std::string>& names);
/// Inverse of format_word. Throws std::invalid_argument on unknown names or
/// malformed exponents.
Word parse_word(std::string_view text, const std::vector<std::string>& names);

}  // namespace gtri
