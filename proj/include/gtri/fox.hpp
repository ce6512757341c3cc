#pragma once

#include <stdexcept>
#include <vector>

#include "gtri/laurent.hpp"
#include "gtri/presentation.hpp"

namespace gtri {

/// Raised when fox_alexander's preconditions fail.
class AlexanderError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Abelianized Fox derivative d w / d x_g under x_i -> t^{deg[i]}.
LaurentPolynomial fox_derivative(const Word& w, int g, const std::vector<int>& deg);

/// Image of w under x_i -> t^{deg[i]}.
LaurentPolynomial abelianized(const Word& w, const std::vector<int>& deg);

/// Relators x generators matrix of abelianized Fox derivatives.
std::vector<std::vector<LaurentPolynomial>> fox_matrix(const GroupPresentation& p, const std::vector<int>& deg);

/// Alexander polynomial of p with respect to the map generator i -> deg[i]:
/// the gcd of the maximal minors of the Fox matrix with the column of a
/// degree +-1 generator deleted (after a Nielsen change of generators when no
/// generator has degree +-1), in unit normal form. Throws AlexanderError when
/// deg has the wrong length, does not vanish on every relator, has gcd other
/// than 1, or the abelianization of p is not Z.
LaurentPolynomial fox_alexander(const GroupPresentation& p, const std::vector<int>& deg);

/// A primitive generator of the kernel of the exponent-sum map, i.e. the
/// degrees of the abelianization p -> Z, normalized so that its last nonzero
/// entry is positive. Throws AlexanderError when the abelianization is not Z.
std::vector<int> abelianization_degrees(const GroupPresentation& p);

}  // namespace gtri
