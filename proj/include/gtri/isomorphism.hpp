#pragma once

#include <optional>
#include <vector>

#include "gtri/triangulation.hpp"

namespace gtri {

/// Combinatorial isomorphism: simplex i goes to simplex_bijection[i], with
/// its vertex labels relabelled by vertex_relabellings[i].
struct Isomorphism {
  std::vector<int> simplex_bijection;
  std::vector<Perm> vertex_relabellings;

  static Isomorphism identity(const Triangulation& t);

  /// (a * b) applies b first.
  Isomorphism operator*(const Isomorphism& rhs) const;
  Isomorphism inverse() const;

  friend bool operator==(const Isomorphism&, const Isomorphism&) = default;
  friend bool operator<(const Isomorphism& a, const Isomorphism& b);
};

/// Relabel t by iso. The result lists the images of t's gluings in t's order.
Triangulation apply(const Isomorphism& iso, const Triangulation& t);

/// All isomorphisms from a to b (boundary facets to boundary facets), in
/// deterministic order. Stops after `limit` results when limit > 0.
std::vector<Isomorphism> isomorphisms(const Triangulation& a, const Triangulation& b, int limit = 0);

std::optional<Isomorphism> find_isomorphism(const Triangulation& a, const Triangulation& b);

/// All combinatorial automorphisms, identity included, sorted.
std::vector<Isomorphism> automorphisms(const Triangulation& t);

}  // namespace gtri
