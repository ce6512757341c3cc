#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "gtri/triangulation.hpp"

namespace gtri {

/// Signed meridian intersection numbers of the three edges of a boundary
/// triangle of a one-vertex solid torus, read around the triangle. Defined
/// up to simultaneous negation and cyclic permutation.
struct SlopeTriple {
  long p = 0, q = 0, r = 0;

  /// Lexicographically least of the six rotations/negations.
  SlopeTriple canonical() const;
  bool equivalent(const SlopeTriple& other) const { return canonical() == other.canonical(); }
  std::string str() const;

  friend bool operator==(const SlopeTriple&, const SlopeTriple&) = default;
};

/// Boundary triangle of a 3-dimensional triangulation together with a cyclic
/// order of its three labels.
struct OrientedFace {
  FacetRef face;
  std::array<int, 3> cycle{};
};

/// Homological slope oracle: for a solid torus whose boundary is a one-vertex
/// torus, the meridian disc meets a closed boundary curve algebraically in
/// its class in H_1(solid torus) = Z. Returns the classes of the edges
/// cycle[0]->cycle[1], cycle[1]->cycle[2], cycle[2]->cycle[0] (sign fixed by
/// the generator chosen for H_1). Throws when the input is not one-vertex or
/// H_1 is not Z.
SlopeTriple meridian_slopes(const Triangulation& solid_torus, const OrientedFace& face);

/// As above, using the first boundary facet read clockwise seen from outside:
/// against the Stokes boundary orientation of the coherent orientation in
/// which tetrahedron 0 is positive.
SlopeTriple meridian_slopes(const Triangulation& solid_torus);

struct LayeredSolidTorus {
  Triangulation triangulation;
  SlopeTriple slopes;
  /// The boundary triangle `slopes` is read around.
  OrientedFace top;
};

/// Layered solid torus: start from the one-tetrahedron solid torus (two faces
/// folded into a Moebius band), then for each k in the word layer a new
/// tetrahedron across edge k (0, 1, 2) of the current top triangle. Throws
/// std::invalid_argument on an edge index outside 0..2. Edge k of the top
/// triangle runs from top.cycle[k] to top.cycle[k+1]; the top is read with
/// the same orientation convention as meridian_slopes(solid_torus).
LayeredSolidTorus lst(const std::vector<int>& layering_word);

struct OneThree {
  int triangle = 0;
};
struct TwoTwo {
  FacetRef edge;
};
using PachnerMove = std::variant<OneThree, TwoTwo>;

/// Bistellar move on a surface triangulation. Untouched triangles keep their
/// relative order (indices past a removed triangle shift down); the new
/// triangles are appended. After TwoTwo the new diagonal is edge 1 of the
/// first appended triangle. Throws std::invalid_argument for a
/// boundary edge, an edge with the same triangle on both sides, or indices
/// out of range.
Triangulation pachner_2d(const Triangulation& surface, const PachnerMove& move);

}  // namespace gtri
