#pragma once

#include <vector>

#include "gtri/chain_complex.hpp"
#include "gtri/faces.hpp"
#include "gtri/presentation.hpp"
#include "gtri/triangulation.hpp"

namespace gtri {

// Dual cell structure of a 4-dimensional triangulation with no boundary
// facets, read as an ideal triangulation: one dual vertex per pentachoron,
// dual edge e_i per listed gluing i (oriented from its source pentachoron to
// its target), one dual 2-cell per triangle orbit and one dual 3-cell per edge
// orbit.

/// One step around a triangle: in `simplex`, the triangle `triangle` is left
/// through facet `exit`.
struct DualStep {
  int simplex = 0;
  std::uint8_t triangle = 0;
  int exit = 0;
  friend bool operator==(const DualStep&, const DualStep&) = default;
};

struct DualTwoCell {
  /// Boundary word in the dual edges. Paths compose right to left, so the
  /// first edge crossed is the last letter.
  Word boundary;
  /// The traversal, one step per letter.
  std::vector<DualStep> steps;
};

/// Dual 2-cells in triangle-orbit order. Each starts at the orbit
/// representative and is oriented so that the representative triangle (labels
/// increasing) followed by the cell gives the ambient orientation in which
/// pentachoron 0 is positive; the walk leaves the representative through the
/// facet opposite the smaller complement label exactly when that permutation
/// is even (always, for non-orientable inputs). Throws TriangulationError for inputs that
/// are not 4-dimensional, have boundary facets or self-identifications.
std::vector<DualTwoCell> dual_two_cells(const Triangulation& t);

/// Degrees 0..3 with ranks (pentachora, gluings, triangle orbits, edge
/// orbits). d_1 is head minus tail, column j of d_2 the exponent sums of
/// dual 2-cell j, and d_3 the signed count of each 2-cell around the edge
/// link sphere, oriented by a coherent orientation of the link.
IntegerChainComplex dual_chain_complex(const Triangulation& t);

/// Presentation of the fundamental group from the dual 2-skeleton with the
/// given dual edges collapsed. Generators are the remaining dual edges, named
/// e<i>; relators are the 2-cell words with the tree letters deleted,
/// cyclically reduced. Throws std::invalid_argument when the edges do not form
/// a spanning tree of the dual graph.
GroupPresentation dual_presentation(const Triangulation& t, const std::vector<int>& tree_edges);

/// Spanning tree of the dual graph: breadth first from pentachoron 0, taking
/// the lowest-index gluing to each newly reached pentachoron.
std::vector<int> default_spanning_tree(const Triangulation& t);

}  // namespace gtri
