#pragma once

#include <vector>

#include "gtri/faces.hpp"
#include "gtri/triangulation.hpp"

namespace gtri {

/// A link triangulation together with the face incidence each of its
/// top-dimensional simplices came from: corners[i] is the (simplex, face)
/// of the ambient triangulation that link simplex i is normal to.
struct Link {
  Triangulation triangulation;
  std::vector<FaceKey> corners;
};

/// Link of a vertex orbit of a 4-dimensional triangulation: one tetrahedron
/// per (pentachoron, vertex) member, labelled by the other four labels in
/// increasing order.
Link vertex_link(const Triangulation& t, const FaceOrbit& vertex);

/// Link of an edge orbit of a 4-dimensional triangulation: one triangle per
/// (pentachoron, edge) member, labelled by the complementary three labels.
Link edge_link(const Triangulation& t, const FaceOrbit& edge);

struct SurfaceClassification {
  bool orientable = false;
  int euler_characteristic = 0;
  int boundary_circles = 0;
  bool connected = false;

  /// Genus of a connected closed orientable surface.
  int genus() const { return (2 - euler_characteristic) / 2; }
};

/// Throws TriangulationError when the surface has edge or vertex
/// self-identifications.
SurfaceClassification classify_surface(const Triangulation& surface);

/// Coherent orientation of a triangulation: one sign per simplex such that
/// every gluing reverses induced facet orientation. Empty when none exists.
std::vector<int> coherent_orientation(const Triangulation& t);

/// Triangulated boundary of a 3-dimensional triangulation: one triangle per
/// boundary facet. corners[i].labels is the facet's label set.
Link boundary_surface(const Triangulation& t);

}  // namespace gtri
