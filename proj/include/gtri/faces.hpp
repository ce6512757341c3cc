#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "gtri/triangulation.hpp"

namespace gtri {

/// A d-face of one simplex: the simplex index and the bitmask of its d+1
/// vertex labels. Ordered by simplex, then by the sorted label list.
struct FaceKey {
  int simplex = 0;
  std::uint8_t labels = 0;

  int face_dimension() const { return popcount(labels) - 1; }
  std::vector<int> sorted_labels() const;

  friend bool operator==(const FaceKey&, const FaceKey&) = default;
  friend bool operator<(const FaceKey& a, const FaceKey& b);
};

/// An identification class of d-faces. connecting_maps[i] carries the labels
/// of the representative (members[0]) to the labels of members[i]; only its
/// values on representative.labels are meaningful.
struct FaceOrbit {
  int dimension = 0;
  std::vector<FaceKey> members;
  std::vector<Perm> connecting_maps;
  /// True when some member is identified with itself by a non-identity map.
  bool self_identified = false;

  const FaceKey& representative() const { return members.front(); }
  /// Index of key in members, or -1.
  int find(const FaceKey& key) const;
};

/// Partition of all (simplex, (d+1)-subset) pairs under the identifications
/// induced by the facet gluings. Orbits are sorted by their least member.
/// Throws std::out_of_range when d is not in [0, dimension].
std::vector<FaceOrbit> face_orbits(const Triangulation& t, int d);

/// Same partition, built by replaying the gluings in the given order. Used to
/// check that the partition does not depend on traversal order.
std::vector<FaceOrbit> face_orbits(const Triangulation& t, int d, std::span<const int> gluing_order);

/// Orbit counts for d = 0..dimension.
std::vector<int> face_counts(const Triangulation& t);

/// Locate the orbit containing key: (orbit index, member index).
std::pair<int, int> locate(const std::vector<FaceOrbit>& orbits, const FaceKey& key);

int euler_characteristic(const Triangulation& t, bool ideal);

/// The subcomplex spanned by the listed simplices (renumbered in the given
/// order); gluings to simplices outside the list become boundary.
Triangulation sub_triangulation(const Triangulation& t, std::span<const int> simplices);

/// Connected components of the dual graph, each sorted, ordered by least index.
std::vector<std::vector<int>> components(const Triangulation& t);

struct ValidityReport {
  int dimension = 0;
  /// self_identified[d] lists the orbit indices (in face_orbits(t, d)) that
  /// carry a nontrivial self-identification, for d < dimension.
  std::vector<std::vector<int>> self_identified;
  int boundary_facets = 0;
  /// Dimension 4 only: per edge orbit, whether its link is a 2-sphere.
  std::vector<bool> edge_link_sphere;
  /// Dimension 4 only: per vertex orbit, whether its link is a closed valid
  /// 3-dimensional triangulation.
  std::vector<bool> vertex_link_closed;

  bool has_self_identifications() const;
  /// No self-identifications; for a dimension-4 input with no boundary, also
  /// every edge link a sphere and every vertex link closed.
  bool passes() const;
};

ValidityReport validate(const Triangulation& t);

}  // namespace gtri
