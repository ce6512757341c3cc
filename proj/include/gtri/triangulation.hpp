#pragma once

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gtri/perm.hpp"

namespace gtri {

/// Raised for inconsistent gluing data (conflicts, self-gluings, bad maps).
class TriangulationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised by the "tri" text parser; carries the offending line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what);
  int line() const { return line_; }

 private:
  int line_;
};

struct FacetRef {
  int simplex = 0;
  int facet = 0;
  auto operator<=>(const FacetRef&) const = default;
};

/// One facet pairing as listed: facet `source` is glued to facet `target`,
/// with `map` sending vertex labels of the source simplex to labels of the
/// target simplex (map[source.facet] == target.facet).
struct Gluing {
  FacetRef source;
  FacetRef target;
  Perm map;
};

/// Partner of a facet as seen from that facet.
struct FacetPartner {
  FacetRef facet;
  Perm map;  // labels of this simplex -> labels of partner simplex
};

/// A generalized (unordered delta) triangulation of dimension 2, 3 or 4:
/// simplices glued along facets by arbitrary vertex bijections. The gluing
/// table is kept involutory; the ordered list of gluings remembers the
/// direction each pair was first given in, which fixes dual edge orientation.
class Triangulation {
 public:
  Triangulation(int dimension, int simplex_count);

  int dimension() const { return dim_; }
  int size() const { return static_cast<int>(table_.size()) / (dim_ + 1); }
  int vertices_per_simplex() const { return dim_ + 1; }

  /// Glue source facet to target facet. Throws TriangulationError on a
  /// self-gluing, an already glued facet, or a map that is not a bijection
  /// carrying source.facet to target.facet.
  void glue(FacetRef source, FacetRef target, const Perm& map);

  /// Add `count` unglued simplices; returns the index of the first.
  int add_simplices(int count);

  const std::optional<FacetPartner>& partner(FacetRef f) const { return table_.at(slot(f)); }
  bool is_boundary(FacetRef f) const { return !partner(f).has_value(); }

  /// The listed gluings, one per glued pair, in insertion order.
  const std::vector<Gluing>& gluings() const { return gluings_; }
  /// Index into gluings() of the pair containing f, or -1 for a boundary facet.
  int gluing_index(FacetRef f) const { return pair_index_.at(slot(f)); }

  int boundary_facet_count() const;
  int glued_facet_count() const;

  /// Equal dimension, size and gluing table (the listing order is ignored).
  bool same_table(const Triangulation& other) const;

 private:
  std::size_t slot(FacetRef f) const;

  int dim_;
  std::vector<std::optional<FacetPartner>> table_;
  std::vector<int> pair_index_;
  std::vector<Gluing> gluings_;
};

/// Parse the line-oriented "tri" format:
///   dim <2|3|4>
///   simplices <n>
///   <s>:<f> <s'>:<f'> <i0> ... <i(dim-1)>
/// where the k-th smallest label of facet f of s goes to label i_k of s'.
Triangulation parse_triangulation(std::string_view text);

/// Inverse of parse_triangulation. Bit-exact: single spaces, '\n' endings,
/// gluings in listing order.
std::string serialize(const Triangulation& t);

/// Load from a path, or the builtin when path == "builtin:cs".
Triangulation load_triangulation(const std::string& path_or_builtin);

/// Two ideal pentachora (0 = green, 1 = red) glued by five order-preserving
/// facet maps. Gluing i is dual edge e_i, listed in the direction that orients
/// e_i.
Triangulation builtin_cs_triangulation();

}  // namespace gtri
