#include "gtri/dual.hpp"

#include <algorithm>
#include <optional>
#include <queue>
#include <stdexcept>

#include "gtri/links.hpp"

namespace gtri {

namespace {

void require_valid_4d(const Triangulation& t, bool closed) {
  if (t.dimension() != 4) throw TriangulationError("dual complex needs a 4-dimensional triangulation");
  if (closed && t.boundary_facet_count() != 0) throw TriangulationError("dual complex needs every facet glued");
  for (int d = 0; d < 4; ++d)
    for (const FaceOrbit& o : face_orbits(t, d))
      if (o.self_identified) throw TriangulationError("dual complex: a face is identified with itself");
}

// The label outside `triangle` other than `label`.
int other_complement(std::uint8_t triangle, int label) {
  return __builtin_ctz(0x1f & ~triangle & ~(1u << label));
}

// Empty when the walk runs into a boundary facet.
std::optional<DualTwoCell> walk_around(const Triangulation& t, DualStep start) {
  DualTwoCell cell;
  DualStep step = start;
  const std::size_t limit = 10 * static_cast<std::size_t>(t.size()) + 1;
  do {
    if (cell.steps.size() >= limit) throw TriangulationError("dual 2-cell walk does not close");
    cell.steps.push_back(step);
    const FacetRef out{step.simplex, step.exit};
    if (t.is_boundary(out)) return std::nullopt;
    const int gi = t.gluing_index(out);
    cell.boundary.push_back({gi, t.gluings()[gi].source == out ? 1 : -1});
    const FacetPartner& p = *t.partner(out);
    step.simplex = p.facet.simplex;
    step.triangle = p.map.apply(step.triangle);
    step.exit = other_complement(step.triangle, p.facet.facet);
  } while (!(step == start));
  return cell;
}

// The orientation of a dual 2-cell is the co-orientation of its triangle:
// (representative labels in increasing order, then the cell) is the ambient
// orientation with pentachoron 0 positive. Inside the representative, with
// complement labels d < e, that means leaving through the facet opposite d
// when (a, b, c, d, e) is positive and opposite e otherwise. Non-orientable
// inputs use the first rule throughout.
std::optional<DualTwoCell> walk_from_representative(const Triangulation& t, const FaceOrbit& o,
                                                    const std::vector<int>& orientation) {
  const FaceKey& rep = o.representative();
  const auto labels = rep.sorted_labels();
  const int d = __builtin_ctz(0x1f & ~rep.labels);
  const int e = other_complement(rep.labels, d);
  const int sign = orientation.empty() ? 1 : Perm{labels[0], labels[1], labels[2], d, e}.sign() * orientation[rep.simplex];
  auto cell = walk_around(t, {rep.simplex, rep.labels, sign > 0 ? d : e});
  // Paths compose right to left: the first dual edge crossed is the last letter.
  if (cell) std::reverse(cell->boundary.begin(), cell->boundary.end());
  return cell;
}

}  // namespace

std::vector<DualTwoCell> dual_two_cells(const Triangulation& t) {
  require_valid_4d(t, true);
  std::vector<DualTwoCell> cells;
  const auto orientation = coherent_orientation(t);
  for (const FaceOrbit& o : face_orbits(t, 2)) cells.push_back(*walk_from_representative(t, o, orientation));
  return cells;
}

IntegerChainComplex dual_chain_complex(const Triangulation& t) {
  const auto cells = dual_two_cells(t);
  const auto edges = face_orbits(t, 1);
  const auto triangles = face_orbits(t, 2);
  const int n0 = t.size();
  const int n1 = static_cast<int>(t.gluings().size());
  const int n2 = static_cast<int>(cells.size());
  const int n3 = static_cast<int>(edges.size());

  IntegerMatrix d1(n0, n1);
  for (int i = 0; i < n1; ++i) {
    const Gluing& g = t.gluings()[i];
    d1(g.target.simplex, i) += 1;
    d1(g.source.simplex, i) -= 1;
  }

  IntegerMatrix d2(n1, n2);
  for (int j = 0; j < n2; ++j)
    for (const Letter& l : cells[j].boundary) d2(l.generator, j) += l.exponent;

  IntegerMatrix d3(n2, n3);
  for (int e = 0; e < n3; ++e) {
    const Link link = edge_link(t, edges[e]);
    const auto orientation = coherent_orientation(link.triangulation);
    if (orientation.empty()) throw TriangulationError("dual complex: an edge link is not orientable");
    // Each vertex of the link is a (pentachoron, triangle) incidence; the
    // polygon around it, traversed anticlockwise, is one copy of a dual 2-cell.
    for (const FaceOrbit& v : face_orbits(link.triangulation, 0)) {
      const FaceKey& rep = v.representative();
      const FaceKey& corner = link.corners[rep.simplex];
      std::vector<int> complement;  // ambient labels outside the edge
      for (int label = 0; label < 5; ++label)
        if (!(corner.labels & (1u << label))) complement.push_back(label);
      const int a = __builtin_ctz(rep.labels);
      int b = -1, c = -1;
      for (int x = 0; x < 3; ++x)
        if (x != a) (b < 0 ? b : c) = x;
      const int order_sign = Perm{a, b, c}.sign() * orientation[rep.simplex];
      // Anticlockwise about a leaves through the side [a, c] when (a, b, c)
      // is positively oriented, i.e. through the facet opposite b.
      const int exit = complement[order_sign > 0 ? b : c];
      const auto tri_mask = static_cast<std::uint8_t>(corner.labels | (1u << complement[a]));
      const DualStep here{corner.simplex, tri_mask, exit};
      const auto [row, member] = locate(triangles, {corner.simplex, tri_mask});
      (void)member;
      const auto& steps = cells[row].steps;
      d3(row, e) += std::find(steps.begin(), steps.end(), here) != steps.end() ? 1 : -1;
    }
  }
  return IntegerChainComplex({n0, n1, n2, n3}, {std::move(d1), std::move(d2), std::move(d3)});
}

std::vector<int> default_spanning_tree(const Triangulation& t) {
  std::vector<int> tree;
  if (t.size() == 0) return tree;
  std::vector<bool> seen(t.size(), false);
  std::queue<int> q;
  seen[0] = true;
  q.push(0);
  while (!q.empty()) {
    const int s = q.front();
    q.pop();
    std::vector<int> incident;
    for (int f = 0; f <= t.dimension(); ++f)
      if (!t.is_boundary({s, f})) incident.push_back(t.gluing_index({s, f}));
    std::sort(incident.begin(), incident.end());
    for (int gi : incident) {
      const Gluing& g = t.gluings()[gi];
      const int other = g.source.simplex == s ? g.target.simplex : g.source.simplex;
      if (seen[other]) continue;
      seen[other] = true;
      tree.push_back(gi);
      q.push(other);
    }
  }
  return tree;
}

GroupPresentation dual_presentation(const Triangulation& t, const std::vector<int>& tree_edges) {
  require_valid_4d(t, false);
  std::vector<DualTwoCell> cells;
  const auto orientation = coherent_orientation(t);
  for (const FaceOrbit& o : face_orbits(t, 2))
    if (auto c = walk_from_representative(t, o, orientation)) cells.push_back(std::move(*c));
  const int n = static_cast<int>(t.gluings().size());

  // Spanning tree check by union-find over pentachora.
  std::vector<int> parent(t.size());
  for (int i = 0; i < t.size(); ++i) parent[i] = i;
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> in_tree(n, false);
  for (int gi : tree_edges) {
    if (gi < 0 || gi >= n) throw std::invalid_argument("tree edge index out of range");
    if (in_tree[gi]) throw std::invalid_argument("tree edge listed twice");
    const Gluing& g = t.gluings()[gi];
    if (g.source.simplex == g.target.simplex)
      throw std::invalid_argument("dual edge e" + std::to_string(gi) + " is a loop");
    const int a = root(g.source.simplex), b = root(g.target.simplex);
    if (a == b) throw std::invalid_argument("tree edges contain a cycle");
    parent[a] = b;
    in_tree[gi] = true;
  }
  for (int s = 0; s < t.size(); ++s)
    if (root(s) != root(0)) {
      if (components(t).size() > 1) throw std::invalid_argument("triangulation is disconnected");
      throw std::invalid_argument("tree edges do not span the dual graph");
    }

  GroupPresentation p;
  std::vector<int> index(n, -1);
  for (int i = 0; i < n; ++i)
    if (!in_tree[i]) {
      index[i] = p.generator_count();
      p.names.push_back("e" + std::to_string(i));
    }
  for (const DualTwoCell& c : cells) {
    Word w;
    for (const Letter& l : c.boundary)
      if (!in_tree[l.generator]) w.push_back({index[l.generator], l.exponent});
    w = cyclic_reduce(w);
    if (!w.empty()) p.relators.push_back(std::move(w));
  }
  return p;
}

}  // namespace gtri
