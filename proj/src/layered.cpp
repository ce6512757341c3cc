#include "gtri/layered.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "gtri/chain_complex.hpp"
#include "gtri/faces.hpp"
#include "gtri/links.hpp"

namespace gtri {

SlopeTriple SlopeTriple::canonical() const {
  std::array<SlopeTriple, 6> forms{{{p, q, r}, {q, r, p}, {r, p, q}, {-p, -q, -r}, {-q, -r, -p}, {-r, -p, -q}}};
  return *std::min_element(forms.begin(), forms.end(), [](const SlopeTriple& a, const SlopeTriple& b) {
    return std::tie(a.p, a.q, a.r) < std::tie(b.p, b.q, b.r);
  });
}

std::string SlopeTriple::str() const {
  return "(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")";
}

namespace {

std::uint8_t bit(int label) { return static_cast<std::uint8_t>(1u << label); }

/// Sign relating the oriented edge x->y of `simplex` to the representative
/// orientation (increasing labels) of its edge orbit.
int edge_sign(const FaceOrbit& orbit, int member, int x, int y) {
  const auto rep = orbit.representative().sorted_labels();
  const Perm& c = orbit.connecting_maps[member];
  return (c[rep[0]] == x && c[rep[1]] == y) ? 1 : -1;
}

}  // namespace

SlopeTriple meridian_slopes(const Triangulation& v, const OrientedFace& face) {
  if (v.dimension() != 3) throw std::invalid_argument("meridian_slopes: expected dimension 3");
  if (!v.is_boundary(face.face)) throw std::invalid_argument("meridian_slopes: face is not on the boundary");
  const IntegerChainComplex c = chain_complex_of(v);
  if (c.rank(0) != 1) throw std::invalid_argument("meridian_slopes: expected a one-vertex triangulation");
  const HomologyGroup h1 = homology(c, 1);
  if (h1.free_rank != 1 || !h1.torsion.empty())
    throw std::invalid_argument("meridian_slopes: H_1 is " + h1.str() + ", not Z");

  // With one vertex every edge is a cycle, and H_1 = coker d_2. In the Smith
  // basis U, the coordinate past the rank of d_2 is the projection onto Z.
  const SmithForm f = smith_normal_form(c.boundary(2));
  const int free_row = f.rank();
  const auto edges = face_orbits(v, 1);
  auto value = [&](int x, int y) {
    const auto [orbit, member] = locate(edges, {face.face.simplex, static_cast<std::uint8_t>(bit(x) | bit(y))});
    const Integer coord = f.U(free_row, orbit);
    return static_cast<long>(coord) * edge_sign(edges[orbit], member, x, y);
  };
  const auto& k = face.cycle;
  return {value(k[0], k[1]), value(k[1], k[2]), value(k[2], k[0])};
}

SlopeTriple meridian_slopes(const Triangulation& v) {
  std::optional<FacetRef> first;
  for (int s = 0; s < v.size() && !first; ++s)
    for (int f = 0; f < 4; ++f)
      if (v.is_boundary({s, f})) {
        first = FacetRef{s, f};
        break;
      }
  if (!first) throw std::invalid_argument("meridian_slopes: no boundary facet");
  const auto orientation = coherent_orientation(v);
  if (orientation.empty()) throw std::invalid_argument("meridian_slopes: not orientable");
  std::array<int, 3> cycle{};
  int k = 0;
  for (int label = 0; label < 4; ++label)
    if (label != first->facet) cycle[k++] = label;
  // Face f of a positively oriented tetrahedron has Stokes sign (-1)^f; the
  // triangle is read against that orientation (clockwise seen from outside).
  if (orientation[first->simplex] * ((first->facet % 2 == 0) ? 1 : -1) > 0) std::swap(cycle[1], cycle[2]);
  return meridian_slopes(v, {*first, cycle});
}

namespace {

/// Signed meridian values remembered for one oriented edge per edge class.
struct EdgeValue {
  int simplex, x, y;
  long value;
};

long lookup(const Triangulation& t, const std::vector<FaceOrbit>& edges, const std::vector<EdgeValue>& known,
            int simplex, int x, int y) {
  const auto [orbit, member] = locate(edges, {simplex, static_cast<std::uint8_t>(bit(x) | bit(y))});
  for (const EdgeValue& e : known) {
    const auto [o2, m2] = locate(edges, {e.simplex, static_cast<std::uint8_t>(bit(e.x) | bit(e.y))});
    if (o2 != orbit) continue;
    return e.value * edge_sign(edges[orbit], m2, e.x, e.y) * edge_sign(edges[orbit], member, x, y);
  }
  (void)t;
  throw std::logic_error("lst: no remembered value for a boundary edge");
}

std::pair<int, int> edge_in_face(const std::vector<FaceOrbit>& edges, int orbit, int simplex, std::uint8_t face_mask,
                                 const FaceOrbit& o, int ref_member, int x) {
  // Transport the oriented edge of ref_member (starting at label x) to the
  // member lying in the given face.
  for (std::size_t m = 0; m < o.members.size(); ++m) {
    const FaceKey& key = o.members[m];
    if (key.simplex != simplex || (key.labels & face_mask) != key.labels) continue;
    const Perm there = o.connecting_maps[m] * o.connecting_maps[ref_member].inverse();
    const int x2 = there[x];
    const int y2 = __builtin_ctz(key.labels & ~bit(x2));
    return {x2, y2};
  }
  (void)edges;
  (void)orbit;
  throw std::invalid_argument("lst: edge does not appear on the other boundary face");
}

}  // namespace

LayeredSolidTorus lst(const std::vector<int>& word) {
  // One tetrahedron with face 012 folded onto face 123 by 0->1, 1->2, 2->3.
  Triangulation t(3, 1);
  t.glue({0, 3}, {0, 0}, Perm{1, 2, 3, 0});
  // Face 2 of the positive tetrahedron, read clockwise seen from outside.
  OrientedFace top{{0, 2}, {0, 3, 1}};
  OrientedFace bottom{{0, 1}, {0, 2, 3}};
  SlopeTriple slopes = meridian_slopes(t, top);

  std::vector<EdgeValue> known{{0, top.cycle[0], top.cycle[1], slopes.p},
                               {0, top.cycle[1], top.cycle[2], slopes.q},
                               {0, top.cycle[2], top.cycle[0], slopes.r}};

  for (int k : word) {
    if (k < 0 || k > 2) throw std::invalid_argument("lst: edge choice must be 0, 1 or 2");
    const auto edges = face_orbits(t, 1);
    const int x = top.cycle[k];
    const int y = top.cycle[(k + 1) % 3];
    const int z1 = top.cycle[(k + 2) % 3];
    const auto [orbit, member] = locate(edges, {top.face.simplex, static_cast<std::uint8_t>(bit(x) | bit(y))});
    const auto bottom_mask = static_cast<std::uint8_t>(0xf & ~bit(bottom.face.facet));
    const auto [x2, y2] = edge_in_face(edges, orbit, bottom.face.simplex, bottom_mask, edges[orbit], member, x);
    const int z2 = __builtin_ctz(bottom_mask & ~bit(x2) & ~bit(y2));

    // New tetrahedron: edge 23 lies on the layered edge, face 123 on the top
    // triangle and face 023 on the bottom one.
    const int n = t.add_simplices(1);
    Perm to_top(4), to_bottom(4);
    to_top.set(0, top.face.facet);
    to_top.set(1, z1);
    to_top.set(2, x);
    to_top.set(3, y);
    to_bottom.set(0, z2);
    to_bottom.set(1, bottom.face.facet);
    to_bottom.set(2, x2);
    to_bottom.set(3, y2);
    t.glue({n, 0}, top.face, to_top);
    t.glue({n, 1}, bottom.face, to_bottom);

    const auto new_edges = face_orbits(t, 1);
    // New top triangle 012: edge 1->2 is z1->x on the old top, 2->0 is x2->z2
    // on the old bottom, and 0->1 is the new diagonal.
    const long v12 = lookup(t, new_edges, known, n, 1, 2);
    const long v20 = lookup(t, new_edges, known, n, 2, 0);
    const long v01 = -(v12 + v20);
    known.push_back({n, 0, 1, v01});
    // Read the new top clockwise seen from outside, with tetrahedron 0
    // positive; face 3 of a positive tetrahedron has Stokes order (0, 2, 1).
    if (coherent_orientation(t)[n] > 0) {
      slopes = {v01, v12, v20};
      top = {{n, 3}, {0, 1, 2}};
    } else {
      slopes = {-v20, -v12, -v01};
      top = {{n, 3}, {0, 2, 1}};
    }
    bottom = {{n, 2}, {0, 1, 3}};
  }
  return {std::move(t), slopes, top};
}

namespace {

/// A side of a new triangle standing in for a side of a removed one.
struct SideImage {
  FacetRef side;
  Perm old_to_new;
};

Triangulation retriangulate(const Triangulation& s, const std::vector<int>& removed, int added,
                            const std::map<FacetRef, SideImage>& sides,
                            const std::vector<std::pair<FacetRef, FacetRef>>& internal,
                            const std::vector<Perm>& internal_maps) {
  std::vector<int> index(s.size(), -1);
  int kept = 0;
  for (int i = 0; i < s.size(); ++i)
    if (std::find(removed.begin(), removed.end(), i) == removed.end()) index[i] = kept++;
  Triangulation out(2, kept + added);
  auto image = [&](FacetRef f) -> std::optional<SideImage> {
    if (index[f.simplex] >= 0) return SideImage{{index[f.simplex], f.facet}, Perm::identity(3)};
    auto it = sides.find(f);
    if (it == sides.end()) return std::nullopt;
    return it->second;
  };
  for (const Gluing& g : s.gluings()) {
    const auto a = image(g.source);
    const auto b = image(g.target);
    if (!a || !b) continue;
    out.glue(a->side, b->side, b->old_to_new * g.map * a->old_to_new.inverse());
  }
  for (std::size_t i = 0; i < internal.size(); ++i)
    out.glue({kept + internal[i].first.simplex, internal[i].first.facet},
             {kept + internal[i].second.simplex, internal[i].second.facet}, internal_maps[i]);
  return out;
}

}  // namespace

Triangulation pachner_2d(const Triangulation& s, const PachnerMove& move) {
  if (s.dimension() != 2) throw std::invalid_argument("pachner_2d: expected a surface");
  if (const auto* m = std::get_if<OneThree>(&move)) {
    const int tri = m->triangle;
    if (tri < 0 || tri >= s.size()) throw std::invalid_argument("pachner_2d: triangle index out of range");
    // New triangle i copies the old one with vertex i moved to the centre.
    std::map<FacetRef, SideImage> sides;
    for (int i = 0; i < 3; ++i) sides[{tri, i}] = {{s.size() - 1 + i, i}, Perm::identity(3)};
    std::vector<std::pair<FacetRef, FacetRef>> internal;
    std::vector<Perm> maps;
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        internal.push_back({{i, j}, {j, i}});
        Perm swap = Perm::identity(3);
        swap.set(i, j);
        swap.set(j, i);
        maps.push_back(swap);
      }
    return retriangulate(s, {tri}, 3, sides, internal, maps);
  }

  const FacetRef e = std::get<TwoTwo>(move).edge;
  if (e.simplex < 0 || e.simplex >= s.size() || e.facet < 0 || e.facet > 2)
    throw std::invalid_argument("pachner_2d: edge index out of range");
  const auto& partner = s.partner(e);
  if (!partner) throw std::invalid_argument("pachner_2d: 2-2 move across a boundary edge");
  if (partner->facet.simplex == e.simplex)
    throw std::invalid_argument("pachner_2d: 2-2 move needs two distinct triangles");
  const int t1 = e.simplex, t2 = partner->facet.simplex;
  const Perm& sigma = partner->map;
  const int a = e.facet;
  const int b = (a == 0) ? 1 : 0;
  const int c = 3 - a - b;
  const int d = partner->facet.facet;
  const int sb = sigma[b], sc = sigma[c];
  const int base = s.size() - 2;
  // U = (a, b, d), W = (a, c, d); their sides 1 form the new diagonal.
  std::map<FacetRef, SideImage> sides;
  Perm p;
  p = Perm(3), p.set(a, 0), p.set(b, 1), p.set(c, 2);
  sides[{t1, c}] = {{base + 0, 2}, p};
  p = Perm(3), p.set(sb, 1), p.set(d, 2), p.set(sc, 0);
  sides[{t2, sc}] = {{base + 0, 0}, p};
  p = Perm(3), p.set(a, 0), p.set(c, 1), p.set(b, 2);
  sides[{t1, b}] = {{base + 1, 2}, p};
  p = Perm(3), p.set(sc, 1), p.set(d, 2), p.set(sb, 0);
  sides[{t2, sb}] = {{base + 1, 0}, p};
  return retriangulate(s, {t1, t2}, 2, sides, {{{0, 1}, {1, 1}}}, {Perm::identity(3)});
}

}  // namespace gtri
