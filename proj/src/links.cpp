#include "gtri/links.hpp"

#include <map>
#include <queue>
#include <set>
#include <stdexcept>

namespace gtri {

namespace {

/// Labels of `simplex` outside `face`, sent to 0..k in increasing order.
struct Relabel {
  std::array<int, Perm::kMaxSize> to_link{};
  std::array<int, Perm::kMaxSize> from_link{};
};

Relabel complement_labels(int n, std::uint8_t face) {
  Relabel r;
  r.to_link.fill(-1);
  int k = 0;
  for (int label = 0; label < n; ++label) {
    if (face & (1u << label)) continue;
    r.to_link[label] = k;
    r.from_link[k] = label;
    ++k;
  }
  return r;
}

Link link_of(const Triangulation& t, const FaceOrbit& orbit) {
  const int n = t.vertices_per_simplex();
  const int link_dim = t.dimension() - orbit.dimension - 1;
  Triangulation out(link_dim, static_cast<int>(orbit.members.size()));
  std::vector<Relabel> relabel;
  for (const FaceKey& m : orbit.members) relabel.push_back(complement_labels(n, m.labels));

  std::set<FacetRef> done;
  for (std::size_t i = 0; i < orbit.members.size(); ++i) {
    const FaceKey& m = orbit.members[i];
    for (int k = 0; k <= link_dim; ++k) {
      const int facet = relabel[i].from_link[k];
      const FacetRef here{static_cast<int>(i), k};
      if (done.count(here)) continue;
      const auto& p = t.partner({m.simplex, facet});
      if (!p) continue;
      const FaceKey other{p->facet.simplex, p->map.apply(m.labels)};
      const int j = orbit.find(other);
      if (j < 0) throw std::logic_error("link: partner face outside its own orbit");
      const int k2 = relabel[j].to_link[p->facet.facet];
      Perm map(link_dim + 1);
      for (int a = 0; a <= link_dim; ++a) map.set(a, relabel[j].to_link[p->map[relabel[i].from_link[a]]]);
      const FacetRef there{j, k2};
      out.glue(here, there, map);
      done.insert(here);
      done.insert(there);
    }
  }
  return {std::move(out), orbit.members};
}

}  // namespace

Link vertex_link(const Triangulation& t, const FaceOrbit& vertex) {
  if (t.dimension() != 4 || vertex.dimension != 0)
    throw std::invalid_argument("vertex_link: expected a vertex orbit of a 4-dimensional triangulation");
  return link_of(t, vertex);
}

Link edge_link(const Triangulation& t, const FaceOrbit& edge) {
  if (t.dimension() != 4 || edge.dimension != 1)
    throw std::invalid_argument("edge_link: expected an edge orbit of a 4-dimensional triangulation");
  return link_of(t, edge);
}

std::vector<int> coherent_orientation(const Triangulation& t) {
  std::vector<int> sign(t.size(), 0);
  for (int start = 0; start < t.size(); ++start) {
    if (sign[start] != 0) continue;
    sign[start] = 1;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      for (int f = 0; f <= t.dimension(); ++f) {
        const auto& p = t.partner({s, f});
        if (!p) continue;
        // Gluing maps must be orientation-reversing relative to the signs.
        const int want = -sign[s] * p->map.sign();
        int& other = sign[p->facet.simplex];
        if (other == 0) {
          other = want;
          q.push(p->facet.simplex);
        } else if (other != want) {
          return {};
        }
      }
    }
  }
  return sign;
}

SurfaceClassification classify_surface(const Triangulation& surface) {
  if (surface.dimension() != 2) throw std::invalid_argument("classify_surface: expected dimension 2");
  for (int d = 0; d < 2; ++d)
    for (const FaceOrbit& o : face_orbits(surface, d))
      if (o.self_identified) throw TriangulationError("surface has a face identified with itself");

  SurfaceClassification c;
  c.euler_characteristic = euler_characteristic(surface, false);
  c.connected = components(surface).size() == 1;
  c.orientable = surface.size() == 0 || !coherent_orientation(surface).empty();

  // Boundary circles: components of the graph on vertex orbits spanned by
  // boundary edges.
  const auto vertices = face_orbits(surface, 0);
  std::vector<int> parent(vertices.size());
  for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = static_cast<int>(i);
  auto root = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::set<int> touched;
  for (int s = 0; s < surface.size(); ++s)
    for (int f = 0; f < 3; ++f) {
      if (!surface.is_boundary({s, f})) continue;
      int ends[2], k = 0;
      for (int v = 0; v < 3; ++v)
        if (v != f) ends[k++] = locate(vertices, {s, static_cast<std::uint8_t>(1u << v)}).first;
      parent[root(ends[0])] = root(ends[1]);
      touched.insert(ends[0]);
      touched.insert(ends[1]);
    }
  std::set<int> roots;
  for (int v : touched) roots.insert(root(v));
  c.boundary_circles = static_cast<int>(roots.size());
  return c;
}

Link boundary_surface(const Triangulation& t) {
  if (t.dimension() != 3) throw std::invalid_argument("boundary_surface: expected dimension 3");
  std::vector<FacetRef> faces;
  std::map<FacetRef, int> index;
  for (int s = 0; s < t.size(); ++s)
    for (int f = 0; f < 4; ++f)
      if (t.is_boundary({s, f})) {
        index[{s, f}] = static_cast<int>(faces.size());
        faces.push_back({s, f});
      }

  Triangulation out(2, static_cast<int>(faces.size()));
  std::vector<Relabel> relabel;
  std::vector<FaceKey> corners;
  for (const FacetRef& f : faces) {
    relabel.push_back(complement_labels(4, static_cast<std::uint8_t>(1u << f.facet)));
    corners.push_back({f.simplex, static_cast<std::uint8_t>(0xf & ~(1u << f.facet))});
  }

  std::set<FacetRef> done;
  const int max_steps = 6 * t.size() + 6;
  for (std::size_t i = 0; i < faces.size(); ++i) {
    for (int a = 0; a < 3; ++a) {
      const FacetRef here{static_cast<int>(i), a};
      if (done.count(here)) continue;
      // Walk around the edge opposite label w of this boundary face until the
      // next boundary face is reached.
      const int w = relabel[i].from_link[a];
      Perm track = Perm::identity(4);
      int tet = faces[i].simplex;
      int enter = faces[i].facet;
      int other = w;
      std::uint8_t edge = static_cast<std::uint8_t>(0xf & ~(1u << enter) & ~(1u << w));
      int steps = 0;
      while (!t.is_boundary({tet, other})) {
        if (++steps > max_steps) throw TriangulationError("boundary_surface: edge walk does not terminate");
        const auto& p = *t.partner({tet, other});
        track = p.map * track;
        edge = p.map.apply(edge);
        tet = p.facet.simplex;
        enter = p.facet.facet;
        other = __builtin_ctz(0xf & ~edge & ~(1u << enter));
      }
      const int j = index.at({tet, other});
      Perm map(3);
      for (int b = 0; b < 3; ++b) {
        const int label = relabel[i].from_link[b];
        const int image = (label == w) ? enter : track[label];
        map.set(b, relabel[j].to_link[image]);
      }
      const FacetRef there{j, relabel[j].to_link[enter]};
      out.glue(here, there, map);
      done.insert(here);
      done.insert(there);
    }
  }
  return {std::move(out), std::move(corners)};
}

}  // namespace gtri
