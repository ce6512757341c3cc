#include "gtri/faces.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

#include "gtri/links.hpp"

namespace gtri {

std::vector<int> FaceKey::sorted_labels() const {
  std::vector<int> out;
  for (int i = 0; i < Perm::kMaxSize; ++i)
    if (labels & (1u << i)) out.push_back(i);
  return out;
}

bool operator<(const FaceKey& a, const FaceKey& b) {
  if (a.simplex != b.simplex) return a.simplex < b.simplex;
  // Lexicographic order of sorted label lists; for equal-size sets this is
  // decided by the lowest label where the sets differ.
  const std::uint8_t diff = a.labels ^ b.labels;
  if (diff == 0) return false;
  const int low = __builtin_ctz(diff);
  return (a.labels >> low) & 1u;
}

int FaceOrbit::find(const FaceKey& key) const {
  auto it = std::find(members.begin(), members.end(), key);
  return it == members.end() ? -1 : static_cast<int>(it - members.begin());
}

namespace {

constexpr int kMaskSpace = 32;

/// Union-find over face keys where each node stores the label map to its parent.
class LabelledUnionFind {
 public:
  LabelledUnionFind(int simplices, int n) : parent_(simplices * kMaskSpace), map_(parent_.size(), Perm(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }

  // Root of x and the map x -> root.
  std::pair<int, Perm> find(int x) {
    Perm acc = map_[x];
    int r = parent_[x];
    if (r == x) return {x, acc};
    auto [root, up] = find(r);
    parent_[x] = root;
    map_[x] = up * acc;
    return {root, map_[x]};
  }

  // Identify x with y where phi carries x's labels to y's labels. Returns
  // false when x and y were already identified by a different map.
  bool unite(int x, int y, const Perm& phi, std::uint8_t x_labels) {
    auto [rx, mx] = find(x);
    auto [ry, my] = find(y);
    if (rx == ry) return (my * phi).agrees_on(x_labels, mx);
    parent_[rx] = ry;
    map_[rx] = my * phi * mx.inverse();
    return true;
  }

 private:
  std::vector<int> parent_;
  std::vector<Perm> map_;
};

std::vector<std::uint8_t> subsets_of_size(int n, int k) {
  std::vector<std::uint8_t> out;
  for (unsigned m = 0; m < (1u << n); ++m)
    if (__builtin_popcount(m) == k) out.push_back(static_cast<std::uint8_t>(m));
  return out;
}

}  // namespace

std::vector<FaceOrbit> face_orbits(const Triangulation& t, int d, std::span<const int> gluing_order) {
  if (d < 0 || d > t.dimension()) throw std::out_of_range("face dimension out of range");
  const int n = t.vertices_per_simplex();
  const auto subsets = subsets_of_size(n, d + 1);
  LabelledUnionFind uf(t.size(), n);
  std::vector<int> bad_nodes;

  for (int gi : gluing_order) {
    const Gluing& g = t.gluings().at(gi);
    const auto facet_mask = static_cast<std::uint8_t>(((1u << n) - 1) & ~(1u << g.source.facet));
    for (std::uint8_t s : subsets) {
      if ((s & facet_mask) != s) continue;
      const int x = g.source.simplex * kMaskSpace + s;
      const int y = g.target.simplex * kMaskSpace + g.map.apply(s);
      if (!uf.unite(x, y, g.map, s)) bad_nodes.push_back(x);
    }
  }

  std::map<int, std::vector<FaceKey>> groups;
  for (int simplex = 0; simplex < t.size(); ++simplex)
    for (std::uint8_t s : subsets) {
      const int node = simplex * kMaskSpace + s;
      groups[uf.find(node).first].push_back({simplex, s});
    }

  std::vector<int> bad_roots;
  for (int node : bad_nodes) bad_roots.push_back(uf.find(node).first);

  std::vector<FaceOrbit> orbits;
  for (auto& [root, keys] : groups) {
    std::sort(keys.begin(), keys.end());
    FaceOrbit orbit;
    orbit.dimension = d;
    orbit.members = keys;
    const Perm rep_to_root = uf.find(keys.front().simplex * kMaskSpace + keys.front().labels).second;
    for (const FaceKey& k : keys) {
      const Perm member_to_root = uf.find(k.simplex * kMaskSpace + k.labels).second;
      orbit.connecting_maps.push_back(member_to_root.inverse() * rep_to_root);
    }
    orbit.self_identified = std::find(bad_roots.begin(), bad_roots.end(), root) != bad_roots.end();
    orbits.push_back(std::move(orbit));
  }
  std::sort(orbits.begin(), orbits.end(),
            [](const FaceOrbit& a, const FaceOrbit& b) { return a.representative() < b.representative(); });
  return orbits;
}

std::vector<FaceOrbit> face_orbits(const Triangulation& t, int d) {
  std::vector<int> order(t.gluings().size());
  std::iota(order.begin(), order.end(), 0);
  return face_orbits(t, d, order);
}

std::vector<int> face_counts(const Triangulation& t) {
  std::vector<int> out;
  for (int d = 0; d <= t.dimension(); ++d) out.push_back(static_cast<int>(face_orbits(t, d).size()));
  return out;
}

std::pair<int, int> locate(const std::vector<FaceOrbit>& orbits, const FaceKey& key) {
  for (std::size_t i = 0; i < orbits.size(); ++i)
    if (int m = orbits[i].find(key); m >= 0) return {static_cast<int>(i), m};
  throw std::out_of_range("face key not present in orbit list");
}

int euler_characteristic(const Triangulation& t, bool ideal) {
  int chi = 0;
  const auto counts = face_counts(t);
  for (int d = ideal ? 1 : 0; d <= t.dimension(); ++d) chi += (d % 2 == 0 ? 1 : -1) * counts[d];
  return chi;
}

Triangulation sub_triangulation(const Triangulation& t, std::span<const int> simplices) {
  std::vector<int> new_index(t.size(), -1);
  for (std::size_t i = 0; i < simplices.size(); ++i) {
    if (new_index.at(simplices[i]) >= 0) throw std::invalid_argument("repeated simplex in subcomplex");
    new_index[simplices[i]] = static_cast<int>(i);
  }
  Triangulation out(t.dimension(), static_cast<int>(simplices.size()));
  for (const Gluing& g : t.gluings()) {
    const int a = new_index[g.source.simplex];
    const int b = new_index[g.target.simplex];
    if (a >= 0 && b >= 0) out.glue({a, g.source.facet}, {b, g.target.facet}, g.map);
  }
  return out;
}

std::vector<std::vector<int>> components(const Triangulation& t) {
  std::vector<int> comp(t.size(), -1);
  std::vector<std::vector<int>> out;
  for (int start = 0; start < t.size(); ++start) {
    if (comp[start] >= 0) continue;
    const int id = static_cast<int>(out.size());
    out.emplace_back();
    std::queue<int> q;
    q.push(start);
    comp[start] = id;
    while (!q.empty()) {
      const int s = q.front();
      q.pop();
      out[id].push_back(s);
      for (int f = 0; f <= t.dimension(); ++f) {
        const auto& p = t.partner({s, f});
        if (p && comp[p->facet.simplex] < 0) {
          comp[p->facet.simplex] = id;
          q.push(p->facet.simplex);
        }
      }
    }
    std::sort(out[id].begin(), out[id].end());
  }
  return out;
}

bool ValidityReport::has_self_identifications() const {
  return std::any_of(self_identified.begin(), self_identified.end(),
                     [](const std::vector<int>& v) { return !v.empty(); });
}

bool ValidityReport::passes() const {
  if (has_self_identifications()) return false;
  if (dimension == 4 && boundary_facets == 0) {
    if (std::find(edge_link_sphere.begin(), edge_link_sphere.end(), false) != edge_link_sphere.end())
      return false;
    if (std::find(vertex_link_closed.begin(), vertex_link_closed.end(), false) != vertex_link_closed.end())
      return false;
  }
  return true;
}

ValidityReport validate(const Triangulation& t) {
  ValidityReport report;
  report.dimension = t.dimension();
  report.boundary_facets = t.boundary_facet_count();
  for (int d = 0; d < t.dimension(); ++d) {
    const auto orbits = face_orbits(t, d);
    std::vector<int> bad;
    for (std::size_t i = 0; i < orbits.size(); ++i)
      if (orbits[i].self_identified) bad.push_back(static_cast<int>(i));
    report.self_identified.push_back(std::move(bad));
  }
  if (t.dimension() == 4 && !report.has_self_identifications()) {
    for (const FaceOrbit& edge : face_orbits(t, 1)) {
      const Triangulation link = edge_link(t, edge).triangulation;
      bool sphere = false;
      try {
        const SurfaceClassification c = classify_surface(link);
        sphere = c.connected && c.orientable && c.boundary_circles == 0 && c.euler_characteristic == 2;
      } catch (const TriangulationError&) {
        sphere = false;
      }
      report.edge_link_sphere.push_back(sphere);
    }
    for (const FaceOrbit& vertex : face_orbits(t, 0)) {
      const Triangulation link = vertex_link(t, vertex).triangulation;
      const ValidityReport sub = validate(link);
      report.vertex_link_closed.push_back(sub.boundary_facets == 0 && !sub.has_self_identifications());
    }
  }
  return report;
}

}  // namespace gtri
