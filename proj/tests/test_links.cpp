#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <random>

#include "gtri/chain_complex.hpp"
#include "gtri/faces.hpp"
#include "gtri/isomorphism.hpp"
#include "gtri/layered.hpp"
#include "gtri/links.hpp"

using namespace gtri;

namespace {

// Orientability by trying every sign assignment: a gluing with map p between
// simplices s and s' is coherent iff o_s * o_s' * sign(p) == -1.
bool brute_force_orientable(const Triangulation& t) {
  const int n = t.size();
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (const Gluing& g : t.gluings()) {
      const int a = (mask >> g.source.simplex & 1) ? -1 : 1;
      const int b = (mask >> g.target.simplex & 1) ? -1 : 1;
      ok = ok && a * b * g.map.sign() == -1;
    }
    if (ok) return true;
  }
  return false;
}

int link_index(const Link& link, int simplex, int vertex) {
  for (int i = 0; i < static_cast<int>(link.corners.size()); ++i)
    if (link.corners[i] == FaceKey{simplex, static_cast<std::uint8_t>(1u << vertex)}) return i;
  return -1;
}

std::vector<HomologyGroup> homology_of(const Triangulation& t) { return homology(chain_complex_of(t)); }

const HomologyGroup kZ{1, {}};
const HomologyGroup kZero{};

// The paper's solid torus in the CS vertex link, in attachment order
// (pentachoron, vertex): green 4, red 4, green 3, red 3, green 2.
const std::vector<std::pair<int, int>> kSolidTorus{{0, 4}, {1, 4}, {0, 3}, {1, 3}, {0, 2}};

std::vector<int> corner_indices(const Link& link, const std::vector<std::pair<int, int>>& corners) {
  std::vector<int> out;
  for (auto [s, v] : corners) out.push_back(link_index(link, s, v));
  return out;
}

// Image under the label-reversing pentachoron swap.
std::vector<std::pair<int, int>> involution_image(const std::vector<std::pair<int, int>>& corners) {
  std::vector<std::pair<int, int>> out;
  for (auto [s, v] : corners) out.emplace_back(1 - s, 4 - v);
  return out;
}

// Some single move carries a onto a surface isomorphic to b. Returns
// "1-3", "2-2" or "".
std::string connecting_move(const Triangulation& a, const Triangulation& b) {
  for (int i = 0; i < a.size(); ++i)
    if (find_isomorphism(pachner_2d(a, OneThree{i}), b)) return "1-3";
  for (int i = 0; i < a.size(); ++i)
    for (int f = 0; f < 3; ++f) {
      const auto& p = a.partner({i, f});
      if (!p || p->facet.simplex == i) continue;
      if (find_isomorphism(pachner_2d(a, TwoTwo{{i, f}}), b)) return "2-2";
    }
  return "";
}

// The two edges not layered across survive (their signs depend on the
// reading direction), so at most one absolute value changes.
bool changes_one_entry(const SlopeTriple& old, const SlopeTriple& next) {
  std::vector<long> a{std::abs(old.p), std::abs(old.q), std::abs(old.r)};
  std::vector<long> b{std::abs(next.p), std::abs(next.q), std::abs(next.r)};
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<long> common;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
  return common.size() >= 2;
}

std::vector<std::vector<int>> all_words(int max_length) {
  std::vector<std::vector<int>> words{{}};
  for (std::size_t start = 0; start < words.size(); ++start)
    if (static_cast<int>(words[start].size()) < max_length)
      for (int k = 0; k < 3; ++k) {
        auto w = words[start];
        w.push_back(k);
        words.push_back(w);
      }
  return words;
}

}  // namespace

TEST_SUITE("links") {
  TEST_CASE("vertex link of the builtin triangulation") {
    const Triangulation t = builtin_cs_triangulation();
    const auto vertices = face_orbits(t, 0);
    REQUIRE(vertices.size() == 1);
    const Link link = vertex_link(t, vertices[0]);
    CHECK(link.triangulation.dimension() == 3);
    CHECK(link.triangulation.size() == 10);
    CHECK(link.triangulation.boundary_facet_count() == 0);
    CHECK(validate(link.triangulation).passes());
    CHECK(homology_of(link.triangulation) == std::vector<HomologyGroup>{kZ, kZ, kZ, kZ});
    CHECK(brute_force_orientable(link.triangulation));
    for (int s = 0; s < 2; ++s)
      for (int v = 0; v < 5; ++v) CHECK(link_index(link, s, v) >= 0);
    CHECK_THROWS(vertex_link(t, face_orbits(t, 1)[0]));
  }

  TEST_CASE("edge link of the builtin triangulation is a sphere") {
    const Triangulation t = builtin_cs_triangulation();
    int total = 0;
    for (const FaceOrbit& e : face_orbits(t, 1)) {
      const Link link = edge_link(t, e);
      total += link.triangulation.size();
      CHECK(link.triangulation.size() == static_cast<int>(e.members.size()));
      CHECK(link.triangulation.boundary_facet_count() == 0);
      CHECK_FALSE(validate(link.triangulation).has_self_identifications());
      const SurfaceClassification c = classify_surface(link.triangulation);
      CHECK(c.connected);
      CHECK(c.orientable);
      CHECK(c.orientable == brute_force_orientable(link.triangulation));
      CHECK(c.euler_characteristic == 2);
      CHECK(c.boundary_circles == 0);
      CHECK(c.genus() == 0);
    }
    CHECK(total == 20);
    CHECK(total == 10 * t.size());
    CHECK_THROWS(edge_link(t, face_orbits(t, 0)[0]));
  }

  TEST_CASE("links of a single unglued pentachoron") {
    const Triangulation t(4, 1);
    const Link v = vertex_link(t, face_orbits(t, 0)[2]);
    CHECK(v.triangulation.size() == 1);
    CHECK(v.triangulation.boundary_facet_count() == 4);
    const Link e = edge_link(t, face_orbits(t, 1)[0]);
    CHECK(e.triangulation.size() == 1);
    CHECK(e.triangulation.boundary_facet_count() == 3);
  }

  TEST_CASE("classify_surface on small surfaces") {
    const SurfaceClassification one = classify_surface(Triangulation(2, 1));
    CHECK(one.euler_characteristic == 1);
    CHECK(one.boundary_circles == 1);
    CHECK(one.orientable);
    CHECK(one.connected);

    const Triangulation sphere = parse_triangulation("dim 2\nsimplices 2\n0:0 1:0 1 2\n0:1 1:1 0 2\n0:2 1:2 0 1\n");
    CHECK(brute_force_orientable(sphere));
    const SurfaceClassification s = classify_surface(sphere);
    CHECK(s.orientable);
    CHECK(s.euler_characteristic == 2);
    CHECK(s.boundary_circles == 0);

    // Same gluings with edge 1 reversed (0 <-> 2).
    const Triangulation twisted = parse_triangulation("dim 2\nsimplices 2\n0:0 1:0 1 2\n0:1 1:1 2 0\n0:2 1:2 0 1\n");
    CHECK_FALSE(brute_force_orientable(twisted));
    const SurfaceClassification n = classify_surface(twisted);
    CHECK_FALSE(n.orientable);
    CHECK(n.boundary_circles == 0);
    const auto counts = face_counts(twisted);
    CHECK(n.euler_characteristic == counts[0] - counts[1] + counts[2]);

    CHECK_FALSE(classify_surface(Triangulation(2, 2)).connected);
  }

  TEST_CASE("layered solid tori agree with the homological slope oracle") {
    for (const auto& word : all_words(5)) {
      const LayeredSolidTorus l = lst(word);
      CAPTURE(word.size());
      CHECK(l.triangulation.size() == 1 + static_cast<int>(word.size()));
      CHECK(l.slopes.p + l.slopes.q + l.slopes.r == 0);
      CHECK(l.slopes.equivalent(meridian_slopes(l.triangulation, l.top)));
      CHECK(l.slopes.equivalent(meridian_slopes(l.triangulation)));
      CHECK(l.triangulation.boundary_facet_count() == 2);
      CHECK(l.triangulation.is_boundary(l.top.face));
      CHECK(face_counts(l.triangulation)[0] == 1);
      CHECK_FALSE(validate(l.triangulation).has_self_identifications());
      const auto h = homology_of(l.triangulation);
      CHECK(h[1] == kZ);
      const SurfaceClassification b = classify_surface(boundary_surface(l.triangulation).triangulation);
      CHECK(b.orientable);
      CHECK(b.euler_characteristic == 0);
      CHECK(b.connected);
      if (!word.empty()) {
        const std::vector<int> prefix(word.begin(), word.end() - 1);
        CHECK(changes_one_entry(lst(prefix).slopes, l.slopes));
      }
    }
  }

  TEST_CASE("layered solid torus base case and errors") {
    const LayeredSolidTorus base = lst({});
    CHECK(base.triangulation.size() == 1);
    CHECK(base.triangulation.gluings().size() == 1);
    // Oracle value of the one-tetrahedron solid torus: the edges meet the
    // meridian 1, 2 and 3 times, with this chirality under the clockwise
    // reading convention.
    CHECK(base.slopes.equivalent(SlopeTriple{2, 1, -3}));
    CHECK_FALSE(base.slopes.equivalent(SlopeTriple{1, 2, -3}));
    CHECK(base.slopes.equivalent(meridian_slopes(base.triangulation, base.top)));
    CHECK_THROWS_AS(lst({3}), std::invalid_argument);
    CHECK_THROWS_AS(lst({0, -1}), std::invalid_argument);
  }

  TEST_CASE("slope triple normal form") {
    const SlopeTriple a{2, 3, -5};
    CHECK(a.canonical() == SlopeTriple{-5, 2, 3});
    CHECK(a.equivalent(SlopeTriple{3, -5, 2}));
    CHECK(a.equivalent(SlopeTriple{-2, -3, 5}));
    CHECK(a.equivalent(SlopeTriple{5, -2, -3}));
    CHECK_FALSE(a.equivalent(SlopeTriple{3, 2, -5}));
    CHECK(a.canonical().canonical() == a.canonical());
  }

  TEST_CASE("label-4 tetrahedra of the vertex link form the (2,3,-5) layered solid torus") {
    const Triangulation t = builtin_cs_triangulation();
    const Link link = vertex_link(t, face_orbits(t, 0)[0]);
    const std::vector<int> label4 = corner_indices(link, {{0, 4}, {1, 4}});
    const Triangulation sub = sub_triangulation(link.triangulation, label4);
    CHECK(sub.size() == 2);
    CHECK(sub.boundary_facet_count() == 2);
    const SlopeTriple slopes = meridian_slopes(sub);
    CHECK(slopes.canonical() == SlopeTriple{-5, 2, 3});
    CHECK(slopes.equivalent(SlopeTriple{2, 3, -5}));

    const LayeredSolidTorus l = lst({2});
    CHECK(l.slopes.equivalent(SlopeTriple{2, 3, -5}));
    CHECK(find_isomorphism(l.triangulation, sub).has_value());
    // Layering across the other edges of the base gives different tori.
    for (int k : {0, 1}) CHECK_FALSE(lst({k}).slopes.equivalent(SlopeTriple{2, 3, -5}));
  }

  TEST_CASE("1-3 and 2-2 moves") {
    const Triangulation t = builtin_cs_triangulation();
    const Triangulation sphere = edge_link(t, face_orbits(t, 1)[0]).triangulation;
    const Triangulation after = pachner_2d(sphere, OneThree{5});
    CHECK(after.size() == sphere.size() + 2);
    CHECK(face_counts(after)[0] == face_counts(sphere)[0] + 1);
    CHECK(face_counts(after)[1] == face_counts(sphere)[1] + 3);
    CHECK(classify_surface(after).euler_characteristic == 2);
    // Untouched triangles keep their relative order.
    auto shifted = [](int i) { return i < 5 ? i : i - 1; };
    for (int i = 0; i < sphere.size(); ++i) {
      if (i == 5) continue;
      for (int f = 0; f < 3; ++f) {
        const auto& p = sphere.partner({i, f});
        if (p->facet.simplex == 5) continue;
        CHECK(after.partner({shifted(i), f})->facet == FacetRef{shifted(p->facet.simplex), p->facet.facet});
      }
    }

    // A 2-2 move across the new diagonal undoes itself.
    const auto& p = sphere.partner({0, 0});
    REQUIRE(p.has_value());
    const Triangulation flipped = pachner_2d(sphere, TwoTwo{{0, 0}});
    CHECK(flipped.size() == sphere.size());
    CHECK_FALSE(flipped.same_table(sphere));
    const int n = flipped.size();
    const Triangulation back = pachner_2d(flipped, TwoTwo{{n - 2, 1}});
    CHECK(find_isomorphism(back, sphere).has_value());

    // Errors.
    CHECK_THROWS_AS(pachner_2d(Triangulation(2, 1), TwoTwo{{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(pachner_2d(sphere, OneThree{sphere.size()}), std::invalid_argument);
    CHECK_THROWS_AS(pachner_2d(sphere, TwoTwo{{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(pachner_2d(sphere, TwoTwo{{-1, 0}}), std::invalid_argument);
    Triangulation folded(2, 1);
    folded.glue({0, 1}, {0, 2}, Perm{0, 2, 1});
    CHECK_THROWS_AS(pachner_2d(folded, TwoTwo{{0, 1}}), std::invalid_argument);
  }

  TEST_CASE("surface classification is invariant under random moves") {
    const Triangulation t = builtin_cs_triangulation();
    const LayeredSolidTorus l = lst({1, 2, 0});
    std::mt19937 rng(2024);
    for (Triangulation s :
         {edge_link(t, face_orbits(t, 1)[0]).triangulation, boundary_surface(l.triangulation).triangulation}) {
      const SurfaceClassification before = classify_surface(s);
      for (int step = 0; step < 40; ++step) {
        const int tri = std::uniform_int_distribution<int>(0, s.size() - 1)(rng);
        const int facet = std::uniform_int_distribution<int>(0, 2)(rng);
        const auto& p = s.partner({tri, facet});
        if (step % 5 == 0 || !p || p->facet.simplex == tri) {
          s = pachner_2d(s, OneThree{tri});
        } else {
          s = pachner_2d(s, TwoTwo{{tri, facet}});
        }
        CHECK_FALSE(validate(s).has_self_identifications());
        const SurfaceClassification c = classify_surface(s);
        CHECK(c.orientable == before.orientable);
        CHECK(c.euler_characteristic == before.euler_characteristic);
        CHECK(c.connected == before.connected);
        CHECK(c.boundary_circles == before.boundary_circles);
      }
    }
  }

  TEST_CASE("replaying the solid torus attachments by Pachner moves") {
    const Triangulation t = builtin_cs_triangulation();
    const Link link = vertex_link(t, face_orbits(t, 0)[0]);
    for (const auto& sequence : {kSolidTorus, involution_image(kSolidTorus)}) {
      const std::vector<int> order = corner_indices(link, sequence);
      std::vector<std::string> moves;
      for (std::size_t k = 2; k < order.size(); ++k) {
        const std::vector<int> before(order.begin(), order.begin() + k), after(order.begin(), order.begin() + k + 1);
        const Triangulation a = boundary_surface(sub_triangulation(link.triangulation, before)).triangulation;
        const Triangulation b = boundary_surface(sub_triangulation(link.triangulation, after)).triangulation;
        moves.push_back(connecting_move(a, b));
        CHECK(classify_surface(b).euler_characteristic == 0);
        CHECK(classify_surface(b).orientable);
      }
      // The third tetrahedron meets the torus in one face, the rest in two.
      CHECK(moves == std::vector<std::string>{"1-3", "2-2", "2-2"});
    }
  }

  TEST_CASE("the vertex link splits into two solid tori exchanged by the involution") {
    const Triangulation t = builtin_cs_triangulation();
    const Link link = vertex_link(t, face_orbits(t, 0)[0]);
    std::vector<int> first = corner_indices(link, kSolidTorus);
    std::vector<int> second = corner_indices(link, involution_image(kSolidTorus));
    CHECK(first.size() == 5);
    CHECK(second.size() == 5);
    std::vector<int> all = first;
    all.insert(all.end(), second.begin(), second.end());
    std::sort(all.begin(), all.end());
    CHECK(std::adjacent_find(all.begin(), all.end()) == all.end());
    CHECK(all.size() == 10);

    const Triangulation a = sub_triangulation(link.triangulation, first);
    const Triangulation b = sub_triangulation(link.triangulation, second);
    CHECK(homology_of(a) == std::vector<HomologyGroup>{kZ, kZ, kZero, kZero});
    CHECK(homology_of(b) == std::vector<HomologyGroup>{kZ, kZ, kZero, kZero});
    CHECK(find_isomorphism(a, b).has_value());
    const Link ba = boundary_surface(a), bb = boundary_surface(b);
    CHECK(classify_surface(ba.triangulation).euler_characteristic == 0);
    CHECK(find_isomorphism(ba.triangulation, bb.triangulation).has_value());
  }
}
