#include <doctest.h>

#include <random>

#include "gtri/coset.hpp"
#include "gtri/cs.hpp"
#include "gtri/dual.hpp"
#include "gtri/fox.hpp"
#include "gtri/presentation.hpp"
#include "gtri/quotients.hpp"
#include "oracles.hpp"

using namespace gtri;

namespace {

const std::vector<std::string> kEdgeNames{"e0", "e1", "e2", "e3", "e4"};

GroupPresentation pi1() {
  const Triangulation t = builtin_cs_triangulation();
  return relabel_alphabetic(tietze_simplify(dual_presentation(t, default_spanning_tree(t))));
}

Word random_word(std::mt19937& rng, int generators, int max_length) {
  const int length = std::uniform_int_distribution<int>(0, max_length)(rng);
  std::uniform_int_distribution<int> gen(0, generators - 1), sign(0, 1);
  Word w;
  for (int i = 0; i < length; ++i) w.push_back({gen(rng), sign(rng) ? 1 : -1});
  return w;
}

bool is_freely_reduced(const Word& w) {
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1].inverse()) return false;
  return true;
}

// Abelianization from the oracle: rank = generators - rank over Q of the
// exponent matrix; torsion = invariant factors above 1.
HomologyGroup oracle_abelianization(const GroupPresentation& p) {
  const auto dense = oracle::dense(exponent_matrix(p));
  HomologyGroup h;
  h.free_rank = p.generator_count() - oracle::rational_rank(dense);
  for (const auto& f : oracle::invariant_factors(dense))
    if (f > 1) h.torsion.push_back(f);
  return h;
}

// Presentations with infinite cyclic abelianization used for the invariance
// properties.
std::vector<GroupPresentation> regression_corpus() {
  const Triangulation t = builtin_cs_triangulation();
  std::vector<GroupPresentation> corpus;
  for (int tree : {1, 2, 3}) corpus.push_back(dual_presentation(t, {tree}));
  corpus.push_back(pi1());
  corpus.push_back(parse_presentation("x y | x y x y^-1 x^-1 y^-1"));
  corpus.push_back(parse_presentation("x y | x^2 y^-5"));
  corpus.push_back(parse_presentation("x y | x^-1 y x y^-1 x y x^-1 y^-1 x y^-1"));
  corpus.push_back(parse_presentation("x y z | x y x y^-1 x^-1 y^-1, z y^-1 x"));
  corpus.push_back(parse_presentation("x |"));
  corpus.push_back(cs_group(MonodromyMatrix::paper()));
  return corpus;
}

}  // namespace

TEST_SUITE("groups") {
  TEST_CASE("words") {
    const std::vector<std::string> names{"a", "b"};
    const Word w = parse_word("a b^-1 a^2", names);
    CHECK(w.size() == 4);
    CHECK(format_word(w, names) == "a b^-1 a^2");
    CHECK(format_word({}, names) == "1");
    CHECK(parse_word("1", names).empty());
    CHECK(format_word(inverse(w), names) == "a^-2 b a^-1");
    CHECK(exponent_sum(w, 0) == 3);
    CHECK(occurrences(w, 1) == 1);
    CHECK(format_word(cyclic_reduce(parse_word("b a b^-1 a", names)), names) == "b a b^-1 a");
    CHECK(format_word(cyclic_reduce(parse_word("b a^2 b^-1", names)), names) == "a^2");
    CHECK(cyclically_equal(parse_word("a b a", names), parse_word("a^2 b", names)));
    CHECK_FALSE(cyclically_equal(parse_word("a b", names), parse_word("b^-1 a^-1", names)));
    CHECK(cyclically_equal_up_to_inverse(parse_word("a b", names), parse_word("b^-1 a^-1", names)));
    CHECK_THROWS_AS(parse_word("c", names), std::invalid_argument);
    CHECK_THROWS_AS(parse_word("a^x", names), std::invalid_argument);
    CHECK(parse_word("a^0", names).empty());

    std::mt19937 rng(3);
    for (int trial = 0; trial < 500; ++trial) {
      const Word u = random_word(rng, 3, 20);
      const Word r = free_reduce(u);
      CHECK(is_freely_reduced(r));
      CHECK(r.size() <= u.size());
      CHECK(free_reduce(r) == r);
      CHECK(free_reduce(u * inverse(u)).empty());
      const Word c = cyclic_reduce(u);
      CHECK(cyclic_reduce(c) == c);
      CHECK(c.size() <= r.size());
      for (int g = 0; g < 3; ++g) CHECK(exponent_sum(c, g) == exponent_sum(u, g));
      if (!r.empty()) CHECK(cyclically_equal(r, rotate(r, trial % r.size())));
    }
  }

  TEST_CASE("presentation text") {
    const GroupPresentation p = parse_presentation("a b | b a^2 b^-2 a^-3, b^2 a b^-3 a^-2");
    CHECK(p.generator_count() == 2);
    CHECK(p.relators.size() == 2);
    CHECK(format_presentation(p) == "a b | b a^2 b^-2 a^-3, b^2 a b^-3 a^-2");
    CHECK(p.total_length() == 16);
    CHECK(format_presentation(parse_presentation("x |")) == "x |");
    CHECK(format_presentation(GroupPresentation::free_group(2)) == "x0 x1 |");
    CHECK_THROWS(parse_presentation("a | b"));
  }

  TEST_CASE("dual presentation collapsing e2") {
    const Triangulation t = builtin_cs_triangulation();
    const GroupPresentation p = dual_presentation(t, {2});
    CHECK(p.names == std::vector<std::string>{"e0", "e1", "e3", "e4"});
    const std::vector<std::string> names = p.names;
    const std::vector<Word> paper{parse_word("e1 e4^-1 e3 e1^-1 e0", names), parse_word("e3^-1 e0 e1^-1 e3 e4^-1", names),
                                  parse_word("e3^-1 e0^-2", names), parse_word("e1 e4^2", names)};
    REQUIRE(p.relators.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(cyclically_equal(p.relators[i], paper[i]));
    CHECK(format_presentation(p) == "e0 e1 e3 e4 | e1 e4^-1 e3 e1^-1 e0, e3 e4^-1 e3^-1 e0 e1^-1, e0^-2 e3^-1, e1 e4^2");
  }

  TEST_CASE("dual 2-cell words and trees") {
    const Triangulation t = builtin_cs_triangulation();
    const auto cells = dual_two_cells(t);
    REQUIRE(cells.size() == 4);
    // Two hexagons and two squares.
    std::vector<std::size_t> lengths;
    for (const auto& c : cells) lengths.push_back(c.boundary.size());
    CHECK(lengths == std::vector<std::size_t>{6, 6, 4, 4});
    for (const auto& c : cells) CHECK(c.steps.size() == c.boundary.size());

    CHECK(default_spanning_tree(t) == std::vector<int>{1});
    CHECK_THROWS_AS(dual_presentation(t, {0}), std::invalid_argument);  // e0 is a loop
    CHECK_THROWS_AS(dual_presentation(t, {4}), std::invalid_argument);  // e4 is a loop
    CHECK_THROWS_AS(dual_presentation(t, {}), std::invalid_argument);
    CHECK_THROWS_AS(dual_presentation(t, {1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(dual_presentation(t, {7}), std::invalid_argument);

    const GroupPresentation lone = dual_presentation(parse_triangulation("dim 4\nsimplices 1\n"), {});
    CHECK(lone.generator_count() == 0);
    CHECK(lone.relators.empty());
  }

  TEST_CASE("the involution exchanges the dual 2-cells consistently") {
    // Swapping pentachora and reversing labels sends e_i to e_{4-i}^-1, so the
    // set of 2-cell words is preserved up to rotation and inversion.
    const Triangulation t = builtin_cs_triangulation();
    const auto cells = dual_two_cells(t);
    for (const auto& c : cells) {
      Word image;
      for (const Letter& l : c.boundary) image.push_back({4 - l.generator, -l.exponent});
      bool found = false;
      for (const auto& d : cells) found = found || cyclically_equal_up_to_inverse(image, d.boundary);
      CHECK(found);
    }
  }

  TEST_CASE("Tietze simplification reaches the two-generator presentation") {
    const GroupPresentation p = pi1();
    CHECK(format_presentation(p) == "a b | b^-3 a^-2 b^2 a, a^-2 b^-1 a^3 b^2");
    const GroupPresentation paper = parse_presentation("a b | b a^2 b^-2 a^-3, b^2 a b^-3 a^-2");
    CHECK(equivalent_relators(p, paper, true));
    // With the identity renaming: a = e0, b = e4.
    CHECK(cyclically_equal_up_to_inverse(p.relators[0], paper.relators[1]));
    CHECK(cyclically_equal_up_to_inverse(p.relators[1], paper.relators[0]));
    const GroupPresentation from_e2 = tietze_simplify(dual_presentation(builtin_cs_triangulation(), {2}));
    CHECK(from_e2.generator_count() == 2);
    CHECK(equivalent_relators(relabel_alphabetic(from_e2), paper, true));

    CHECK(format_presentation(tietze_simplify(parse_presentation("x y | y"))) == "x |");
    CHECK(format_presentation(tietze_simplify(parse_presentation("x |"))) == "x |");
    const GroupPresentation z3 = parse_presentation("x | x^3");
    CHECK(format_presentation(tietze_simplify(z3)) == "x | x^3");
    // Deterministic.
    CHECK(format_presentation(tietze_simplify(dual_presentation(builtin_cs_triangulation(), {3}))) ==
          format_presentation(tietze_simplify(dual_presentation(builtin_cs_triangulation(), {3}))));
  }

  TEST_CASE("abelianization") {
    CHECK(abelianization(pi1()) == HomologyGroup{1, {}});
    CHECK(abelianization(GroupPresentation::free_group(2)) == HomologyGroup{2, {}});
    CHECK(abelianization(parse_presentation("x | x^3")) == HomologyGroup{0, {3}});
    CHECK(abelianization(cs_group(MonodromyMatrix::paper())) == HomologyGroup{1, {}});
    CHECK(abelianization(GroupPresentation::free_group(0)).is_trivial());
    for (const auto& p : regression_corpus()) CHECK(abelianization(p) == oracle_abelianization(p));
    for (const char* text : {"x y | x^2 y^4, x^6", "a b c | a b a^-1 b^-1, c^2, a^4 c^2"})
      CHECK(abelianization(parse_presentation(text)) == oracle_abelianization(parse_presentation(text)));
  }

  TEST_CASE("fox calculus") {
    const GroupPresentation trefoil = parse_presentation("x y | x y x y^-1 x^-1 y^-1");
    // By hand: d/dx = 1 + xy - xyxy^-1x^-1 -> 1 + t^2 - t.
    CHECK(fox_derivative(trefoil.relators[0], 0, {1, 1}) == LaurentPolynomial({1, -1, 1}));
    CHECK(fox_alexander(trefoil, {1, 1}) == LaurentPolynomial({1, -1, 1}));
    CHECK(fox_alexander(parse_presentation("x |"), {1}) == LaurentPolynomial({1}));
    // Figure-eight knot (w x = y w with w = x^-1 y x y^-1) and the (2,5) torus knot (no generator of degree 1).
    CHECK(fox_alexander(parse_presentation("x y | x^-1 y x y^-1 x y x^-1 y^-1 x y^-1"), {1, 1}) ==
          LaurentPolynomial({1, -3, 1}));
    CHECK(fox_alexander(parse_presentation("x y | x^2 y^-5"), {5, 2}) == LaurentPolynomial({1, -1, 1, -1, 1}));

    const GroupPresentation p = pi1();
    const LaurentPolynomial delta = fox_alexander(p, {-1, 1});
    CHECK(delta == LaurentPolynomial({1, 1, 0, -1}).normalized());
    CHECK(equal_up_to_units_and_reflection(delta, LaurentPolynomial({1, 0, -1, -1})));
    CHECK(abelianization_degrees(p) == std::vector<int>{-1, 1});

    CHECK_THROWS_AS(fox_alexander(p, {1}), AlexanderError);
    CHECK_THROWS_AS(fox_alexander(p, {2, 2}), AlexanderError);
    CHECK_THROWS_AS(fox_alexander(p, {1, 1}), AlexanderError);
    CHECK_THROWS_AS(fox_alexander(GroupPresentation::free_group(2), {1, 0}), AlexanderError);
    CHECK_THROWS_AS(abelianization_degrees(parse_presentation("x | x^3")), AlexanderError);
  }

  TEST_CASE("fundamental formula of Fox calculus") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      const int n = 1 + trial % 4;
      const Word w = random_word(rng, n, 15);
      std::vector<int> deg(n);
      for (int& d : deg) d = std::uniform_int_distribution<int>(-3, 3)(rng);
      LaurentPolynomial sum;
      for (int g = 0; g < n; ++g)
        sum += fox_derivative(w, g, deg) * (LaurentPolynomial::monomial(1, deg[g]) - LaurentPolynomial({1}));
      CHECK(sum == abelianized(w, deg) - LaurentPolynomial({1}));
    }
  }

  TEST_CASE("Alexander polynomial invariance") {
    std::mt19937 rng(17);
    for (const GroupPresentation& p : regression_corpus()) {
      const std::vector<int> deg = abelianization_degrees(p);
      const LaurentPolynomial base = fox_alexander(p, deg);
      CAPTURE(format_presentation(p));
      // -deg reflects.
      std::vector<int> neg(deg);
      for (int& d : neg) d = -d;
      CHECK(equal_up_to_units(fox_alexander(p, neg), base.reflected()));
      // Relator rotation and inversion.
      GroupPresentation q = p;
      for (std::size_t i = 0; i < q.relators.size(); ++i) {
        if (q.relators[i].empty()) continue;
        q.relators[i] = rotate(q.relators[i], rng() % q.relators[i].size());
        if (rng() % 2) q.relators[i] = inverse(q.relators[i]);
      }
      std::shuffle(q.relators.begin(), q.relators.end(), rng);
      CHECK(equal_up_to_units(fox_alexander(q, deg), base));
      // Generator renaming (reverse the order).
      const int n = p.generator_count();
      GroupPresentation r = p;
      std::reverse(r.names.begin(), r.names.end());
      for (Word& w : r.relators)
        for (Letter& l : w) l.generator = n - 1 - l.generator;
      std::vector<int> rdeg(deg.rbegin(), deg.rend());
      CHECK(equal_up_to_units(fox_alexander(r, rdeg), base));
      // Tietze moves preserve abelianization and the Alexander polynomial.
      const GroupPresentation s = tietze_simplify(p);
      CHECK(abelianization(s) == abelianization(p));
      CHECK(equal_up_to_units_and_reflection(fox_alexander(s, abelianization_degrees(s)), base));
    }
  }

  TEST_CASE("all spanning trees give the same invariants") {
    const Triangulation t = builtin_cs_triangulation();
    const GroupPresentation reference = dual_presentation(t, {2});
    const LaurentPolynomial delta = fox_alexander(reference, abelianization_degrees(reference));
    for (int tree : {1, 3}) {
      const GroupPresentation p = dual_presentation(t, {tree});
      CHECK(abelianization(p) == abelianization(reference));
      CHECK(equal_up_to_units_and_reflection(fox_alexander(p, abelianization_degrees(p)), delta));
      for (int n = 2; n <= 4; ++n) CHECK(finite_quotients(p, n) == finite_quotients(reference, n));
    }
  }

  TEST_CASE("coset enumeration") {
    const GroupPresentation p = pi1();
    const std::vector<std::string> names = p.names;
    CHECK(coset_enumeration(p, {parse_word("a", names)}, 10000) == CosetResult{Index{1}});
    CHECK(coset_enumeration(p, {parse_word("b", names)}, 10000) == CosetResult{Index{1}});
    CHECK(coset_enumeration(parse_presentation("x | x^3"), {}, 10000) == CosetResult{Index{3}});
    CHECK(std::holds_alternative<Inconclusive>(coset_enumeration(parse_presentation("x |"), {}, 10)));
    CHECK(std::holds_alternative<Inconclusive>(coset_enumeration(p, {}, 200)));
    CHECK(coset_enumeration(parse_presentation("a b | a^2, b^3, a b a b"), {}, 1000) == CosetResult{Index{6}});
    CHECK(coset_enumeration(parse_presentation("a b | a^4, a^2 b^-2, b^-1 a b a"), {}, 1000) == CosetResult{Index{8}});
    CHECK(coset_enumeration(parse_presentation("a b | a^5, b^2, a b a b"), {}, 1000) == CosetResult{Index{10}});
    CHECK(coset_enumeration(GroupPresentation::free_group(0), {}, 1) == CosetResult{Index{1}});
    CHECK_THROWS_AS(coset_enumeration(p, {}, 0), std::invalid_argument);
  }

  TEST_CASE("finite quotients agree with exhaustive enumeration") {
    // 36 pairs; 18 generate Sym(3) and 8 generate Alt(3).
    CHECK(finite_quotients(GroupPresentation::free_group(2), 3) == QuotientCount{3, 36, 26});
    CHECK(oracle::hom_count(GroupPresentation::free_group(2), 3) == std::pair<std::uint64_t, std::uint64_t>{36, 26});
    for (const auto& p : {pi1(), parse_presentation("x | x^3"), parse_presentation("a b | a^2, b^3, a b a b")})
      CHECK(finite_quotients(p, 1) == QuotientCount{1, 1, 1});
    CHECK_THROWS_AS(finite_quotients(pi1(), 0), std::invalid_argument);
    CHECK_THROWS_AS(finite_quotients(pi1(), 7), std::invalid_argument);

    for (const auto& p : {parse_presentation("x | x^3"), parse_presentation("a b | a^2, b^3, a b a b"),
                          parse_presentation("x y | x y x y^-1 x^-1 y^-1")})
      for (int n = 1; n <= 4; ++n) {
        const auto [all, transitive] = oracle::hom_count(p, n);
        CHECK(finite_quotients(p, n) == QuotientCount{n, all, transitive});
      }
    // Z/3 into Sym(3): the identity and two 3-cycles; transitive only via the 3-cycles.
    CHECK(finite_quotients(parse_presentation("x | x^3"), 3) == QuotientCount{3, 3, 2});
    // Coset enumeration says the S3 presentation has order 6: its homomorphisms
    // into Sym(3) are the 6 automorphisms, 3 maps onto Z/2 and the trivial map.
    CHECK(finite_quotients(parse_presentation("a b | a^2, b^3, a b a b"), 3).homomorphisms == 10);
  }

  TEST_CASE("finite quotients of the two groups") {
    const GroupPresentation p = pi1();
    const GroupPresentation cs = cs_group(MonodromyMatrix::paper());
    // Exhaustive oracle for pi_1 M up to Sym(5), for the CS group up to Sym(4).
    const std::vector<QuotientCount> frozen{{2, 2, 1}, {3, 6, 2}, {4, 24, 6}, {5, 240, 144}};
    for (const QuotientCount& q : frozen) {
      const int n = q.degree;
      const auto [all, transitive] = oracle::hom_count(p, n);
      CHECK(finite_quotients(p, n) == QuotientCount{n, all, transitive});
      CHECK(finite_quotients(p, n) == q);
      if (n <= 4) {
        const auto [call, ctransitive] = oracle::hom_count(cs, n);
        CHECK(QuotientCount{n, call, ctransitive} == q);
      }
      CHECK(finite_quotients(cs, n) == q);
    }
  }
}
