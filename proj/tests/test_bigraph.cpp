#include "doctest.h"

#include "vines/bigraph.hpp"
#include "vines/checks.hpp"
#include "vines/translates.hpp"

#include <random>

using namespace vines;

TEST_CASE("parse and serialize") {
  const Bigraph g = parse_bigraph("gbg1v1v1p1p1");
  CHECK(g.depth() == 3);
  CHECK(g.vertex_count() == 6);
  CHECK(serialize_bigraph(g) == "gbg1v1v1p1p1");
  const Bigraph h = parse_bigraph("gbg1v1v1p1v1x0p1x0p0x1p0x1");
  CHECK(h.vertex_count() == 9);
  CHECK(serialize_bigraph(h) == "gbg1v1v1p1v1x0p1x0p0x1p0x1");
}

TEST_CASE("parse errors carry a position") {
  for (const char* bad : {"", "gb", "gbg", "gbgv1", "gbg1v1x2", "gbg1vv1", "gbg1v1p", "xbg1", "gbg1v1 ", "gbg0v1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_bigraph(bad), ParseError);
  }
  try {
    parse_bigraph("gbg1v1x2");
    FAIL("expected ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() >= 5);
  }
}

TEST_CASE("translate attaches a path at the distinguished vertex") {
  const Bigraph g = parse_bigraph("gbg1v1v1p1p1");
  CHECK(translate(g, 0) == g);
  const Bigraph t2 = translate(g, 2);
  CHECK(t2.vertex_count() == g.vertex_count() + 2);
  CHECK(serialize_bigraph(t2) == "gbg1v1v1v1v1p1p1");
  CHECK(translate(translate(g, 1), 1) == t2);
}

TEST_CASE("adjacency matrix of a path") {
  const AdjacencyMatrix m = adjacency_matrix(parse_bigraph("gbg1v1"));
  REQUIRE(m.size == 3);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 2) == 1);
  CHECK(m.at(0, 2) == 0);
  CHECK(m.parity[m.start_index] == 0);
  for (std::size_t i = 0; i < m.size; ++i)
    for (std::size_t j = 0; j < m.size; ++j) CHECK(m.at(i, j) == m.at(j, i));
}

TEST_CASE("characteristic polynomials of small graphs") {
  CHECK(char_poly(parse_bigraph("gbg1v1")) == IntPoly{0, -2, 0, 1});
  CHECK(char_poly(parse_bigraph("gbg1v1v1")) == IntPoly{1, 0, -3, 0, 1});
  CHECK(char_poly(parse_bigraph("gbg1p1p1")) == IntPoly{0, 0, -3, 0, 1});
  CHECK(char_poly(parse_bigraph("gbg2")) == IntPoly{-4, 0, 1});
}

TEST_CASE("Dynkin detection") {
  CHECK(translates_are_A_or_D(parse_bigraph("gbg1v1")));
  CHECK(translates_are_A_or_D(parse_bigraph("gbg1v1v1p1")));
  CHECK_FALSE(translates_are_A_or_D(parse_bigraph("gbg1v1v1p1p1")));
}

TEST_CASE("translate sequence follows the recurrence") {
  TranslateSequence seq(parse_bigraph("gbg1v1v1p1p1"));
  const long n0 = seq.base_size();
  for (long n = n0; n < n0 + 12; ++n) {
    CAPTURE(n);
    CHECK(seq.P(n) == char_poly(translate(seq.base(), static_cast<std::size_t>(n - n0))));
    CHECK(seq.f(n).degree() == 2 * n);
  }
}

TEST_CASE("enumeration and random graphs") {
  const auto all = all_bigraphs(4, 1);
  CHECK(!all.empty());
  for (const auto& g : all) CHECK(parse_bigraph(serialize_bigraph(g)) == g);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Bigraph g = random_bigraph(rng, 9, 2);
    CHECK(g.vertex_count() <= 9);
    CHECK(parse_bigraph(serialize_bigraph(g)) == g);
  }
}

TEST_CASE("brute force determinant agrees with Berkowitz") {
  const AdjacencyMatrix m = adjacency_matrix(parse_bigraph("gbg1v1v1p1v1x1"));
  const IntPoly p = char_poly(m);
  for (long k = -3; k <= 3; ++k) CHECK(p.eval(Integer(k)) == det_shifted_brute_force(m, k));
}

TEST_CASE("property suites") {
  CHECK(check_recurrence(100, 11).passed);
  CHECK(check_char_poly_oracle(6, 1).passed);
  CHECK(check_char_poly_oracle(5, 2).passed);
  CHECK(check_cyclotomic_product(120).passed);
}
