#include "doctest.h"

#include "vines/bigraph.hpp"
#include "vines/checks.hpp"
#include "vines/golden.hpp"
#include "vines/number_field.hpp"
#include "vines/obstructions.hpp"

using namespace vines;

TEST_CASE("norm squared minimal polynomials") {
  CHECK(norm_squared_min_poly(parse_bigraph("gbg1v1")) == IntPoly{-2, 1});
  CHECK(norm_squared_min_poly(parse_bigraph("gbg1v1v1")) == IntPoly{1, -3, 1});
  CHECK(norm_squared_min_poly(parse_bigraph("gbg1p1p1")) == IntPoly{-3, 1});
  const NormSquared ns = norm_squared_exact(parse_bigraph("gbg1v1v1"));
  CHECK(ns.lo < Rational(1309017, 500000));
  CHECK(ns.hi > Rational(2618033, 1000000));
}

TEST_CASE("number field arithmetic") {
  const FieldPtr k = NumberField::create(IntPoly{-2, 0, 1}, Rational(1), Rational(2));
  const auto a = NumberFieldElement::generator(k);
  CHECK(a * a == NumberFieldElement(k, Rational(2)));
  CHECK(a.min_poly() == IntPoly{-2, 0, 1});
  const auto b = a + NumberFieldElement(k, Rational(1));
  CHECK(b.min_poly() == IntPoly{-1, -2, 1});
  CHECK(b * b.inverse() == NumberFieldElement(k, Rational(1)));
  CHECK(b.evaluate(256).to_double() == doctest::Approx(2.414213562373095));
  CHECK_THROWS_AS(NumberField::create(IntPoly{-4, 0, 1}, Rational(1), Rational(3)), std::invalid_argument);
  CHECK_THROWS_AS(NumberField::create(IntPoly{-2, 0, 2}, Rational(0), Rational(2)), std::invalid_argument);
}

TEST_CASE("exact dimensions of the path on four vertices") {
  const ExactDimensions d = fp_dimensions_exact(parse_bigraph("gbg1v1v1"));
  REQUIRE(d.dims.size() == 4);
  CHECK(d.field->modulus() == IntPoly{-1, -1, 1});
  CHECK(d.dims[d.matrix.start_index] == NumberFieldElement(d.field, Rational(1)));
  // even part: 1 + phi^2, minimal polynomial x^2 - 5x + 5
  CHECK(global_even_dimension_min_poly(parse_bigraph("gbg1v1v1")) == IntPoly{5, -5, 1});
  for (std::size_t v = 0; v < 4; ++v) CHECK(algebraic_integer_test(d, v).passed);
}

TEST_CASE("d-number test") {
  CHECK(d_number_test(IntPoly{5, -5, 1}).passed);
  CHECK(d_number_test(IntPoly{-4, 1}).passed);
  CHECK(d_number_test(IntPoly{15, -15, 3}).passed);
  const DNumberVerdict v = d_number_test(IntPoly{56, -32, 1});
  CHECK_FALSE(v.passed);
  CHECK(v.failing_index > 0);
  CHECK_FALSE(d_number_test(IntPoly{1, -8, 0, 3}).algebraic_integer);
  CHECK(check_dnumbers().passed);
}

TEST_CASE("cyclotomic test") {
  // x^2 - 5x + 5 generates Q(sqrt 5), a cyclotomic subfield
  CHECK(cyclotomic_test(IntPoly{5, -5, 1}, 200).passed);
  // x^3 - 3x - 1 is 2cos(2pi/9)
  CHECK(cyclotomic_test(IntPoly{-1, -3, 0, 1}, 200).passed);
  // x^3 - 2 is not abelian
  const CyclotomicVerdict v = cyclotomic_test(IntPoly{-2, 0, 0, 1}, 200);
  CHECK_FALSE(v.passed);
  CHECK(v.failing_prime == 5);
  CHECK(fails_at_any(IntPoly{-2, 0, 0, 1}, {5}));
  CHECK_FALSE(fails_at_any(IntPoly{-2, 0, 0, 1}, {7}));
}

TEST_CASE("screening single translates") {
  const Bigraph row1 = parse_bigraph(golden::table_a_row(1)->graph);
  const ObstructionReport j2 = screen_translate(row1, 2);
  CHECK(j2.verdict == Verdict::EliminatedCyclotomic);
  const ObstructionReport j1 = screen_translate(row1, 1);
  CHECK(j1.verdict == Verdict::EliminatedDNumber);
  REQUIRE(j1.global_even_minpoly.has_value());
  CHECK(*j1.global_even_minpoly == IntPoly{56, -32, 1});
  const ObstructionReport j0 = screen_translate(row1, 0);
  CHECK(j0.verdict == Verdict::EliminatedAlgebraicInteger);
  REQUIRE(j0.algebraic_integer.has_value());
  CHECK(j0.algebraic_integer->minpoly == IntPoly{1, 0, -8, 0, 3});
  const ObstructionReport s = screen_translate(parse_bigraph(golden::table_a_row(7)->graph), 0);
  CHECK(s.verdict == Verdict::Survivor);
  CHECK(s.cyclotomic.passed);
  const double n2 = std::stod(s.norm_sq);
  CHECK(n2 > 4);
  CHECK(n2 < 5);
}

TEST_CASE("screener agrees with single translates") {
  const Bigraph g = parse_bigraph(golden::table_a_row(9)->graph);
  TranslateScreener screener(g, 30);
  for (long j = 0; j <= 30 - static_cast<long>(g.vertex_count()); ++j) {
    CAPTURE(j);
    const ObstructionReport a = screener.screen(j);
    const ObstructionReport b = screen_translate(g, j);
    CHECK(a.verdict == b.verdict);
    CHECK(a.norm_sq_minpoly == b.norm_sq_minpoly);
    CHECK(a.cyclotomic.failing_prime == b.cyclotomic.failing_prime);
  }
}
