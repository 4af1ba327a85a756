#include "doctest.h"

#include "vines/big_float.hpp"
#include "vines/bigraph.hpp"
#include "vines/derivative_bound.hpp"
#include "vines/golden.hpp"
#include "vines/perron.hpp"
#include "vines/vine_profile.hpp"

using namespace vines;

namespace {

const mpfr_prec_t kBits = 512;

bool close(const BigFloat& a, const std::string& b, long exponent) {
  const mpfr_prec_t bits = a.precision();
  return (a - BigFloat(b, bits)).abs() < BigFloat::pow10(exponent, bits);
}

}  // namespace

TEST_CASE("Perron pair of the path on four vertices") {
  const AdjacencyMatrix m = adjacency_matrix(parse_bigraph("gbg1v1v1"));
  const PerronPair p = perron_eigenpair(m);
  // (1 + sqrt 5) / 2
  CHECK(close(p.lambda, "1.61803398874989484820458683436563811772030917980576286213544862270526046281890244970720720418939113748475", -100));
  CHECK(p.residual < BigFloat::pow10(-100, p.residual.precision()));
  CHECK(p.vector[m.start_index].to_double() == doctest::Approx(1.0));
  for (const auto& v : p.vector) CHECK(v.to_double() > 0);
}

TEST_CASE("norm squared of small graphs") {
  CHECK(close(norm_squared(parse_bigraph("gbg1v1")), "2", -100));
  CHECK(close(norm_squared(parse_bigraph("gbg1p1p1")), "3", -100));
  CHECK(close(norm_squared(parse_bigraph("gbg2")), "4", -100));
}

TEST_CASE("Perron residuals stay small at higher precision") {
  const AdjacencyMatrix m = adjacency_matrix(translate(parse_bigraph("gbg1v1v1p1v1x1"), 0));
  const PerronPair p = perron_eigenpair(m, 300);
  CHECK(p.residual < BigFloat::pow10(-280, p.lambda.precision()));
}

TEST_CASE("largest root from above") {
  // x^2 - 2
  const RealEvaluator eval = [](const BigFloat& x, BigFloat& value, BigFloat& slope) {
    value = x * x - BigFloat(2L, x.precision());
    slope = x + x;
  };
  const BigFloat r = largest_root_from_above(eval, BigFloat(3L, kBits), 120);
  CHECK((r * r - BigFloat(2L, kBits)).abs() < BigFloat::pow10(-110, kBits));
  CHECK(r.to_double() == doctest::Approx(1.4142135623730951));
}

TEST_CASE("derivative bound on simple inputs") {
  // B = 1, C = 1: 2(n - s) > 0
  CHECK(derivative_bound_holds(IntPoly{1}, IntPoly{1}, 2, 10).status == BoundStatus::Holds);
  // C = 1 - 3t: the bound needs 2(n - s)|1 - 3z| > 6
  const IntPoly C{1, -3};
  CHECK(derivative_bound_holds(IntPoly{1}, C, 0, 1).status != BoundStatus::Holds);
  CHECK(derivative_bound_holds(IntPoly{1}, C, 0, 10).status == BoundStatus::Holds);
  const long m = minimal_certified_n(IntPoly{1}, C, 0, 1, 20);
  CHECK(m >= 2);
  CHECK(m <= 4);
}

TEST_CASE("vine profiles") {
  for (int row : {1, 2, 7, 11, 22}) {
    CAPTURE(row);
    const auto* g = golden::table_a_row(row);
    REQUIRE(g != nullptr);
    const VineProfile p = analyze_vine(parse_bigraph(g->graph));
    CHECK(p.s == g->s);
    CHECK(p.K == g->K);
    CHECK(static_cast<long>(p.Rbound) == g->R);
    CHECK(p.N == g->N);
    const bool non_salem =
        std::count(golden::non_salem_rows().begin(), golden::non_salem_rows().end(), row) > 0;
    CHECK(p.salem == !non_salem);
    if (non_salem) {
      REQUIRE(p.dCertificate.has_value());
      CHECK(p.dCertificate->status == BoundStatus::Holds);
      REQUIRE(p.dMinimal.has_value());
      CHECK(*p.dMinimal <= 70);
    }
  }
}

TEST_CASE("unsupported vines are rejected") {
  CHECK_THROWS_AS(analyze_vine(parse_bigraph("gbg1v1")), UnsupportedVine);
  CHECK_THROWS_AS(analyze_vine(parse_bigraph("gbg1v1v1p1")), UnsupportedVine);
}
