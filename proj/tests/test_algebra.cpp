#include "doctest.h"

#include "vines/cyclotomic.hpp"
#include "vines/factor.hpp"
#include "vines/int_poly.hpp"
#include "vines/laurent_poly.hpp"
#include "vines/modp.hpp"
#include "vines/roots.hpp"

#include <random>

using namespace vines;

namespace {

IntPoly random_poly(std::mt19937_64& rng, int degree, long range) {
  std::uniform_int_distribution<long> d(-range, range);
  std::vector<Integer> c(static_cast<std::size_t>(degree + 1));
  for (auto& x : c) x = d(rng);
  if (c.back() == 0) c.back() = 1;
  return IntPoly(std::move(c));
}

// Sylvester matrix determinant by fraction-free Bareiss elimination.
Integer sylvester_resultant(const IntPoly& a, const IntPoly& b) {
  const int m = a.degree(), n = b.degree();
  const int size = m + n;
  std::vector<std::vector<Integer>> M(size, std::vector<Integer>(size, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) M[i][i + k] = a[static_cast<std::size_t>(m - k)];
  for (int i = 0; i < m; ++i)
    for (int k = 0; k <= n; ++k) M[n + i][i + k] = b[static_cast<std::size_t>(n - k)];
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < size - 1; ++k) {
    if (M[k][k] == 0) {
      int r = k + 1;
      while (r < size && M[r][k] == 0) ++r;
      if (r == size) return 0;
      std::swap(M[k], M[r]);
      sign = -sign;
    }
    for (int i = k + 1; i < size; ++i)
      for (int j = k + 1; j < size; ++j) {
        Integer v = M[i][j] * M[k][k] - M[i][k] * M[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        M[i][j] = v;
      }
    prev = M[k][k];
  }
  return sign * M[size - 1][size - 1];
}

}  // namespace

TEST_CASE("division and gcd") {
  IntPoly a{-1, 0, 1};  // x^2 - 1
  IntPoly b{1, 1};
  CHECK(exact_divide(a, b) == IntPoly{-1, 1});
  CHECK_FALSE(try_exact_divide(a, IntPoly{2, 1}).has_value());
  CHECK(gcd(a, IntPoly{1, 2, 1}) == IntPoly{1, 1});
  IntPoly p = IntPoly{1, 1} * IntPoly{1, 1} * IntPoly{-2, 0, 1};
  CHECK(square_free_part(p) == IntPoly{1, 1} * IntPoly{-2, 0, 1});
  CHECK(factor_multiplicity(p, IntPoly{1, 1}) == 2);
}

TEST_CASE("resultant agrees with Sylvester determinant") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly a = random_poly(rng, 1 + trial % 6, 9);
    IntPoly b = random_poly(rng, 1 + (trial / 6) % 5, 9);
    CHECK(resultant(a, b) == sylvester_resultant(a, b));
  }
}

TEST_CASE("square-free decomposition reassembles") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    IntPoly f = random_poly(rng, 3, 5).primitive_part();
    IntPoly g = random_poly(rng, 2, 5).primitive_part();
    IntPoly p = f * g * g * g;
    auto parts = square_free_decomposition(p);
    IntPoly prod{1};
    for (std::size_t i = 0; i < parts.size(); ++i)
      for (std::size_t k = 0; k <= i; ++k) prod = prod * parts[i];
    CHECK(prod.primitive_part() == p.primitive_part());
  }
}

TEST_CASE("laurent conversion round trip") {
  IntPoly p{-2, 0, 1, 3};
  LaurentPoly F = to_laurent_F(p);
  CHECK(F.low() == -3);
  CHECK(F.high() == 3);
  CHECK(from_laurent_F(F) == p);
  CHECK(power_sum(LaurentPoly(0, IntPoly{-2, 0, 1}), 4) == 8);
}

TEST_CASE("modular arithmetic helpers") {
  CHECK(modp::is_prime(2305843009213693951ULL));
  CHECK_FALSE(modp::is_prime(2305843009213693953ULL));
  auto f = modp::root_of_unity_field(30);
  CHECK(f.prime % 30 == 1);
  CHECK(modp::pow_mod(f.root, 30, f.prime) == 1);
  CHECK(modp::pow_mod(f.root, 15, f.prime) != 1);
  CHECK(modp::pow_mod(f.root, 10, f.prime) != 1);
  CHECK(modp::pow_mod(f.root, 6, f.prime) != 1);
  std::uint64_t e = 0;
  REQUIRE(modp::discrete_log(f.root, modp::pow_mod(f.root, 17, f.prime), 30, {2, 3, 5}, f.prime, e));
  CHECK(e == 17);
}

TEST_CASE("factorization over Z") {
  IntPoly f = IntPoly{-2, 0, 1} * IntPoly{1, 1, 1} * IntPoly{-1, -1, 0, 1} * IntPoly{3, 0, 0, 0, 1};
  auto parts = factor_squarefree_over_z(f);
  CHECK(parts.size() == 4);
  IntPoly prod{1};
  for (auto& p : parts) prod = prod * p;
  CHECK(prod == f);
  // Swinnerton-Dyer style: x^4 - 10x^2 + 1 splits modulo every prime
  auto sd = factor_squarefree_over_z(IntPoly{1, 0, -10, 0, 1});
  CHECK(sd.size() == 1);
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    IntPoly a = random_poly(rng, 2 + trial % 4, 20).primitive_part();
    IntPoly b = random_poly(rng, 1 + trial % 5, 20).primitive_part();
    IntPoly c = a * b;
    auto fac = factor_over_z(c);
    IntPoly rebuilt{1};
    for (auto& [g, m] : fac)
      for (unsigned k = 0; k < m; ++k) rebuilt = rebuilt * g;
    CHECK(rebuilt.primitive_part() == c.primitive_part());
  }
}

TEST_CASE("degree set tracker") {
  DegreeSetTracker t(6);
  t.add_pattern({3, 3});
  CHECK_FALSE(t.certified_irreducible());
  t.add_pattern({1, 5});
  CHECK(t.certified_irreducible());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_poly(1) == IntPoly{-1, 1});
  CHECK(cyclotomic_poly(6) == IntPoly{1, -1, 1});
  CHECK(cyclotomic_poly(105).degree() == 48);
  CHECK(euler_phi(105) == 48);
  IntPoly f = cyclotomic_poly(5) * cyclotomic_poly(5) * cyclotomic_poly(12) * IntPoly{-1, -1, 0, 1};
  auto split = strip_cyclotomic(f);
  REQUIRE(split.factors.size() == 2);
  CHECK(split.factors[0].order == 5);
  CHECK(split.factors[0].multiplicity == 2);
  CHECK(split.factors[1].order == 12);
  CHECK(split.rest == IntPoly{-1, -1, 0, 1});
  CHECK(conjugate_pair_count(split.factors) == 6);
  for (std::uint64_t n = 1; n <= 200; ++n) {
    IntPoly prod{1};
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    IntPoly target = IntPoly::monomial(1, n) - IntPoly{1};
    CHECK(prod == target);
  }
}

TEST_CASE("Sturm root counts match sign-change isolation") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    // product of known linear factors and a positive quadratic
    std::uniform_int_distribution<long> d(-6, 6);
    int k = 1 + trial % 5;
    IntPoly p{1, 0, 1};
    std::vector<long> rootsv;
    for (int i = 0; i < k; ++i) {
      long r = d(rng);
      rootsv.push_back(r);
      p = p * IntPoly{-r, 1};
    }
    std::sort(rootsv.begin(), rootsv.end());
    rootsv.erase(std::unique(rootsv.begin(), rootsv.end()), rootsv.end());
    auto iso = isolate_real_roots(p);
    REQUIRE(iso.roots.size() == rootsv.size());
    for (std::size_t i = 0; i < rootsv.size(); ++i) {
      CHECK(iso.roots[i].lo <= rootsv[i]);
      CHECK(iso.roots[i].hi >= rootsv[i]);
    }
  }
  auto iso = isolate_real_roots(IntPoly{-2, 0, 1});
  REQUIRE(iso.roots.size() == 2);
  BigFloat r = root_value(IntPoly{-2, 0, 1}, iso.roots[1], 400);
  CHECK(r.to_string(20).substr(0, 12) == "1.4142135623");
}
