#pragma once

#include "vines/int_poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace vines::modp {

// Scalar arithmetic modulo a word-size modulus (products through 128 bits).

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
/// Inverse of a modulo prime m (a != 0 mod m).
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t m);
std::uint64_t reduce(const Integer& v, std::uint64_t m);

/// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime(std::uint64_t n);
/// All primes <= bound, ascending.
std::vector<std::uint64_t> primes_up_to(std::uint64_t bound);
/// Distinct prime factors of n by trial division.
std::vector<std::uint64_t> prime_factors(std::uint64_t n);

/// Prime q = 1 (mod m) with q > floor, and an element of exact order m mod q.
struct RootOfUnityField {
  std::uint64_t prime = 0;
  std::uint64_t root = 0;
  std::uint64_t order = 0;
};
RootOfUnityField root_of_unity_field(std::uint64_t m, std::uint64_t floor = (1ULL << 61));

/// Discrete log of target to base root (of order `order`, factorization of
/// order given), by Pohlig-Hellman. Returns false when target is not a power
/// of root.
bool discrete_log(std::uint64_t root, std::uint64_t target, std::uint64_t order,
                  const std::vector<std::uint64_t>& order_primes, std::uint64_t prime,
                  std::uint64_t& exponent);

// Dense polynomials over F_p, ascending coefficients, p < 2^32.

using Poly = std::vector<std::uint64_t>;

Poly from_int_poly(const IntPoly& f, std::uint64_t p);
IntPoly to_int_poly(const Poly& f);
int degree(const Poly& f);
void trim(Poly& f);
Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);
/// a = q b + r with deg r < deg b.
void divrem(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r);
Poly rem(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
/// s a + t b = g (g monic).
Poly ext_gcd(const Poly& a, const Poly& b, std::uint64_t p, Poly& s, Poly& t);
Poly derivative(const Poly& a, std::uint64_t p);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& f, std::uint64_t p);
Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, std::uint64_t p);

bool is_squarefree(const Poly& f, std::uint64_t p);

/// Square-free decomposition of a monic f: pairs (g, multiplicity), each g
/// square-free, f = prod g^multiplicity.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f, std::uint64_t p);

/// Distinct-degree factorization of a monic square-free f: (degree, product
/// of all irreducible factors of that degree).
std::vector<std::pair<unsigned, Poly>> distinct_degree(const Poly& f, std::uint64_t p);

/// Degrees (ascending, with multiplicity) of the irreducible factors of a
/// monic square-free f.
std::vector<unsigned> ddf_degrees(const Poly& f, std::uint64_t p);

/// Splits a monic square-free f whose irreducible factors all have degree d
/// (Cantor-Zassenhaus, odd p).
std::vector<Poly> equal_degree_split(const Poly& f, unsigned d, std::uint64_t p, std::mt19937_64& rng);

/// Monic irreducible factors of a monic square-free f (odd p).
std::vector<Poly> factor_squarefree(const Poly& f, std::uint64_t p, std::mt19937_64& rng);

}  // namespace vines::modp
