#pragma once

#include "vines/int_poly.hpp"
#include "vines/modp.hpp"

#include <cstdint>
#include <vector>

namespace vines {

std::uint64_t euler_phi(std::uint64_t m);

/// Memoized root_of_unity_field(m) (thread-safe).
modp::RootOfUnityField cached_root_of_unity_field(std::uint64_t m);

/// f(x) mod q.
std::uint64_t eval_mod_prime(const IntPoly& f, std::uint64_t x, std::uint64_t q);

/// k-th cyclotomic polynomial.
IntPoly cyclotomic_poly(std::uint64_t k);

/// Orders m >= 1 with phi(m) <= degree, ascending.
std::vector<std::uint64_t> cyclotomic_orders_up_to_degree(unsigned degree);

struct CyclotomicFactor {
  std::uint64_t order = 0;
  unsigned multiplicity = 0;
};

struct CyclotomicSplit {
  std::vector<CyclotomicFactor> factors;  // ascending order
  IntPoly rest;                           // f divided by all of them
};

/// Divides out every Phi_m dividing f, for m in `orders` (all orders with
/// phi(m) <= deg f when empty). Detection evaluates f at a root of unity of
/// order m modulo a large prime; every hit is confirmed by exact division.
CyclotomicSplit strip_cyclotomic(const IntPoly& f, const std::vector<std::uint64_t>& orders = {});

/// Number of roots counted as complex-conjugate pairs: Phi_1 and Phi_2
/// contribute one per multiplicity, Phi_m (m >= 3) phi(m)/2 per multiplicity.
std::uint64_t conjugate_pair_count(const std::vector<CyclotomicFactor>& factors);

/// Whether f is (up to sign) a product of cyclotomic polynomials.
bool is_cyclotomic_product(const IntPoly& f);

}  // namespace vines
