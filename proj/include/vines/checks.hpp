#pragma once

#include "vines/bigraph.hpp"
#include "vines/vine_profile.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace vines {

struct CheckResult {
  explicit CheckResult(std::string n) : name(std::move(n)) {}
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
};

/// Random layered graph with at most `max_vertices` vertices and edge
/// multiplicities up to `max_mult`.
Bigraph random_bigraph(std::mt19937_64& rng, std::size_t max_vertices, unsigned max_mult);

/// Every graph with at most `max_vertices` vertices and multiplicities in
/// [0, max_mult], in encoding order.
std::vector<Bigraph> all_bigraphs(std::size_t max_vertices, unsigned max_mult);

/// det(kI - M) by expansion over the permutations with non-zero terms.
Integer det_shifted_brute_force(const AdjacencyMatrix& m, long k);

/// char_poly of the translate against the tail recurrence.
CheckResult check_recurrence(std::size_t count, std::uint64_t seed);

/// t^n A(t) - t^-n A(1/t) = (t - 1/t) F_n(t) for n = s+1 .. s+span.
CheckResult check_separation(const Bigraph& vine, const VineProfile& profile, long span);

/// char_poly against det_shifted_brute_force at n + 1 points.
CheckResult check_char_poly_oracle(std::size_t max_vertices, unsigned max_mult);

/// prod_{d | n} Phi_d = x^n - 1 for n <= max_n.
CheckResult check_cyclotomic_product(std::uint64_t max_n);

/// Known d-numbers pass; the 15 tabulated global even dimensions fail.
CheckResult check_dnumbers();

/// Residual of the Perron pair at the default precision below 10^-100.
CheckResult check_perron_residuals(const std::vector<Bigraph>& graphs);

}  // namespace vines
