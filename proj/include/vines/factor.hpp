#pragma once

#include "vines/int_poly.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace vines {

/// Intersects the possible factor-degree sets implied by factorization
/// patterns modulo several primes. Once only 0 and the full degree remain,
/// the polynomial is irreducible over Q.
class DegreeSetTracker {
 public:
  explicit DegreeSetTracker(unsigned degree);

  void add_pattern(const std::vector<unsigned>& degrees);
  bool certified_irreducible() const;
  bool allows(unsigned partial_degree) const;
  unsigned degree() const { return degree_; }
  std::size_t patterns_seen() const { return patterns_; }

 private:
  unsigned degree_;
  std::vector<char> possible_;
  std::size_t patterns_ = 0;
};

/// Degree pattern of f mod q (square-free part and distinct-degree
/// factorization). Throws std::invalid_argument when q divides lc(f).
std::vector<unsigned> factor_degrees_mod_p(const IntPoly& f, std::uint64_t q);

/// Irreducible factors of a square-free primitive f over Z (Zassenhaus:
/// modular factorization, Hensel lifting, recombination). Factors are
/// primitive with positive leading coefficient.
std::vector<IntPoly> factor_squarefree_over_z(const IntPoly& f);

/// Full factorization over Z: (irreducible factor, multiplicity), content
/// dropped.
std::vector<std::pair<IntPoly, unsigned>> factor_over_z(const IntPoly& f);

}  // namespace vines
