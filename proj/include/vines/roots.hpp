#pragma once

#include "vines/big_float.hpp"
#include "vines/int_poly.hpp"

#include <vector>

namespace vines {

/// Open interval (lo, hi) holding exactly one root of the square-free part,
/// or the exact root lo == hi.
struct RootInterval {
  Rational lo;
  Rational hi;
  unsigned multiplicity = 1;
};

struct RootIsolation {
  IntPoly poly;
  std::vector<RootInterval> roots;  // ascending
};

/// Sturm sequence of p (pseudo-remainders with positive rescaling).
std::vector<IntPoly> sturm_sequence(const IntPoly& p);

/// Number of distinct real roots of p in (a, b].
std::size_t sturm_count(const std::vector<IntPoly>& seq, const Rational& a, const Rational& b);

/// Integer M with every real root of p in (-M, M).
Integer root_bound(const IntPoly& p);

RootIsolation isolate_real_roots(const IntPoly& p);

/// Shrinks an isolating interval of a square-free polynomial below `width`.
RootInterval refine_root(const IntPoly& squarefree, RootInterval iv, const Rational& width);

/// Midpoint of a refined interval at the given precision.
BigFloat root_value(const IntPoly& squarefree, const RootInterval& iv, mpfr_prec_t bits);

}  // namespace vines
