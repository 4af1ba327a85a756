#pragma once

#include "vines/int_poly.hpp"

#include <cstddef>

namespace vines {

enum class BoundStatus { Holds, Fails, Inconclusive };

const char* to_string(BoundStatus s);

/// Certificate for (2(n-s) + deg B)|C(z)| - |C'(z)| - |C'(1/z)| > 0 on |z| = 1.
/// Holds: the grid minimum exceeds the Lipschitz margin plus a rounding
/// bound. Fails: some sample is negative beyond the rounding bound.
struct BoundCertificate {
  BoundStatus status = BoundStatus::Inconclusive;
  std::size_t grid_points = 0;
  double sample_minimum = 0;
  double theta_at_minimum = 0;
  double lipschitz = 0;
  double margin = 0;
};

BoundCertificate derivative_bound_holds(const IntPoly& B, const IntPoly& C, long s, long n,
                                        std::size_t max_grid = std::size_t{1} << 22);

/// Smallest n in [from, to] certified by derivative_bound_holds, or -1.
long minimal_certified_n(const IntPoly& B, const IntPoly& C, long s, long from, long to);

}  // namespace vines
