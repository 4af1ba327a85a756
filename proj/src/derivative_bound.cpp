#include "vines/derivative_bound.hpp"

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <vector>

namespace vines {

const char* to_string(BoundStatus s) {
  switch (s) {
    case BoundStatus::Holds:
      return "holds";
    case BoundStatus::Fails:
      return "fails";
    case BoundStatus::Inconclusive:
      return "inconclusive";
  }
  return "?";
}

BoundCertificate derivative_bound_holds(const IntPoly& B, const IntPoly& C, long s, long n, std::size_t max_grid) {
  BoundCertificate cert;
  if (C.is_zero()) throw std::invalid_argument("derivative_bound_holds: C is zero");
  const double a = 2.0 * static_cast<double>(n - s) + std::max(B.degree(), 0);
  std::vector<double> c(C.coeffs().size());
  for (std::size_t k = 0; k < c.size(); ++k) c[k] = C[k].get_d();
  double s0 = 0, s1 = 0, s2 = 0;
  for (std::size_t k = 0; k < c.size(); ++k) {
    const double ak = std::abs(c[k]);
    const double kd = static_cast<double>(k);
    s0 += ak;
    s1 += kd * ak;
    s2 += kd * (kd - 1) * ak;
  }
  // On the circle |C'(1/z)| = |C'(z)| (real coefficients), so the expression
  // is a|C| - 2|C'|, symmetric under theta -> -theta.
  cert.lipschitz = std::abs(a) * s1 + 2 * s2;
  const double rounding = 1e-11 * (std::abs(a) * s0 + 2 * s1 + 1);
  auto value = [&](double theta) {
    const std::complex<double> z = std::polar(1.0, theta);
    std::complex<double> p = 0, dp = 0;
    for (std::size_t k = c.size(); k-- > 0;) {
      dp = dp * z + p;
      p = p * z + c[k];
    }
    return a * std::abs(p) - 2 * std::abs(dp);
  };
  for (std::size_t grid = 1024; grid <= max_grid; grid *= 2) {
    const double h = std::numbers::pi / static_cast<double>(grid);
    double minimum = std::numeric_limits<double>::infinity();
    double at = 0;
    for (std::size_t i = 0; i <= grid; ++i) {
      const double theta = h * static_cast<double>(i);
      const double v = value(theta);
      if (v < minimum) {
        minimum = v;
        at = theta;
      }
    }
    cert.grid_points = grid + 1;
    cert.sample_minimum = minimum;
    cert.theta_at_minimum = at;
    cert.margin = cert.lipschitz * h / 2 + rounding;
    if (minimum < -rounding) {
      cert.status = BoundStatus::Fails;
      return cert;
    }
    if (minimum > cert.margin) {
      cert.status = BoundStatus::Holds;
      return cert;
    }
  }
  cert.status = BoundStatus::Inconclusive;
  return cert;
}

long minimal_certified_n(const IntPoly& B, const IntPoly& C, long s, long from, long to) {
  for (long n = from; n <= to; ++n) {
    if (derivative_bound_holds(B, C, s, n, std::size_t{1} << 16).status == BoundStatus::Holds) return n;
  }
  return -1;
}

}  // namespace vines
