#pragma once

#include "vines/big_float.hpp"
#include "vines/bigraph.hpp"

#include <functional>
#include <vector>

namespace vines {

struct PerronPair {
  BigFloat lambda;
  /// Positive eigenvector, entry at the distinguished vertex equal to 1.
  std::vector<BigFloat> vector;
  /// max |(Mv - lambda v)_i|
  BigFloat residual;
};

class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Largest eigenvalue and eigenvector of a connected non-negative symmetric
/// matrix: double-precision estimate, then Rayleigh-quotient inverse
/// iteration at the requested precision. Residual < 10^(-digits+10).
PerronPair perron_eigenpair(const AdjacencyMatrix& m, unsigned digits = BigFloat::kDefaultDigits);

BigFloat norm_squared(const Bigraph& g, unsigned digits = BigFloat::kDefaultDigits);

/// Evaluates p(x) and p'(x).
using RealEvaluator = std::function<void(const BigFloat& x, BigFloat& value, BigFloat& slope)>;

/// Largest root of a real-rooted polynomial by Newton's method started at an
/// upper bound on the roots (monotone convergence).
BigFloat largest_root_from_above(const RealEvaluator& eval, const BigFloat& start, unsigned digits);

}  // namespace vines
