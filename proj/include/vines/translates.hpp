#pragma once

#include "vines/bigraph.hpp"
#include "vines/laurent_poly.hpp"

#include <map>

namespace vines {

/// Characteristic polynomials P_n of the translates Gamma_n of a vine
/// (n = vertex count), from two direct seeds and P_n = x P_{n-1} - P_{n-2}.
/// Indices below |Gamma| continue the recurrence backwards. Not thread-safe.
class TranslateSequence {
 public:
  explicit TranslateSequence(Bigraph base);

  const Bigraph& base() const { return base_; }
  long base_size() const { return base_size_; }

  const IntPoly& P(long n);
  /// F_n(t) = P_n(t + 1/t)
  LaurentPoly F(long n);
  /// t^n F_n(t), a palindromic polynomial of degree 2n.
  const IntPoly& f(long n);

 private:
  Bigraph base_;
  long base_size_;
  std::map<long, IntPoly> P_;
  std::map<long, IntPoly> f_;
};

}  // namespace vines
