#pragma once

#include "vines/int_poly.hpp"

#include <string>

namespace vines {

/// Laurent polynomial t^low * body(t) over Z, body with non-zero constant
/// term (the zero Laurent polynomial has low = 0 and an empty body).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long low, IntPoly body);

  static LaurentPoly monomial(const Integer& c, long exponent);

  bool is_zero() const { return body_.is_zero(); }
  long low() const { return low_; }
  /// Highest exponent (low() for the zero polynomial).
  long high() const { return low_ + (body_.is_zero() ? 0 : body_.degree()); }
  const IntPoly& body() const { return body_; }
  Integer coeff(long exponent) const;

  /// f(1/t)
  LaurentPoly reflected() const;
  /// t^k f(t)
  LaurentPoly shifted(long k) const;
  /// Terms with exponent > 0.
  LaurentPoly analytic_part() const;
  /// Terms with exponent < 0.
  LaurentPoly principal_part() const;

  LaurentPoly operator-() const;
  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.low_ == b.low_ && a.body_ == b.body_;
  }

  std::string to_string(const std::string& var = "t") const;

 private:
  void normalize();
  long low_ = 0;
  IntPoly body_;
};

/// F(t) = p(t + 1/t).
LaurentPoly to_laurent_F(const IntPoly& p);

/// Inverse of to_laurent_F on palindromic input: the p with p(t + 1/t) = f.
/// Throws ExactnessError when f is not of that form.
IntPoly from_laurent_F(const LaurentPoly& f);

/// Sign alternations in the coefficient list, zeros skipped.
std::size_t sign_changes(const LaurentPoly& a);

/// Sum of k-th powers of the roots of t^(-low) f (all roots, with
/// multiplicity), by Newton's identities. Throws ExactnessError when the
/// result is not an integer.
Integer power_sum(const LaurentPoly& f, unsigned k);

}  // namespace vines
