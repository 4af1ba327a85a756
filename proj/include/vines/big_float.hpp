#pragma once

#include "vines/int_poly.hpp"

#include <mpfr.h>

#include <string>

namespace vines {

/// Binary precision (bits) for a decimal digit count, plus guard bits.
mpfr_prec_t bits_for_digits(unsigned digits);

/// RAII MPFR value. Every value carries its precision; mixing precisions in
/// one operation or comparison throws std::invalid_argument.
class BigFloat {
 public:
  static constexpr unsigned kDefaultDigits = 128;

  explicit BigFloat(mpfr_prec_t bits = bits_for_digits(kDefaultDigits));
  BigFloat(long v, mpfr_prec_t bits);
  BigFloat(const Integer& v, mpfr_prec_t bits);
  BigFloat(const Rational& v, mpfr_prec_t bits);
  BigFloat(const std::string& decimal, mpfr_prec_t bits);
  BigFloat(const BigFloat& o);
  BigFloat(BigFloat&& o) noexcept;
  BigFloat& operator=(const BigFloat& o);
  BigFloat& operator=(BigFloat&& o) noexcept;
  ~BigFloat();

  mpfr_prec_t precision() const { return mpfr_get_prec(v_); }
  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }

  BigFloat& operator+=(const BigFloat& o);
  BigFloat& operator-=(const BigFloat& o);
  BigFloat& operator*=(const BigFloat& o);
  BigFloat& operator/=(const BigFloat& o);
  friend BigFloat operator+(BigFloat a, const BigFloat& b) { return a += b; }
  friend BigFloat operator-(BigFloat a, const BigFloat& b) { return a -= b; }
  friend BigFloat operator*(BigFloat a, const BigFloat& b) { return a *= b; }
  friend BigFloat operator/(BigFloat a, const BigFloat& b) { return a /= b; }
  BigFloat operator-() const;

  friend bool operator<(const BigFloat& a, const BigFloat& b);
  friend bool operator>(const BigFloat& a, const BigFloat& b) { return b < a; }
  friend bool operator<=(const BigFloat& a, const BigFloat& b) { return !(b < a); }
  friend bool operator>=(const BigFloat& a, const BigFloat& b) { return !(a < b); }

  BigFloat abs() const;
  BigFloat sqrt() const;
  int sign() const { return mpfr_sgn(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  /// Exact rational value of the binary float.
  Rational to_rational() const;
  /// Decimal rendering with `digits` significant digits.
  std::string to_string(unsigned digits = 30) const;

  /// 10^e at precision bits
  static BigFloat pow10(long e, mpfr_prec_t bits);

 private:
  void check(const BigFloat& o) const;
  mpfr_t v_;
};

}  // namespace vines
