#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace vines {

using Integer = mpz_class;
using Rational = mpq_class;

/// Raised when an exact operation has no exact answer (non-zero remainder,
/// non-integral power sum, ...).
class ExactnessError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Dense univariate polynomial over Z, coefficients in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Integer> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const Integer& c);
  static IntPoly monomial(const Integer& c, std::size_t k);
  static IntPoly x() { return monomial(1, 1); }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  std::size_t size() const { return coeffs_.size(); }

  /// Coefficient of x^i, zero past the degree.
  const Integer& operator[](std::size_t i) const;
  const Integer& leading() const;
  const std::vector<Integer>& coeffs() const { return coeffs_; }

  IntPoly operator-() const;
  IntPoly& operator+=(const IntPoly& o);
  IntPoly& operator-=(const IntPoly& o);
  IntPoly& operator*=(const IntPoly& o);
  IntPoly& operator*=(const Integer& c);

  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator*(IntPoly a, const Integer& c) { return a *= c; }
  friend IntPoly operator*(const Integer& c, IntPoly a) { return a *= c; }
  friend bool operator==(const IntPoly& a, const IntPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  /// Multiply by x^k.
  IntPoly shifted(std::size_t k) const;
  IntPoly derivative() const;
  /// p(-x)
  IntPoly negated_argument() const;
  /// x^deg p(1/x); trailing zeros of p become a lower degree.
  IntPoly reversed() const;
  /// p(x^k)
  IntPoly inflated(std::size_t k) const;
  /// p(x + c)
  IntPoly taylor_shift(const Integer& c) const;

  Integer content() const;
  /// p / content(p), with positive leading coefficient.
  IntPoly primitive_part() const;
  /// Lowest index with a non-zero coefficient (0 for the zero polynomial).
  std::size_t valuation() const;

  Integer eval(const Integer& v) const;
  Rational eval(const Rational& v) const;
  /// Sign of p(v): -1, 0 or 1.
  int sign_at(const Rational& v) const;

  /// e.g. "x^2 - 4*x + 2"
  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

struct DivisionResult {
  IntPoly quotient;
  IntPoly remainder;
};

/// Division with remainder; requires the leading coefficient of b to divide
/// every intermediate leading coefficient (always true for monic b).
/// Returns nullopt when the quotient would leave Z[x].
std::optional<DivisionResult> divide_over_z(const IntPoly& a, const IntPoly& b);

/// a / b when b | a in Z[x], nullopt otherwise.
std::optional<IntPoly> try_exact_divide(const IntPoly& a, const IntPoly& b);

/// a / b, throwing ExactnessError when the remainder is non-zero.
IntPoly exact_divide(const IntPoly& a, const IntPoly& b);

/// Pseudo-remainder prem(a, b) = lc(b)^(da-db+1) a mod b.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient (primitive PRS).
IntPoly gcd(const IntPoly& a, const IntPoly& b);

/// Product of the distinct irreducible factors, primitive.
IntPoly square_free_part(const IntPoly& p);

/// Square-free decomposition p = c * prod f_i^i (Yun); entry i-1 holds f_i.
std::vector<IntPoly> square_free_decomposition(const IntPoly& p);

/// Resultant by the subresultant algorithm.
Integer resultant(const IntPoly& a, const IntPoly& b);

/// disc(p) = (-1)^(n(n-1)/2) res(p, p') / lc(p).
Integer discriminant(const IntPoly& p);

/// Largest k with q^k | p (p non-zero, deg q >= 1).
std::size_t factor_multiplicity(const IntPoly& p, const IntPoly& q);

/// Polynomial with rational coefficients stored as (numerator / denominator),
/// denominator positive and coprime to the numerator's content.
class RatPoly {
 public:
  RatPoly() : den_(1) {}
  RatPoly(IntPoly num, Integer den);
  explicit RatPoly(const std::vector<Rational>& coeffs);

  const IntPoly& numerator() const { return num_; }
  const Integer& denominator() const { return den_; }
  int degree() const { return num_.degree(); }
  bool is_zero() const { return num_.is_zero(); }
  Rational coeff(std::size_t i) const;
  std::vector<Rational> rational_coeffs() const;

  /// Primitive integer polynomial with positive leading coefficient.
  IntPoly integer_normalized() const { return num_.primitive_part(); }

  friend bool operator==(const RatPoly& a, const RatPoly& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

 private:
  void normalize();
  IntPoly num_;
  Integer den_;
};

}  // namespace vines
