#pragma once

#include "vines/big_float.hpp"
#include "vines/int_poly.hpp"

#include <memory>
#include <vector>

namespace vines {

using RationalMatrix = std::vector<std::vector<Rational>>;

/// det(xI - A) over Q, division-free (Berkowitz), ascending coefficients.
std::vector<Rational> char_poly_rational(const RationalMatrix& a);

/// Q[x]/(m) with m monic and irreducible, together with a real root of m
/// isolated in (root_lo, root_hi) that fixes the embedding.
class NumberField {
 public:
  /// Throws std::invalid_argument unless m is monic and certified irreducible.
  static std::shared_ptr<const NumberField> create(const IntPoly& m, const Rational& root_lo, const Rational& root_hi);

  const IntPoly& modulus() const { return modulus_; }
  int degree() const { return modulus_.degree(); }
  const Rational& root_lo() const { return lo_; }
  const Rational& root_hi() const { return hi_; }
  /// The embedded root to `bits` of precision.
  BigFloat root(mpfr_prec_t bits) const;

 private:
  NumberField(IntPoly m, Rational lo, Rational hi) : modulus_(std::move(m)), lo_(std::move(lo)), hi_(std::move(hi)) {}
  IntPoly modulus_;
  Rational lo_, hi_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

class NumberFieldElement {
 public:
  NumberFieldElement(FieldPtr field, const Rational& value);
  NumberFieldElement(FieldPtr field, std::vector<Rational> coeffs);
  static NumberFieldElement generator(FieldPtr field);

  const FieldPtr& field() const { return field_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const;

  NumberFieldElement operator-() const;
  NumberFieldElement& operator+=(const NumberFieldElement& o);
  NumberFieldElement& operator-=(const NumberFieldElement& o);
  friend NumberFieldElement operator+(NumberFieldElement a, const NumberFieldElement& b) { return a += b; }
  friend NumberFieldElement operator-(NumberFieldElement a, const NumberFieldElement& b) { return a -= b; }
  friend NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b);
  friend bool operator==(const NumberFieldElement& a, const NumberFieldElement& b);

  NumberFieldElement inverse() const;
  /// Matrix of y -> this * y in the power basis.
  RationalMatrix multiplication_matrix() const;
  /// Primitive integer minimal polynomial, positive leading coefficient.
  IntPoly min_poly() const;
  /// Value under the embedding.
  BigFloat evaluate(mpfr_prec_t bits) const;

 private:
  void check(const NumberFieldElement& o) const;
  FieldPtr field_;
  std::vector<Rational> c_;
};

}  // namespace vines
