#include "vines/number_field.hpp"

#include "vines/factor.hpp"
#include "vines/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace vines {

std::vector<Rational> char_poly_rational(const RationalMatrix& a) {
  const std::size_t n = a.size();
  if (n == 0) return {Rational(1)};
  std::vector<Rational> c{Rational(1), -a[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<Rational> t(r + 2);
    t[0] = 1;
    t[1] = -a[r][r];
    std::vector<Rational> v(r);
    for (std::size_t i = 0; i < r; ++i) v[i] = a[i][r];
    for (std::size_t k = 2; k <= r + 1; ++k) {
      Rational dot = 0;
      for (std::size_t i = 0; i < r; ++i)
        if (a[r][i] != 0 && v[i] != 0) dot += a[r][i] * v[i];
      t[k] = -dot;
      if (k == r + 1) break;
      std::vector<Rational> nv(r);
      for (std::size_t i = 0; i < r; ++i) {
        Rational acc = 0;
        for (std::size_t j = 0; j < r; ++j)
          if (a[i][j] != 0 && v[j] != 0) acc += a[i][j] * v[j];
        nv[i] = acc;
      }
      v = std::move(nv);
    }
    std::vector<Rational> nc(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j)
        if (c[j] != 0 && t[i - j] != 0) nc[i] += t[i - j] * c[j];
    c = std::move(nc);
  }
  std::reverse(c.begin(), c.end());
  return c;
}

std::shared_ptr<const NumberField> NumberField::create(const IntPoly& m, const Rational& lo, const Rational& hi) {
  if (m.degree() < 1 || m.leading() != 1) throw std::invalid_argument("NumberField: modulus must be monic of degree >= 1");
  if (m.degree() > 1 && factor_squarefree_over_z(m).size() != 1)
    throw std::invalid_argument("NumberField: modulus is reducible");
  const IntPoly sqf = m;
  if (lo == hi) {
    if (m.sign_at(lo) != 0) throw std::invalid_argument("NumberField: embedding point is not a root");
  } else if (sturm_count(sturm_sequence(sqf), lo, hi) != 1 || m.sign_at(hi) == 0) {
    throw std::invalid_argument("NumberField: interval does not isolate one root");
  }
  return std::shared_ptr<const NumberField>(new NumberField(m, lo, hi));
}

BigFloat NumberField::root(mpfr_prec_t bits) const {
  if (lo_ == hi_) return BigFloat(lo_, bits);
  return root_value(modulus_, RootInterval{lo_, hi_, 1}, bits);
}

namespace {

void reduce(std::vector<Rational>& v, const IntPoly& m) {
  const std::size_t d = static_cast<std::size_t>(m.degree());
  for (std::size_t k = v.size(); k-- > d;) {
    if (v[k] == 0) continue;
    const Rational c = v[k];
    for (std::size_t i = 0; i < d; ++i)
      if (m[i] != 0) v[k - d + i] -= c * Rational(m[i]);
    v[k] = 0;
  }
  v.resize(d);
}

// Solves a x = b over Q by Gaussian elimination; a must be invertible.
std::vector<Rational> solve_rational(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv][k] == 0) ++piv;
    if (piv == n) throw std::domain_error("solve_rational: singular matrix");
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k] == 0) continue;
      Rational f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j)
        if (a[k][j] != 0) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j)
      if (a[k][j] != 0) b[k] -= a[k][j] * b[j];
    b[k] /= a[k][k];
  }
  return b;
}

}  // namespace

NumberFieldElement::NumberFieldElement(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  c_[0] = value;
}

NumberFieldElement::NumberFieldElement(FieldPtr field, std::vector<Rational> coeffs) : field_(std::move(field)) {
  reduce(coeffs, field_->modulus());
  c_ = std::move(coeffs);
  c_.resize(static_cast<std::size_t>(field_->degree()));
}

NumberFieldElement NumberFieldElement::generator(FieldPtr field) {
  std::vector<Rational> c(2);
  c[1] = 1;
  return NumberFieldElement(std::move(field), std::move(c));
}

bool NumberFieldElement::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r == 0; });
}

void NumberFieldElement::check(const NumberFieldElement& o) const {
  if (field_ != o.field_ && field_->modulus() != o.field_->modulus())
    throw std::invalid_argument("NumberFieldElement: elements of different fields");
}

NumberFieldElement NumberFieldElement::operator-() const {
  NumberFieldElement r(*this);
  for (auto& x : r.c_) x = -x;
  return r;
}

NumberFieldElement& NumberFieldElement::operator+=(const NumberFieldElement& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NumberFieldElement& NumberFieldElement::operator-=(const NumberFieldElement& o) {
  check(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NumberFieldElement operator*(const NumberFieldElement& a, const NumberFieldElement& b) {
  a.check(b);
  const std::size_t d = a.c_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
  }
  return NumberFieldElement(a.field_, std::move(prod));
}

bool operator==(const NumberFieldElement& a, const NumberFieldElement& b) {
  a.check(b);
  return a.c_ == b.c_;
}

RationalMatrix NumberFieldElement::multiplication_matrix() const {
  const std::size_t d = c_.size();
  RationalMatrix m(d, std::vector<Rational>(d));
  std::vector<Rational> col = c_;
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t i = 0; i < d; ++i) m[i][j] = col[i];
    col.insert(col.begin(), Rational(0));
    reduce(col, field_->modulus());
  }
  return m;
}

NumberFieldElement NumberFieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("NumberFieldElement: inverse of zero");
  std::vector<Rational> e(c_.size());
  e[0] = 1;
  return NumberFieldElement(field_, solve_rational(multiplication_matrix(), std::move(e)));
}

IntPoly NumberFieldElement::min_poly() const {
  RationalMatrix m = multiplication_matrix();
  // Scale to an integer matrix: charpoly(D M)(x) = D^d charpoly(M)(x / D).
  Integer D = 1;
  for (const auto& row : m)
    for (const auto& x : row) D = lcm(D, Integer(x.get_den()));
  for (auto& row : m)
    for (auto& x : row) x *= D;
  std::vector<Rational> p = char_poly_rational(m);
  std::vector<Integer> q(p.size());
  Integer Dk = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].get_den() != 1) throw std::logic_error("min_poly: non-integral characteristic polynomial");
    q[i] = p[i].get_num() * Dk;
    Dk *= D;
  }
  // q(x) = p(D x) = D^d charpoly(M)(x)
  IntPoly charp = IntPoly(std::move(q)).primitive_part();
  return square_free_part(charp).primitive_part();
}

BigFloat NumberFieldElement::evaluate(mpfr_prec_t bits) const {
  BigFloat r = field_->root(bits);
  BigFloat acc(bits);
  for (std::size_t i = c_.size(); i-- > 0;) {
    acc *= r;
    acc += BigFloat(c_[i], bits);
  }
  return acc;
}

}  // namespace vines
