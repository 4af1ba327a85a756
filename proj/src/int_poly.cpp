#include "vines/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

namespace vines {

namespace {
const Integer kZero = 0;
}

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const Integer& c) { return IntPoly(std::vector<Integer>{c}); }

IntPoly IntPoly::monomial(const Integer& c, std::size_t k) {
  std::vector<Integer> v(k + 1);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

const Integer& IntPoly::operator[](std::size_t i) const {
  return i < coeffs_.size() ? coeffs_[i] : kZero;
}

const Integer& IntPoly::leading() const { return coeffs_.empty() ? kZero : coeffs_.back(); }

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  normalize();
  return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Integer> r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      mpz_addmul(r[i + j].get_mpz_t(), a.coeffs_[i].get_mpz_t(), b.coeffs_[j].get_mpz_t());
    }
  }
  return IntPoly(std::move(r));
}

IntPoly& IntPoly::operator*=(const IntPoly& o) {
  *this = *this * o;
  return *this;
}

IntPoly& IntPoly::operator*=(const Integer& c) {
  if (c == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& v : coeffs_) v *= c;
  return *this;
}

IntPoly IntPoly::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> r(k);
  r.insert(r.end(), coeffs_.begin(), coeffs_.end());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Integer> r(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(r));
}

IntPoly IntPoly::negated_argument() const {
  IntPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

IntPoly IntPoly::reversed() const {
  std::vector<Integer> r(coeffs_.rbegin(), coeffs_.rend());
  return IntPoly(std::move(r));
}

IntPoly IntPoly::inflated(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<Integer> r((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r[i * k] = coeffs_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::taylor_shift(const Integer& c) const {
  std::vector<Integer> a = coeffs_;
  const std::size_t n = a.size();
  if (n == 0 || c == 0) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    for (std::size_t j = n - 1; j > i; --j) {
      mpz_addmul(a[j - 1].get_mpz_t(), a[j].get_mpz_t(), c.get_mpz_t());
    }
  }
  return IntPoly(std::move(a));
}

Integer IntPoly::content() const {
  Integer g = 0;
  for (const auto& c : coeffs_) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return {};
  Integer g = content();
  if (leading() < 0) g = -g;
  IntPoly r = *this;
  if (g != 1) {
    for (auto& c : r.coeffs_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  }
  return r;
}

std::size_t IntPoly::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0) return i;
  }
  return 0;
}

Integer IntPoly::eval(const Integer& v) const {
  Integer r = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * v + *it;
  return r;
}

Rational IntPoly::eval(const Rational& v) const {
  // Homogenized Horner keeps everything in Z until the final division.
  const Integer& num = v.get_num();
  const Integer& den = v.get_den();
  Integer acc = 0;
  Integer den_pow = 1;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * num + *it * den_pow;
    den_pow *= den;
  }
  if (coeffs_.empty()) return 0;
  Integer total_den = 1;
  mpz_pow_ui(total_den.get_mpz_t(), den.get_mpz_t(), coeffs_.size() - 1);
  Rational r(acc, total_den);
  r.canonicalize();
  return r;
}

int IntPoly::sign_at(const Rational& v) const {
  Rational r = eval(v);
  return sgn(r);
}

std::string IntPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Integer& c = coeffs_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (i > 1) out << "^" << i;
  }
  return out.str();
}

std::optional<DivisionResult> divide_over_z(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const int da = a.degree();
  if (da < db) return DivisionResult{IntPoly(), a};
  std::vector<Integer> quot(static_cast<std::size_t>(da - db + 1));
  const Integer& lb = b.leading();
  const bool unit = (lb == 1 || lb == -1);
  for (int k = da; k >= db; --k) {
    Integer& top = rem[static_cast<std::size_t>(k)];
    if (top == 0) continue;
    Integer q;
    if (unit) {
      q = (lb == 1) ? top : Integer(-top);
    } else {
      if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
      mpz_divexact(q.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    }
    const std::size_t off = static_cast<std::size_t>(k - db);
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[off + static_cast<std::size_t>(j)].get_mpz_t(), q.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    quot[off] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return DivisionResult{IntPoly(std::move(quot)), IntPoly(std::move(rem))};
}

std::optional<IntPoly> try_exact_divide(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return IntPoly();
  if (b.degree() > a.degree()) return std::nullopt;
  auto res = divide_over_z(a, b);
  if (!res || !res->remainder.is_zero()) return std::nullopt;
  return std::move(res->quotient);
}

IntPoly exact_divide(const IntPoly& a, const IntPoly& b) {
  auto q = try_exact_divide(a, b);
  if (!q) {
    throw ExactnessError("exact_divide: " + b.to_string() + " does not divide " + a.to_string());
  }
  return std::move(*q);
}

IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo_remainder by zero");
  if (a.degree() < b.degree()) return a;
  std::vector<Integer> rem = a.coeffs();
  const int db = b.degree();
  const Integer& lb = b.leading();
  int da = a.degree();
  int steps = da - db + 1;
  while (da >= db) {
    Integer top = rem[static_cast<std::size_t>(da)];
    for (auto& c : rem) c *= lb;
    const std::size_t off = static_cast<std::size_t>(da - db);
    for (int j = 0; j <= db; ++j) {
      mpz_submul(rem[off + static_cast<std::size_t>(j)].get_mpz_t(), top.get_mpz_t(),
                 b.coeffs()[static_cast<std::size_t>(j)].get_mpz_t());
    }
    --steps;
    --da;
    while (da >= 0 && rem[static_cast<std::size_t>(da)] == 0) --da;
  }
  IntPoly r(std::move(rem));
  if (steps > 0) {
    Integer f;
    mpz_pow_ui(f.get_mpz_t(), lb.get_mpz_t(), static_cast<unsigned long>(steps));
    r *= f;
  }
  return r;
}

IntPoly gcd(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero()) return b.primitive_part();
  if (b.is_zero()) return a.primitive_part();
  IntPoly u = a.primitive_part();
  IntPoly v = b.primitive_part();
  if (u.degree() < v.degree()) std::swap(u, v);
  while (!v.is_zero()) {
    IntPoly r = pseudo_remainder(u, v);
    u = std::move(v);
    v = r.primitive_part();
  }
  return u.primitive_part();
}

IntPoly square_free_part(const IntPoly& p) {
  if (p.degree() <= 0) return p.primitive_part();
  IntPoly g = gcd(p, p.derivative());
  return exact_divide(p.primitive_part(), g).primitive_part();
}

std::vector<IntPoly> square_free_decomposition(const IntPoly& p) {
  std::vector<IntPoly> out;
  if (p.degree() <= 0) return out;
  // Yun; every division is by a primitive divisor, hence exact over Z.
  IntPoly f = p.primitive_part();
  IntPoly a = gcd(f, f.derivative());
  IntPoly b = exact_divide(f, a);
  IntPoly c = exact_divide(f.derivative(), a);
  IntPoly d = c - b.derivative();
  while (b.degree() > 0) {
    IntPoly g = gcd(b, d);
    out.push_back(g);
    b = exact_divide(b, g);
    c = exact_divide(d, g);
    d = c - b.derivative();
  }
  while (!out.empty() && out.back().degree() == 0) out.pop_back();
  return out;
}

Integer resultant(const IntPoly& a_in, const IntPoly& b_in) {
  if (a_in.is_zero() || b_in.is_zero()) return 0;
  IntPoly a = a_in;
  IntPoly b = b_in;
  int sign = 1;
  if (a.degree() < b.degree()) {
    if ((a.degree() % 2 == 1) && (b.degree() % 2 == 1)) sign = -sign;
    std::swap(a, b);
  }
  if (b.degree() == 0) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(a.degree()));
    return sign * r;
  }
  // Subresultant PRS (Collins / Brown).
  Integer g = 1;
  Integer h = 1;
  Integer res_sign = sign;
  while (true) {
    const int da = a.degree();
    const int db = b.degree();
    const int delta = da - db;
    if ((da % 2 == 1) && (db % 2 == 1)) res_sign = -res_sign;
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) return 0;
    Integer hd;
    mpz_pow_ui(hd.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta));
    Integer divisor = g * hd;
    std::vector<Integer> rc = r.coeffs();
    for (auto& c : rc) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), divisor.get_mpz_t());
    a = std::move(b);
    b = IntPoly(std::move(rc));
    g = a.leading();
    // h = g^delta / h^(delta-1)
    Integer gd;
    mpz_pow_ui(gd.get_mpz_t(), g.get_mpz_t(), static_cast<unsigned long>(delta));
    if (delta == 0) {
      // h unchanged
    } else {
      Integer hd1;
      mpz_pow_ui(hd1.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(delta - 1));
      mpz_divexact(h.get_mpz_t(), gd.get_mpz_t(), hd1.get_mpz_t());
    }
    if (b.degree() == 0) {
      const int dbb = a.degree();
      Integer lb_pow;
      mpz_pow_ui(lb_pow.get_mpz_t(), b.leading().get_mpz_t(), static_cast<unsigned long>(dbb));
      Integer h_pow;
      if (dbb >= 1) {
        mpz_pow_ui(h_pow.get_mpz_t(), h.get_mpz_t(), static_cast<unsigned long>(dbb - 1));
      } else {
        h_pow = 1;
      }
      Integer out;
      mpz_divexact(out.get_mpz_t(), lb_pow.get_mpz_t(), h_pow.get_mpz_t());
      return res_sign * out;
    }
  }
}

Integer discriminant(const IntPoly& p) {
  const int n = p.degree();
  if (n < 1) throw std::invalid_argument("discriminant needs degree >= 1");
  if (n == 1) return 1;
  Integer r = resultant(p, p.derivative());
  Integer out;
  mpz_divexact(out.get_mpz_t(), r.get_mpz_t(), p.leading().get_mpz_t());
  if (((n * (n - 1)) / 2) % 2 == 1) out = -out;
  return out;
}

std::size_t factor_multiplicity(const IntPoly& p, const IntPoly& q) {
  if (q.degree() < 1) throw std::invalid_argument("factor_multiplicity needs deg q >= 1");
  std::size_t k = 0;
  IntPoly cur = p;
  while (!cur.is_zero()) {
    auto d = try_exact_divide(cur, q);
    if (!d) break;
    cur = std::move(*d);
    ++k;
  }
  return k;
}

RatPoly::RatPoly(IntPoly num, Integer den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("RatPoly with zero denominator");
  normalize();
}

RatPoly::RatPoly(const std::vector<Rational>& coeffs) : den_(1) {
  for (const auto& c : coeffs) {
    mpz_lcm(den_.get_mpz_t(), den_.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<Integer> num(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    Integer scale;
    mpz_divexact(scale.get_mpz_t(), den_.get_mpz_t(), coeffs[i].get_den_mpz_t());
    num[i] = coeffs[i].get_num() * scale;
  }
  num_ = IntPoly(std::move(num));
  normalize();
}

void RatPoly::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    num_ = -num_;
  }
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  Integer g = num_.content();
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), den_.get_mpz_t());
  if (g != 1) {
    std::vector<Integer> c = num_.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    num_ = IntPoly(std::move(c));
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

Rational RatPoly::coeff(std::size_t i) const {
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> RatPoly::rational_coeffs() const {
  std::vector<Rational> out(num_.size());
  for (std::size_t i = 0; i < num_.size(); ++i) out[i] = coeff(i);
  return out;
}

}  // namespace vines
