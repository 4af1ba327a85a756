#include "vines/laurent_poly.hpp"

#include <sstream>
#include <stdexcept>

namespace vines {

LaurentPoly::LaurentPoly(long low, IntPoly body) : low_(low), body_(std::move(body)) {
  normalize();
}

LaurentPoly LaurentPoly::monomial(const Integer& c, long exponent) {
  return LaurentPoly(exponent, IntPoly::constant(c));
}

void LaurentPoly::normalize() {
  if (body_.is_zero()) {
    low_ = 0;
    return;
  }
  std::size_t v = body_.valuation();
  if (v > 0) {
    std::vector<Integer> c(body_.coeffs().begin() + static_cast<long>(v), body_.coeffs().end());
    body_ = IntPoly(std::move(c));
    low_ += static_cast<long>(v);
  }
}

Integer LaurentPoly::coeff(long exponent) const {
  if (body_.is_zero() || exponent < low_ || exponent > high()) return 0;
  return body_[static_cast<std::size_t>(exponent - low_)];
}

LaurentPoly LaurentPoly::reflected() const {
  if (is_zero()) return {};
  return LaurentPoly(-high(), body_.reversed());
}

LaurentPoly LaurentPoly::shifted(long k) const {
  if (is_zero()) return {};
  return LaurentPoly(low_ + k, body_);
}

LaurentPoly LaurentPoly::analytic_part() const {
  if (is_zero() || high() <= 0) return {};
  std::vector<Integer> c;
  long from = std::max(low_, 1L);
  for (long e = from; e <= high(); ++e) c.push_back(coeff(e));
  return LaurentPoly(from, IntPoly(std::move(c)));
}

LaurentPoly LaurentPoly::principal_part() const {
  if (is_zero() || low_ >= 0) return {};
  std::vector<Integer> c;
  long to = std::min(high(), -1L);
  for (long e = low_; e <= to; ++e) c.push_back(coeff(e));
  return LaurentPoly(low_, IntPoly(std::move(c)));
}

LaurentPoly LaurentPoly::operator-() const { return LaurentPoly(low_, -body_); }

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  long lo = std::min(a.low_, b.low_);
  IntPoly sa = a.body_.shifted(static_cast<std::size_t>(a.low_ - lo));
  IntPoly sb = b.body_.shifted(static_cast<std::size_t>(b.low_ - lo));
  return LaurentPoly(lo, sa + sb);
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  return LaurentPoly(a.low_ + b.low_, a.body_ * b.body_);
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (long e = high(); e >= low_; --e) {
    Integer c = coeff(e);
    if (c == 0) continue;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str() << "*";
    out << var;
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

LaurentPoly to_laurent_F(const IntPoly& p) {
  if (p.is_zero()) return {};
  // t^d p(t + 1/t) = sum c_i t^(d-i) (t^2 + 1)^i, Horner in (t^2 + 1).
  const int d = p.degree();
  IntPoly t2p1{1, 0, 1};
  IntPoly acc = IntPoly::constant(p[static_cast<std::size_t>(d)]);
  for (int i = d - 1; i >= 0; --i) {
    acc = acc * t2p1 + IntPoly::monomial(p[static_cast<std::size_t>(i)], static_cast<std::size_t>(d - i));
  }
  return LaurentPoly(-d, acc);
}

IntPoly from_laurent_F(const LaurentPoly& f) {
  if (f.is_zero()) return {};
  if (f.low() != -f.high()) throw ExactnessError("from_laurent_F: exponents not symmetric");
  const long d = f.high();
  // Peel leading terms: coefficient of t^k in the remainder is the x^k coefficient.
  std::vector<Integer> work(static_cast<std::size_t>(2 * d + 1));
  for (long e = -d; e <= d; ++e) work[static_cast<std::size_t>(e + d)] = f.coeff(e);
  std::vector<Integer> out(static_cast<std::size_t>(d + 1));
  Integer binom;
  for (long k = d; k >= 0; --k) {
    Integer c = work[static_cast<std::size_t>(k + d)];
    out[static_cast<std::size_t>(k)] = c;
    if (c == 0) continue;
    // subtract c (t + 1/t)^k = c sum_j binom(k, j) t^(k-2j)
    for (long j = 0; j <= k; ++j) {
      mpz_bin_uiui(binom.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(j));
      mpz_submul(work[static_cast<std::size_t>(k - 2 * j + d)].get_mpz_t(), c.get_mpz_t(), binom.get_mpz_t());
    }
  }
  for (const auto& v : work) {
    if (v != 0) throw ExactnessError("from_laurent_F: input is not palindromic");
  }
  return IntPoly(std::move(out));
}

std::size_t sign_changes(const LaurentPoly& a) {
  std::size_t changes = 0;
  int last = 0;
  for (long e = a.high(); e >= a.low() && !a.is_zero(); --e) {
    int s = sgn(a.coeff(e));
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Integer power_sum(const LaurentPoly& f, unsigned k) {
  if (f.is_zero()) throw std::invalid_argument("power_sum of the zero polynomial");
  const IntPoly& b = f.body();
  const int n = b.degree();
  // Descending coefficients a_0 = lc, a_i = coefficient of t^(n-i).
  auto a = [&](unsigned i) -> Rational {
    if (static_cast<int>(i) > n) return Rational(0);
    Rational r(b[static_cast<std::size_t>(n - static_cast<int>(i))], b.leading());
    r.canonicalize();
    return r;
  };
  std::vector<Rational> p(k + 1);
  for (unsigned m = 1; m <= k; ++m) {
    // p_m = -m a_m - sum_{i=1}^{m-1} a_i p_{m-i}   (monic-normalized)
    Rational s = -Rational(m) * a(m);
    for (unsigned i = 1; i < m; ++i) s -= a(i) * p[m - i];
    s.canonicalize();
    p[m] = s;
  }
  if (p[k].get_den() != 1) throw ExactnessError("power_sum: non-integral result");
  return p[k].get_num();
}

}  // namespace vines
