#include "vines/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace vines {

namespace {

IntPoly divide_by_positive_content(const IntPoly& p) {
  Integer c = p.content();
  if (c <= 1) return p;
  std::vector<Integer> v(p.coeffs());
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
  return IntPoly(std::move(v));
}

std::size_t variations(const std::vector<IntPoly>& seq, const Rational& x) {
  std::size_t count = 0;
  int last = 0;
  for (const auto& s : seq) {
    int v = s.sign_at(x);
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Sign of p at a point, with exact rationals.
int sign(const IntPoly& p, const Rational& x) { return p.sign_at(x); }

}  // namespace

std::vector<IntPoly> sturm_sequence(const IntPoly& p) {
  std::vector<IntPoly> seq;
  if (p.is_zero()) return seq;
  seq.push_back(divide_by_positive_content(p));
  if (p.degree() == 0) return seq;
  seq.push_back(divide_by_positive_content(p.derivative()));
  while (seq.back().degree() > 0) {
    const IntPoly& a = seq[seq.size() - 2];
    const IntPoly& b = seq.back();
    IntPoly r = pseudo_remainder(a, b);
    if (r.is_zero()) break;
    // prem = lc(b)^(da-db+1) rem; the Sturm step needs -rem up to a positive factor.
    const int e = a.degree() - b.degree() + 1;
    bool negative_factor = (b.leading() < 0) && (e % 2 == 1);
    IntPoly next = negative_factor ? r : -r;
    seq.push_back(divide_by_positive_content(next));
  }
  return seq;
}

std::size_t sturm_count(const std::vector<IntPoly>& seq, const Rational& a, const Rational& b) {
  std::size_t va = variations(seq, a);
  std::size_t vb = variations(seq, b);
  return va >= vb ? va - vb : 0;
}

Integer root_bound(const IntPoly& p) {
  if (p.degree() < 1) return 1;
  // Cauchy: 1 + max |a_i / a_n|
  Integer best = 0;
  const Integer lc = abs(p.leading());
  for (int i = 0; i < p.degree(); ++i) {
    Integer q = abs(p[static_cast<std::size_t>(i)]);
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_mpz_t(), lc.get_mpz_t());
    if (c > best) best = c;
  }
  return best + 2;
}

RootIsolation isolate_real_roots(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("isolate_real_roots: zero polynomial");
  RootIsolation out;
  out.poly = p;
  if (p.degree() < 1) return out;
  const IntPoly sqf = square_free_part(p);
  const auto seq = sturm_sequence(sqf);
  const Integer M = root_bound(sqf);
  struct Task {
    Rational lo, hi;
  };
  std::vector<Task> stack{{Rational(-M), Rational(M)}};
  std::vector<RootInterval> found;
  while (!stack.empty()) {
    Task t = stack.back();
    stack.pop_back();
    std::size_t c = sturm_count(seq, t.lo, t.hi);
    if (c == 0) continue;
    if (c == 1 && sign(sqf, t.hi) != 0) {
      found.push_back({t.lo, t.hi, 1});
      continue;
    }
    Rational mid = (t.lo + t.hi) / 2;
    if (sign(sqf, mid) == 0) {
      found.push_back({mid, mid, 1});
      // roots strictly on either side
      Rational eps = (t.hi - t.lo) / 1024;
      while (sturm_count(seq, mid - eps, mid + eps) > 1 || sign(sqf, mid - eps) == 0 || sign(sqf, mid + eps) == 0) {
        eps /= 2;
      }
      stack.push_back({t.lo, mid - eps});
      stack.push_back({mid + eps, t.hi});
      continue;
    }
    stack.push_back({t.lo, mid});
    stack.push_back({mid, t.hi});
  }
  std::sort(found.begin(), found.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  // Multiplicities from the square-free decomposition.
  const auto parts = square_free_decomposition(p);
  for (auto& iv : found) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const IntPoly& g = parts[i];
      if (g.degree() < 1) continue;
      bool hit;
      if (iv.lo == iv.hi) {
        hit = sign(g, iv.lo) == 0;
      } else {
        int a = sign(g, iv.lo);
        int b = sign(g, iv.hi);
        hit = (a != b) || a == 0 || b == 0;
      }
      if (hit) {
        iv.multiplicity = static_cast<unsigned>(i + 1);
        break;
      }
    }
  }
  out.roots = std::move(found);
  return out;
}

RootInterval refine_root(const IntPoly& sqf, RootInterval iv, const Rational& width) {
  if (iv.lo == iv.hi) return iv;
  int slo = sign(sqf, iv.lo);
  while (iv.hi - iv.lo > width) {
    Rational mid = (iv.lo + iv.hi) / 2;
    int sm = sign(sqf, mid);
    if (sm == 0) {
      iv.lo = iv.hi = mid;
      return iv;
    }
    if (sm == slo) {
      iv.lo = mid;
    } else {
      iv.hi = mid;
    }
  }
  return iv;
}

BigFloat root_value(const IntPoly& sqf, const RootInterval& iv, mpfr_prec_t bits) {
  Rational width(1);
  mpq_div_2exp(width.get_mpq_t(), width.get_mpq_t(), static_cast<mp_bitcnt_t>(bits + 4));
  RootInterval r = refine_root(sqf, iv, width);
  return BigFloat(Rational((r.lo + r.hi) / 2), bits);
}

}  // namespace vines
