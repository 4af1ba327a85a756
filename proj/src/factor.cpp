#include "vines/factor.hpp"

#include "vines/modp.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>

namespace vines {

DegreeSetTracker::DegreeSetTracker(unsigned degree) : degree_(degree), possible_(degree + 1, 1) {}

void DegreeSetTracker::add_pattern(const std::vector<unsigned>& degrees) {
  std::vector<char> sums(degree_ + 1, 0);
  sums[0] = 1;
  for (unsigned d : degrees) {
    for (unsigned s = degree_; s >= d && d > 0; --s) {
      if (sums[s - d]) sums[s] = 1;
    }
  }
  for (unsigned s = 0; s <= degree_; ++s) possible_[s] = static_cast<char>(possible_[s] && sums[s]);
  ++patterns_;
}

bool DegreeSetTracker::certified_irreducible() const {
  if (patterns_ == 0) return degree_ <= 1;
  for (unsigned s = 1; s < degree_; ++s) {
    if (possible_[s]) return false;
  }
  return true;
}

bool DegreeSetTracker::allows(unsigned partial_degree) const {
  return partial_degree <= degree_ && possible_[partial_degree];
}

std::vector<unsigned> factor_degrees_mod_p(const IntPoly& f, std::uint64_t q) {
  if (f.is_zero()) throw std::invalid_argument("factor_degrees_mod_p: zero polynomial");
  if (modp::reduce(f.leading(), q) == 0) {
    throw std::invalid_argument("factor_degrees_mod_p: prime divides the leading coefficient");
  }
  modp::Poly fp = modp::monic(modp::from_int_poly(f, q), q);
  std::vector<unsigned> out;
  for (const auto& [g, mult] : modp::squarefree_decomposition(fp, q)) {
    for (unsigned d : modp::ddf_degrees(g, q)) {
      for (unsigned k = 0; k < mult; ++k) out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

IntPoly reduce_mod(const IntPoly& a, const Integer& m) {
  std::vector<Integer> c(a.coeffs());
  for (auto& v : c) mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
  return IntPoly(std::move(c));
}

IntPoly symmetric_mod(const IntPoly& a, const Integer& m) {
  Integer half = m / 2;
  std::vector<Integer> c(a.coeffs());
  for (auto& v : c) {
    mpz_fdiv_r(v.get_mpz_t(), v.get_mpz_t(), m.get_mpz_t());
    if (v > half) v -= m;
  }
  return IntPoly(std::move(c));
}

// Division by a polynomial that is monic modulo m.
void divrem_monic(const IntPoly& a, const IntPoly& h, const Integer& m, IntPoly& q, IntPoly& r) {
  std::vector<Integer> rem(a.coeffs());
  const int dh = h.degree();
  const int da = a.degree();
  if (da < dh) {
    q = IntPoly();
    r = reduce_mod(a, m);
    return;
  }
  std::vector<Integer> quot(static_cast<std::size_t>(da - dh + 1));
  for (int k = da; k >= dh; --k) {
    Integer c = rem[static_cast<std::size_t>(k)];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    const std::size_t off = static_cast<std::size_t>(k - dh);
    quot[off] = c;
    for (int j = 0; j <= dh; ++j) {
      mpz_submul(rem[off + static_cast<std::size_t>(j)].get_mpz_t(), c.get_mpz_t(),
                 h[static_cast<std::size_t>(j)].get_mpz_t());
    }
  }
  rem.resize(static_cast<std::size_t>(dh));
  q = reduce_mod(IntPoly(std::move(quot)), m);
  r = reduce_mod(IntPoly(std::move(rem)), m);
}

struct Lift {
  IntPoly g, h, s, t;
};

// One quadratic Hensel step: f = g h, s g + t h = 1 mod m  ->  mod m^2.
Lift hensel_step(const IntPoly& f, const Lift& in, const Integer& m) {
  const Integer m2 = m * m;
  IntPoly e = reduce_mod(f - in.g * in.h, m2);
  IntPoly q, r;
  divrem_monic(reduce_mod(in.s * e, m2), in.h, m2, q, r);
  Lift out;
  out.g = reduce_mod(in.g + in.t * e + q * in.g, m2);
  out.h = reduce_mod(in.h + r, m2);
  IntPoly b = reduce_mod(in.s * out.g + in.t * out.h - IntPoly{1}, m2);
  IntPoly c, d;
  divrem_monic(reduce_mod(in.s * b, m2), out.h, m2, c, d);
  out.s = reduce_mod(in.s - d, m2);
  out.t = reduce_mod(in.t - in.t * b - c * out.g, m2);
  return out;
}

modp::Poly product_mod(const std::vector<modp::Poly>& fs, std::size_t from, std::size_t to, std::uint64_t p) {
  modp::Poly r{1};
  for (std::size_t i = from; i < to; ++i) r = modp::mul(r, fs[i], p);
  return r;
}

// Lifts f = lc * prod factors (mod p) to monic factors mod P = p^k.
void lift_tree(const IntPoly& f, const std::vector<modp::Poly>& factors, std::uint64_t p, const Integer& P,
               std::vector<IntPoly>& out) {
  if (factors.size() == 1) {
    Integer inv;
    if (!mpz_invert(inv.get_mpz_t(), f.leading().get_mpz_t(), P.get_mpz_t())) {
      throw std::logic_error("lift_tree: leading coefficient not invertible");
    }
    out.push_back(reduce_mod(f * inv, P));
    return;
  }
  const std::size_t half = factors.size() / 2;
  std::uint64_t lc = modp::reduce(f.leading(), p);
  modp::Poly g0 = modp::scale(product_mod(factors, 0, half, p), lc, p);
  modp::Poly h0 = product_mod(factors, half, factors.size(), p);
  modp::Poly s0, t0;
  modp::Poly one = modp::ext_gcd(g0, h0, p, s0, t0);
  if (modp::degree(one) != 0) throw std::logic_error("lift_tree: factors not coprime");
  Lift cur{modp::to_int_poly(g0), modp::to_int_poly(h0), modp::to_int_poly(s0), modp::to_int_poly(t0)};
  Integer m = p;
  while (m < P) {
    cur = hensel_step(f, cur, m);
    m *= m;
  }
  IntPoly g = reduce_mod(cur.g, P);
  IntPoly h = reduce_mod(cur.h, P);
  std::vector<modp::Poly> left(factors.begin(), factors.begin() + static_cast<long>(half));
  std::vector<modp::Poly> right(factors.begin() + static_cast<long>(half), factors.end());
  lift_tree(g, left, p, P, out);
  lift_tree(h, right, p, P, out);
}

Integer coefficient_bound(const IntPoly& f) {
  // |lc| * 2^n * ||f||_2 bounds lc times any factor's coefficients.
  Integer norm2 = 0;
  for (const auto& c : f.coeffs()) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer pow2;
  mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(f.degree()));
  return abs(f.leading()) * pow2 * root;
}

bool next_combination(std::vector<std::size_t>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<IntPoly> zassenhaus(const IntPoly& f) {
  const unsigned n = static_cast<unsigned>(f.degree());
  DegreeSetTracker tracker(n);
  std::uint64_t best_p = 0;
  std::size_t best_count = 0;
  std::size_t good = 0;
  std::uint64_t p = 3;
  for (; good < 8 && p < (1ULL << 31); p += 2) {
    if (!modp::is_prime(p)) continue;
    if (modp::reduce(f.leading(), p) == 0) continue;
    modp::Poly fp = modp::monic(modp::from_int_poly(f, p), p);
    if (modp::degree(fp) != static_cast<int>(n) || !modp::is_squarefree(fp, p)) continue;
    std::vector<unsigned> degs = modp::ddf_degrees(fp, p);
    tracker.add_pattern(degs);
    ++good;
    if (tracker.certified_irreducible()) return {f};
    if (best_p == 0 || degs.size() < best_count) {
      best_p = p;
      best_count = degs.size();
    }
  }
  if (best_p == 0) throw std::logic_error("zassenhaus: no usable prime");
  p = best_p;
  std::mt19937_64 rng(0x5eedULL + p);
  modp::Poly fp = modp::monic(modp::from_int_poly(f, p), p);
  std::vector<modp::Poly> local = modp::factor_squarefree(fp, p, rng);
  if (local.size() == 1) return {f};

  Integer bound = 2 * coefficient_bound(f) + 1;
  Integer P = p;
  while (P < bound) P *= p;
  std::vector<IntPoly> lifted;
  lift_tree(reduce_mod(f, P), local, p, P, lifted);

  std::vector<IntPoly> result;
  IntPoly F = f;
  std::vector<IntPoly> pool = lifted;
  std::size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    std::iota(idx.begin(), idx.end(), 0);
    do {
      unsigned deg = 0;
      for (std::size_t i : idx) deg += static_cast<unsigned>(pool[i].degree());
      if (!tracker.allows(deg)) continue;
      Integer lcF = F.leading();
      // cheap constant-term screen before forming the product
      if (F[0] != 0) {
        Integer c0 = lcF;
        for (std::size_t i : idx) {
          c0 *= pool[i][0];
          mpz_fdiv_r(c0.get_mpz_t(), c0.get_mpz_t(), P.get_mpz_t());
        }
        if (c0 > P / 2) c0 -= P;
        if (c0 == 0) continue;
        Integer target = lcF * F[0];
        if (!mpz_divisible_p(target.get_mpz_t(), c0.get_mpz_t())) continue;
      }
      IntPoly cand = IntPoly::constant(lcF);
      for (std::size_t i : idx) cand = reduce_mod(cand * pool[i], P);
      cand = symmetric_mod(cand, P).primitive_part();
      auto q = try_exact_divide(F, cand);
      if (!q) continue;
      result.push_back(cand);
      F = q->primitive_part();
      std::vector<IntPoly> rest;
      for (std::size_t i = 0; i < pool.size(); ++i) {
        if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(pool[i]);
      }
      pool = std::move(rest);
      found = true;
      break;
    } while (next_combination(idx, pool.size()));
    if (!found) ++s;
  }
  if (F.degree() > 0) result.push_back(F.primitive_part());
  return result;
}

}  // namespace

std::vector<IntPoly> factor_squarefree_over_z(const IntPoly& f_in) {
  IntPoly f = f_in.primitive_part();
  if (f.degree() <= 1) return {f};
  std::vector<IntPoly> out;
  if (f[0] == 0) {
    out.push_back(IntPoly::x());
    f = exact_divide(f, IntPoly::x());
    if (f.degree() == 0) return out;
  }
  if (f.degree() == 1) {
    out.push_back(f);
  } else {
    auto parts = zassenhaus(f);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const IntPoly& a, const IntPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a.to_string() < b.to_string();
  });
  return out;
}

std::vector<std::pair<IntPoly, unsigned>> factor_over_z(const IntPoly& f) {
  std::vector<std::pair<IntPoly, unsigned>> out;
  if (f.degree() <= 0) return out;
  auto sqf = square_free_decomposition(f);
  for (std::size_t i = 0; i < sqf.size(); ++i) {
    if (sqf[i].degree() <= 0) continue;
    for (auto& g : factor_squarefree_over_z(sqf[i])) out.emplace_back(g, static_cast<unsigned>(i + 1));
  }
  return out;
}

}  // namespace vines
