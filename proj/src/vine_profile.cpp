#include "vines/vine_profile.hpp"

#include "vines/cyclotomic.hpp"
#include "vines/factor.hpp"
#include "vines/modp.hpp"
#include "vines/roots.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace vines {

namespace {

const LaurentPoly& t_minus_inverse() {
  static const LaurentPoly v(-1, IntPoly{-1, 0, 1});
  return v;
}

LaurentPoly candidate(TranslateSequence& seq, long k) {
  LaurentPoly G = t_minus_inverse() * seq.F(k);
  return G.analytic_part().shifted(-k);
}

bool separation_identity(const LaurentPoly& A, TranslateSequence& seq, long n) {
  LaurentPoly lhs = A.shifted(n) - A.reflected().shifted(-n);
  return lhs == t_minus_inverse() * seq.F(n);
}

std::vector<std::uint64_t> divisors_of(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> fac;
  for (std::uint64_t p : modp::prime_factors(n)) {
    unsigned e = 0;
    std::uint64_t r = n;
    while (r % p == 0) {
      r /= p;
      ++e;
    }
    fac.emplace_back(p, e);
  }
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : fac) {
    const std::size_t before = out.size();
    std::uint64_t pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < before; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

IntPoly remainder_monic(const IntPoly& a, const IntPoly& m) {
  auto d = divide_over_z(a, m);
  if (!d) throw std::logic_error("remainder_monic: modulus not monic");
  return d->remainder;
}

}  // namespace

Separation compute_A_and_s(TranslateSequence& seq) {
  const long base = seq.base_size();
  const long limit = base + 10 * base + 20;
  LaurentPoly current = candidate(seq, base + 1);
  for (long k = base + 1; k <= limit; ++k) {
    LaurentPoly next = candidate(seq, k + 1);
    if (current == next && !current.is_zero() && separation_identity(current, seq, base + 1) &&
        separation_identity(current, seq, base + 2)) {
      Separation out;
      out.A = current;
      out.stable_index = k;
      out.s = 1 - current.low();
      return out;
    }
    current = std::move(next);
  }
  throw std::logic_error("compute_A_and_s: candidates did not stabilize");
}

SelfReciprocalSplit split_self_reciprocal(const LaurentPoly& A) {
  if (A.is_zero()) throw std::invalid_argument("split_self_reciprocal: A is zero");
  SelfReciprocalSplit out;
  out.shift = -A.low();
  IntPoly B{1};
  int epsilon = 1;
  for (const auto& [f, mult] : factor_over_z(A.body())) {
    IntPoly rev = f.reversed();
    int sign = 0;
    if (rev == f) {
      sign = 1;
    } else if (rev == -f) {
      sign = -1;
    }
    if (sign == 0) continue;
    for (unsigned k = 0; k < mult; ++k) {
      B = B * f;
      epsilon *= sign;
    }
  }
  out.B = B;
  out.C = exact_divide(A.body(), B);
  out.epsilon = epsilon;
  return out;
}

Integer compute_K(TranslateSequence& seq, long s) { return power_sum(seq.F(s + 1), 4); }

std::uint64_t compute_L(const IntPoly& C) {
  if (C.is_zero()) throw std::invalid_argument("compute_L: C is zero");
  std::uint64_t monomials = 0;
  for (const auto& c : C.coeffs())
    if (c != 0) ++monomials;
  std::uint64_t L = 1;
  for (std::uint64_t p : modp::primes_up_to(2 * monomials)) {
    if (L > UINT64_MAX / p) throw std::overflow_error("compute_L: product overflows");
    L *= p;
  }
  return L;
}

IntPoly H_poly(const SelfReciprocalSplit& split, long n) {
  const long b = std::max(split.B.degree(), 0);
  const long c = split.C.degree();
  const long beta = 2 * (n - split.shift) + b + c;
  if (beta < 0) throw std::invalid_argument("H_poly: negative exponent");
  IntPoly h = split.C.shifted(static_cast<std::size_t>(beta));
  IntPoly star = split.C.reversed();
  return split.epsilon == 1 ? h - star : h + star;
}

RootOrderSet compute_S_and_ell(const SelfReciprocalSplit& split) {
  RootOrderSet out;
  const std::uint64_t b = static_cast<std::uint64_t>(std::max(split.B.degree(), 0));
  const int cdeg = split.C.degree();
  if (cdeg < 1) throw UnsupportedVine("compute_S_and_ell: C is constant, the order set is unbounded");
  const std::uint64_t c = static_cast<std::uint64_t>(cdeg);
  out.L = compute_L(split.C);
  const std::uint64_t bound = 4 * out.L * c;

  std::set<std::uint64_t> candidates;
  for (std::uint64_t j = 1; j <= 4 * c; ++j)
    for (std::uint64_t d : divisors_of(2 * j * out.L))
      if (d >= 3 && d <= bound) candidates.insert(d);
  out.candidates = candidates.size();

  const IntPoly star = split.C.reversed();
  const std::int64_t shift = split.shift;
  for (std::uint64_t m : candidates) {
    const auto field = cached_root_of_unity_field(m);
    const std::uint64_t q = field.prime;
    const std::uint64_t cw = eval_mod_prime(split.C, field.root, q);
    if (cw == 0) continue;
    std::uint64_t csw = eval_mod_prime(star, field.root, q);
    if (split.epsilon == -1 && csw != 0) csw = q - csw;
    const std::uint64_t target = modp::mul_mod(csw, modp::inv_mod(cw, q), q);
    std::uint64_t e = 0;
    if (!modp::discrete_log(field.root, target, m, modp::prime_factors(m), q, e)) continue;
    // omega^beta = target with beta = 2(n - shift) + b + c, so 2n = e + 2 shift - b - c (mod m)
    const std::int64_t sm = static_cast<std::int64_t>(m);
    std::int64_t rhs = (static_cast<std::int64_t>(e) + 2 * shift - static_cast<std::int64_t>(b + c)) % sm;
    if (rhs < 0) rhs += sm;
    const std::uint64_t g = std::gcd<std::uint64_t>(2, m);
    if (static_cast<std::uint64_t>(rhs) % g != 0) continue;
    const std::uint64_t period = m / g;
    std::uint64_t residue;
    if (g == 2) {
      residue = (static_cast<std::uint64_t>(rhs) / 2) % period;
    } else {
      residue = static_cast<std::uint64_t>(rhs) * ((m + 1) / 2) % m;
    }
    // Exact confirmation at the smallest representative with beta >= 0.
    const std::int64_t per = static_cast<std::int64_t>(period);
    std::int64_t offset = (static_cast<std::int64_t>(residue) - shift) % per;
    if (offset < 0) offset += per;
    const std::int64_t n_rep = shift + offset;
    IntPoly phi = cyclotomic_poly(m);
    IntPoly H = H_poly(split, n_rep);
    if (!remainder_monic(H, phi).is_zero()) continue;
    RootOrder ro;
    ro.order = m;
    ro.period = period;
    ro.residue = static_cast<std::uint64_t>(n_rep) % period;
    ro.multiplicity = static_cast<unsigned>(factor_multiplicity(H, phi));
    out.orders.push_back(ro);
  }
  std::uint64_t ell = 1;
  for (const auto& ro : out.orders) {
    ell = std::lcm(ell, ro.period);
    if (ell > (std::uint64_t{1} << 40)) throw std::overflow_error("compute_S_and_ell: period too large");
  }
  out.ell = ell;
  return out;
}

RValues compute_r_values(const LaurentPoly& A, const SelfReciprocalSplit& split, const RootOrderSet& S) {
  RValues r;
  if (split.B.degree() >= 1) {
    CyclotomicSplit cs = strip_cyclotomic(split.B);
    r.r1 = conjugate_pair_count(cs.factors);
    if (cs.rest.degree() >= 1) {
      for (const auto& [f, mult] : factor_over_z(cs.rest)) {
        if (mult < 2) continue;
        const std::uint64_t per = f.degree() > 1 ? static_cast<std::uint64_t>(f.degree()) / 2 : 1;
        r.r2 += per * (mult - 1);
      }
    }
  }
  if (S.ell > 100000000ULL) throw std::overflow_error("compute_r_values: period window too large");
  for (std::uint64_t n = 0; n < S.ell; ++n) {
    std::uint64_t count = 0;
    for (const auto& ro : S.orders)
      if (n % ro.period == ro.residue) count += euler_phi(ro.order) / 2 * ro.multiplicity;
    r.r3 = std::max(r.r3, count);
  }
  r.r4 = 2 * sign_changes(A) + 1;
  return r;
}

bool is_salem_vine(const LaurentPoly& A) {
  if (A.is_zero() || A.high() != 1 || A.coeff(1) != 1) return false;
  for (long e = A.low(); e < 1; ++e)
    if (A.coeff(e) > 0) return false;
  return true;
}

GuardResult r3_guard(const LaurentPoly& A) {
  GuardResult g;
  const IntPoly body = A.body();
  auto iso = isolate_real_roots(body);
  Rational top(1);
  if (!iso.roots.empty()) {
    const IntPoly sqf = square_free_part(body);
    RootInterval iv = refine_root(sqf, iso.roots.back(), Rational(1, Integer("1000000000000000000000000000000")));
    if (iv.hi > top) top = iv.hi;
  }
  Rational x = top + 1 / top;
  Rational sq = x * x;
  g.passed = sq < 9;
  g.limit_norm_squared = sq.get_d();
  return g;
}

VineProfile analyze_vine(const Bigraph& g, const ProfileOptions& options) {
  if (translates_are_A_or_D(g)) throw UnsupportedVine("translates are Dynkin diagrams of type A or D");
  VineProfile p;
  p.label = g.label;
  p.graph = serialize_bigraph(g);
  p.size = static_cast<long>(g.vertex_count());
  TranslateSequence seq(g);
  Separation sep = compute_A_and_s(seq);
  p.A = sep.A;
  p.s = sep.s;
  p.split = split_self_reciprocal(p.A);
  if (!strip_cyclotomic(p.split.C).factors.empty())
    throw std::logic_error("analyze_vine: C has a root of unity among its roots");
  p.K = compute_K(seq, p.s);
  RootOrderSet S = compute_S_and_ell(p.split);
  p.L = S.L;
  p.S = S.orders;
  p.ell = S.ell;
  p.r = compute_r_values(p.A, p.split, S);
  p.salem = is_salem_vine(p.A);
  p.Rbound = p.salem ? p.r.r1 + p.r.r3 : p.r.r1 + p.r.r2 + p.r.r3 + p.r.r4;
  p.N = 4 * p.K + 9 * Integer(static_cast<unsigned long>(p.Rbound));
  p.guard = r3_guard(p.A);
  if (!p.salem) {
    long n = options.derivative_n;
    BoundCertificate cert = derivative_bound_holds(p.split.B, p.split.C, p.s, n);
    const long cap = std::min<long>(options.derivative_escalation_cap,
                                    p.N.fits_slong_p() ? p.N.get_si() : options.derivative_escalation_cap);
    while (cert.status != BoundStatus::Holds && n < cap) {
      ++n;
      cert = derivative_bound_holds(p.split.B, p.split.C, p.s, n);
    }
    p.dCertificate = cert;
    if (cert.status == BoundStatus::Holds) {
      p.dBound = n;
      if (options.scan_minimal_d) {
        long m = minimal_certified_n(p.split.B, p.split.C, p.s, p.s + 1, n);
        if (m >= 0) p.dMinimal = m;
      }
    }
  }
  return p;
}

}  // namespace vines
