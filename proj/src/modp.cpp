#include "vines/modp.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace vines::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 a, u64 e, u64 m) {
  u64 r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit values
  __int128 t = 0, nt = 1, r = m, nr = a % m;
  while (nr != 0) {
    __int128 q = r / nr;
    __int128 tmp = t - q * nt;
    t = nt;
    nt = tmp;
    tmp = r - q * nr;
    r = nr;
    nr = tmp;
  }
  if (r != 1) throw std::domain_error("inv_mod: not invertible");
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

u64 reduce(const Integer& v, u64 m) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), m);
  return r.get_ui();
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  static const u64 small[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : small) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : small) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<u64> primes_up_to(u64 bound) {
  std::vector<u64> out;
  if (bound < 2) return out;
  std::vector<bool> sieve(bound + 1, true);
  for (u64 i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (u64 j = i * i; j <= bound; j += i) sieve[j] = false;
  }
  return out;
}

std::vector<u64> prime_factors(u64 n) {
  std::vector<u64> out;
  for (u64 d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

RootOfUnityField root_of_unity_field(u64 m, u64 floor) {
  if (m == 0) throw std::invalid_argument("root_of_unity_field: order 0");
  std::vector<u64> primes = prime_factors(m);
  u64 k = floor / m + 1;
  for (;; ++k) {
    u128 q128 = static_cast<u128>(k) * m + 1;
    if (q128 >> 63) throw std::overflow_error("root_of_unity_field: order too large");
    u64 q = static_cast<u64>(q128);
    if (!is_prime(q)) continue;
    for (u64 g = 2; g < q; ++g) {
      u64 w = pow_mod(g, (q - 1) / m, q);
      bool ok = true;
      for (u64 r : primes) {
        if (pow_mod(w, m / r, q) == 1) {
          ok = false;
          break;
        }
      }
      if (ok) return {q, w, m};
    }
  }
}

bool discrete_log(u64 root, u64 target, u64 order, const std::vector<u64>& order_primes, u64 prime,
                  u64& exponent) {
  target %= prime;
  if (target == 0) return false;
  if (pow_mod(target, order, prime) != 1) return false;
  u64 x = 0;
  u64 modulus = 1;
  for (u64 q : order_primes) {
    u64 qe = 1;
    unsigned e = 0;
    u64 rest = order;
    while (rest % q == 0) {
      rest /= q;
      qe *= q;
      ++e;
    }
    if (e == 0) continue;
    // Work in the subgroup of order q^e.
    u64 g = pow_mod(root, order / qe, prime);
    u64 h = pow_mod(target, order / qe, prime);
    u64 gamma = pow_mod(g, qe / q, prime);
    u64 xq = 0;
    u64 qk = 1;
    std::unordered_map<u64, u64> table;
    {
      u64 cur = 1;
      for (u64 d = 0; d < q; ++d) {
        table.emplace(cur, d);
        cur = mul_mod(cur, gamma, prime);
      }
    }
    u64 ginv = inv_mod(g, prime);
    for (unsigned k = 0; k < e; ++k) {
      u64 hk = mul_mod(h, pow_mod(ginv, xq, prime), prime);
      hk = pow_mod(hk, qe / (qk * q), prime);
      auto it = table.find(hk);
      if (it == table.end()) return false;
      xq += it->second * qk;
      qk *= q;
    }
    // CRT: x = x mod modulus, x = xq mod qe
    u64 diff = (xq + qe - x % qe) % qe;
    u64 t = mul_mod(diff, inv_mod(modulus % qe, qe), qe);
    x += modulus * t;
    modulus *= qe;
  }
  if (modulus != order) throw std::invalid_argument("discrete_log: order_primes incomplete");
  if (pow_mod(root, x, prime) != target) return false;
  exponent = x;
  return true;
}

Poly from_int_poly(const IntPoly& f, u64 p) {
  Poly r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = reduce(f[i], p);
  trim(r);
  return r;
}

IntPoly to_int_poly(const Poly& f) {
  std::vector<Integer> c(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) c[i] = static_cast<unsigned long>(f[i]);
  return IntPoly(std::move(c));
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) {
    r[i] += b[i];
    if (r[i] >= p) r[i] -= p;
  }
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, u64 p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = (r[i] + p - b[i]) % p;
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 c, u64 p) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] * c % p;
  trim(r);
  return r;
}

void divrem(const Poly& a, const Poly& b, u64 p, Poly& q, Poly& r) {
  if (b.empty()) throw std::invalid_argument("modp::divrem by zero");
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(degree(r) - db + 1), 0);
  const u64 inv = inv_mod(b.back(), p);
  for (int k = degree(r); k >= db; --k) {
    u64 c = r[static_cast<std::size_t>(k)] * inv % p;
    if (c == 0) continue;
    const std::size_t off = static_cast<std::size_t>(k - db);
    q[off] = c;
    for (int j = 0; j <= db; ++j) {
      u64& slot = r[off + static_cast<std::size_t>(j)];
      slot = (slot + p - c * b[static_cast<std::size_t>(j)] % p) % p;
    }
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
}

Poly rem(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divrem(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, u64 p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, u64 p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly ext_gcd(const Poly& a, const Poly& b, u64 p, Poly& s, Poly& t) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divrem(r0, r1, p, q, r);
    Poly ns = sub(s0, mul(q, s1, p), p);
    Poly nt = sub(t0, mul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(ns);
    t0 = std::move(t1);
    t1 = std::move(nt);
  }
  if (r0.empty()) {
    s = s0;
    t = t0;
    return r0;
  }
  u64 inv = inv_mod(r0.back(), p);
  s = scale(s0, inv, p);
  t = scale(t0, inv, p);
  return scale(r0, inv, p);
}

Poly derivative(const Poly& a, u64 p) {
  if (a.size() <= 1) return {};
  Poly r(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) r[i - 1] = a[i] * (i % p) % p;
  trim(r);
  return r;
}

Poly mul_mod(const Poly& a, const Poly& b, const Poly& f, u64 p) { return rem(mul(a, b, p), f, p); }

Poly pow_mod(const Poly& base, u64 e, const Poly& f, u64 p) {
  Poly r = rem(Poly{1}, f, p);
  Poly b = rem(base, f, p);
  while (e) {
    if (e & 1) r = mul_mod(r, b, f, p);
    e >>= 1;
    if (e) b = mul_mod(b, b, f, p);
  }
  return r;
}

bool is_squarefree(const Poly& f, u64 p) {
  Poly d = derivative(f, p);
  if (d.empty()) return degree(f) <= 0;
  return degree(gcd(f, d, p)) == 0;
}

namespace {

// f = g(x^p) -> g
Poly pth_root(const Poly& f, u64 p) {
  Poly r;
  for (std::size_t i = 0; i < f.size(); i += p) r.push_back(f[i]);
  trim(r);
  return r;
}

Poly exact_quotient(const Poly& a, const Poly& b, u64 p) {
  Poly q, r;
  divrem(a, b, p, q, r);
  if (!r.empty()) throw std::logic_error("modp: inexact quotient");
  return q;
}

}  // namespace

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f_in, u64 p) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = monic(f_in, p);
  if (degree(f) <= 0) return out;
  Poly d = derivative(f, p);
  if (d.empty()) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(f, p), p)) {
      out.emplace_back(g, m * static_cast<unsigned>(p));
    }
    return out;
  }
  Poly c = gcd(f, d, p);
  Poly w = exact_quotient(f, c, p);
  unsigned i = 1;
  while (degree(w) > 0) {
    Poly y = gcd(w, c, p);
    Poly z = exact_quotient(w, y, p);
    if (degree(z) > 0) out.emplace_back(z, i);
    ++i;
    w = y;
    c = exact_quotient(c, y, p);
  }
  if (degree(c) > 0) {
    for (auto& [g, m] : squarefree_decomposition(pth_root(c, p), p)) {
      out.emplace_back(g, m * static_cast<unsigned>(p));
    }
  }
  return out;
}

namespace {

// Rows x^(i p) mod f for i < deg f.
std::vector<Poly> frobenius_rows(const Poly& f, u64 p) {
  const int d = degree(f);
  std::vector<Poly> rows(static_cast<std::size_t>(d));
  rows[0] = Poly{1};
  if (d == 1) return rows;
  Poly xp = pow_mod(Poly{0, 1}, p, f, p);
  for (int i = 1; i < d; ++i) rows[static_cast<std::size_t>(i)] = mul_mod(rows[static_cast<std::size_t>(i - 1)], xp, f, p);
  return rows;
}

Poly apply_frobenius(const Poly& h, const std::vector<Poly>& rows, u64 p) {
  Poly out(rows.size(), 0);
  for (std::size_t k = 0; k < h.size(); ++k) {
    if (h[k] == 0) continue;
    const Poly& row = rows[k];
    for (std::size_t i = 0; i < row.size(); ++i) out[i] = (out[i] + h[k] * row[i]) % p;
  }
  trim(out);
  return out;
}

}  // namespace

std::vector<std::pair<unsigned, Poly>> distinct_degree(const Poly& f_in, u64 p) {
  std::vector<std::pair<unsigned, Poly>> out;
  Poly f = monic(f_in, p);
  if (degree(f) <= 0) return out;
  std::vector<Poly> rows = frobenius_rows(f, p);
  Poly g = f;
  Poly h{0, 1};
  h = rem(h, f, p);
  const Poly x = rem(Poly{0, 1}, f, p);
  for (unsigned i = 1; degree(g) >= 2 * static_cast<int>(i); ++i) {
    h = apply_frobenius(h, rows, p);
    Poly u = gcd(g, sub(h, x, p), p);
    if (degree(u) > 0) {
      out.emplace_back(i, u);
      g = exact_quotient(g, u, p);
      h = rem(h, g, p);
    }
  }
  if (degree(g) > 0) out.emplace_back(static_cast<unsigned>(degree(g)), g);
  return out;
}

std::vector<unsigned> ddf_degrees(const Poly& f, u64 p) {
  std::vector<unsigned> out;
  for (const auto& [d, g] : distinct_degree(f, p)) {
    for (int k = 0; k < degree(g) / static_cast<int>(d); ++k) out.push_back(d);
  }
  return out;
}

std::vector<Poly> equal_degree_split(const Poly& f_in, unsigned d, u64 p, std::mt19937_64& rng) {
  if (p == 2) throw std::invalid_argument("equal_degree_split needs an odd prime");
  Poly f = monic(f_in, p);
  const int n = degree(f);
  if (n <= static_cast<int>(d)) return {f};
  std::uniform_int_distribution<u64> coeff(0, p - 1);
  // (p^d - 1) / 2 as a big exponent, applied by repeated powering.
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  while (true) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    Poly g = gcd(f, a, p);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree_split(g, d, p, rng);
      auto right = equal_degree_split(exact_quotient(f, g, p), d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    // a^e mod f with a multi-limb exponent
    Poly r{1};
    Poly b = rem(a, f, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = mul_mod(r, r, f, p);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = mul_mod(r, b, f, p);
    }
    g = gcd(f, sub(r, Poly{1}, p), p);
    if (degree(g) > 0 && degree(g) < n) {
      auto left = equal_degree_split(g, d, p, rng);
      auto right = equal_degree_split(exact_quotient(f, g, p), d, p, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<Poly> factor_squarefree(const Poly& f, u64 p, std::mt19937_64& rng) {
  std::vector<Poly> out;
  for (const auto& [d, g] : distinct_degree(f, p)) {
    auto parts = equal_degree_split(g, d, p, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  return out;
}

}  // namespace vines::modp
