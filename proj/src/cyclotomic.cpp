#include "vines/cyclotomic.hpp"

#include "vines/modp.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace vines {

std::uint64_t euler_phi(std::uint64_t m) {
  if (m == 0) return 0;
  std::uint64_t r = m;
  for (std::uint64_t q : modp::prime_factors(m)) r = r / q * (q - 1);
  return r;
}

namespace {

int mobius(std::uint64_t n) {
  int mu = 1;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// Coefficients stay tiny for the orders used here, but exactness is kept by
// working in Z throughout.
std::vector<Integer> mul_binomial(const std::vector<Integer>& a, std::uint64_t d) {
  // a * (x^d - 1)
  std::vector<Integer> r(a.size() + d);
  for (std::size_t i = 0; i < a.size(); ++i) {
    r[i + d] += a[i];
    r[i] -= a[i];
  }
  return r;
}

std::vector<Integer> div_binomial(const std::vector<Integer>& a, std::uint64_t d) {
  // a / (x^d - 1), exact
  if (a.size() <= d) throw std::logic_error("cyclotomic_poly: bad division");
  const std::size_t n = a.size() - d;
  std::vector<Integer> q(n);
  std::vector<Integer> rem = a;
  for (std::size_t k = a.size(); k-- > d;) {
    Integer c = rem[k];
    q[k - d] = c;
    rem[k] -= c;
    rem[k - d] += c;
  }
  for (std::size_t k = 0; k < d; ++k) {
    if (rem[k] != 0) throw std::logic_error("cyclotomic_poly: inexact division");
  }
  return q;
}

std::mutex field_mutex;
std::map<std::uint64_t, modp::RootOfUnityField>& field_cache() {
  static std::map<std::uint64_t, modp::RootOfUnityField> cache;
  return cache;
}

}  // namespace

modp::RootOfUnityField cached_root_of_unity_field(std::uint64_t m) {
  std::lock_guard<std::mutex> lock(field_mutex);
  auto& cache = field_cache();
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  auto f = modp::root_of_unity_field(m);
  cache.emplace(m, f);
  return f;
}

std::uint64_t eval_mod_prime(const IntPoly& f, std::uint64_t x, std::uint64_t q) {
  std::uint64_t r = 0;
  for (std::size_t i = f.size(); i-- > 0;) {
    r = modp::mul_mod(r, x, q) + modp::reduce(f[i], q);
    if (r >= q) r -= q;
  }
  return r;
}


IntPoly cyclotomic_poly(std::uint64_t k) {
  if (k == 0) throw std::invalid_argument("cyclotomic_poly: k must be positive");
  std::vector<std::uint64_t> up, down;
  for (std::uint64_t d = 1; d * d <= k; ++d) {
    if (k % d) continue;
    for (std::uint64_t e : {d, k / d}) {
      int mu = mobius(k / e);
      if (mu == 1) up.push_back(e);
      if (mu == -1) down.push_back(e);
      if (d * d == k) break;
    }
  }
  std::vector<Integer> acc{1};
  for (auto d : up) acc = mul_binomial(acc, d);
  for (auto d : down) acc = div_binomial(acc, d);
  return IntPoly(std::move(acc));
}

std::vector<std::uint64_t> cyclotomic_orders_up_to_degree(unsigned degree) {
  std::vector<std::uint64_t> out;
  if (degree == 0) return out;
  // phi(m) / m > 1/7 for every m below 10^9, so phi(m) <= degree forces
  // m < 7 degree there.
  const std::uint64_t limit = 7ULL * degree + 30;
  std::vector<std::uint64_t> phi(limit + 1);
  for (std::uint64_t i = 0; i <= limit; ++i) phi[i] = i;
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (phi[i] != i) continue;
    for (std::uint64_t j = i; j <= limit; j += i) phi[j] -= phi[j] / i;
  }
  for (std::uint64_t m = 1; m <= limit; ++m) {
    if (phi[m] <= degree) out.push_back(m);
  }
  return out;
}

CyclotomicSplit strip_cyclotomic(const IntPoly& f, const std::vector<std::uint64_t>& orders_in) {
  if (f.is_zero()) throw std::invalid_argument("strip_cyclotomic: zero polynomial");
  CyclotomicSplit out;
  out.rest = f;
  std::vector<std::uint64_t> orders = orders_in;
  if (orders.empty() && f.degree() > 0) orders = cyclotomic_orders_up_to_degree(static_cast<unsigned>(f.degree()));
  for (std::uint64_t m : orders) {
    if (out.rest.degree() < static_cast<int>(euler_phi(m))) continue;
    auto fld = cached_root_of_unity_field(m);
    if (eval_mod_prime(out.rest, fld.root, fld.prime) != 0) continue;
    IntPoly phi = cyclotomic_poly(m);
    unsigned mult = 0;
    while (out.rest.degree() >= phi.degree()) {
      auto q = try_exact_divide(out.rest, phi);
      if (!q) break;
      out.rest = std::move(*q);
      ++mult;
    }
    if (mult > 0) out.factors.push_back({m, mult});
  }
  return out;
}

std::uint64_t conjugate_pair_count(const std::vector<CyclotomicFactor>& factors) {
  std::uint64_t total = 0;
  for (const auto& f : factors) {
    std::uint64_t per = f.order <= 2 ? 1 : euler_phi(f.order) / 2;
    total += per * f.multiplicity;
  }
  return total;
}

bool is_cyclotomic_product(const IntPoly& f) {
  if (f.degree() < 0) return false;
  IntPoly rest = strip_cyclotomic(f).rest;
  return rest.degree() == 0 && abs(rest[0]) == 1;
}

}  // namespace vines
