#include "vines/obstructions.hpp"

#include "vines/factor.hpp"
#include "vines/laurent_poly.hpp"
#include "vines/modp.hpp"
#include "vines/perron.hpp"
#include "vines/roots.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace vines {

namespace {

// Half-width 2^-kIntervalBits of the rational intervals around lambda and lambda^2.
constexpr unsigned kIntervalBits = 200;

bool uniform(const std::vector<unsigned>& degrees) {
  return std::adjacent_find(degrees.begin(), degrees.end(), std::not_equal_to<>()) == degrees.end();
}

// Factor degrees of f mod p when p is a good prime (p does not divide lc(f)
// and f mod p is square-free), nothing otherwise.
std::optional<std::vector<unsigned>> good_pattern(const IntPoly& f, std::uint64_t p) {
  if (modp::reduce(f.leading(), p) == 0) return std::nullopt;
  modp::Poly fp = modp::monic(modp::from_int_poly(f, p), p);
  if (!modp::is_squarefree(fp, p)) return std::nullopt;
  return modp::ddf_degrees(fp, p);
}

// Normalizes to a primitive polynomial with positive leading coefficient.
IntPoly normalized(const IntPoly& p) { return p.primitive_part(); }

// Rational interval [v - 2^-k, v + 2^-k] around a BigFloat.
std::pair<Rational, Rational> around(const BigFloat& v, unsigned k) {
  Rational r = v.to_rational();
  Rational eps(1);
  mpq_div_2exp(eps.get_mpq_t(), eps.get_mpq_t(), k);
  return {r - eps, r + eps};
}

// Largest root of a real-rooted polynomial by Laguerre iteration from the
// upper bound (monotone from above), at a precision covering the cancellation
// in evaluating p near the root.
BigFloat largest_real_root(const IntPoly& p, const Integer& upper) {
  std::size_t coeff_bits = 0;
  for (const auto& x : p.coeffs()) coeff_bits = std::max(coeff_bits, mpz_sizeinbase(x.get_mpz_t(), 2));
  const long deg = std::max(p.degree(), 0);
  const mpfr_prec_t bits = static_cast<mpfr_prec_t>(2 * kIntervalBits + 64 + coeff_bits +
                                                    static_cast<std::size_t>(deg) *
                                                        mpz_sizeinbase(upper.get_mpz_t(), 2));
  std::vector<BigFloat> c;
  c.reserve(p.size());
  for (const auto& x : p.coeffs()) c.emplace_back(x, bits);
  const BigFloat n(deg, bits);
  const BigFloat n1(deg - 1, bits);
  BigFloat tolerance(1L, bits);
  mpfr_div_2ui(tolerance.raw(), tolerance.raw(), 2 * kIntervalBits + 20, MPFR_RNDN);
  BigFloat x(upper, bits);
  for (int iter = 0; iter < 2000; ++iter) {
    BigFloat v(bits), d1(bits), d2(bits);
    for (std::size_t i = c.size(); i-- > 0;) {
      d2 *= x;
      d2 += d1;
      d1 *= x;
      d1 += v;
      v *= x;
      v += c[i];
    }
    if (v.sign() == 0) return x;
    d2 += d2;
    const BigFloat G = d1 / v;
    const BigFloat H = G * G - d2 / v;
    BigFloat disc = n1 * (n * H - G * G);
    if (disc.sign() < 0) disc = BigFloat(bits);
    BigFloat denom = G + disc.sqrt();
    if (denom.sign() == 0) throw ConvergenceError("largest_real_root: degenerate Laguerre step");
    const BigFloat step = n / denom;
    x -= step;
    if (step.abs() < tolerance) return x;
  }
  throw ConvergenceError("largest_real_root: no convergence");
}

Integer row_sum_bound(const AdjacencyMatrix& m) {
  long best = 0;
  for (std::size_t i = 0; i < m.size; ++i) {
    long s = 0;
    for (std::size_t j = 0; j < m.size; ++j) s += m.at(i, j);
    best = std::max(best, s);
  }
  return Integer(best + 1);
}

// The irreducible factor of f (square-free) with a root in [lo, hi]; the
// interval is shrunk until exactly one factor qualifies.
IntPoly factor_at(const std::vector<IntPoly>& factors, Rational lo, Rational hi) {
  // The root lies on exactly one factor, so the largest needs no Sturm sequence
  // when none of the others has a root in the interval.
  std::vector<const IntPoly*> order;
  for (const auto& f : factors) order.push_back(&f);
  std::stable_sort(order.begin(), order.end(),
                   [](const IntPoly* a, const IntPoly* b) { return a->degree() < b->degree(); });
  std::vector<std::vector<IntPoly>> seqs(order.size());
  for (int attempt = 0; attempt < 4; ++attempt) {
    std::vector<const IntPoly*> hits;
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
      if (seqs[i].empty()) seqs[i] = sturm_sequence(*order[i]);
      if (sturm_count(seqs[i], lo, hi) >= 1) hits.push_back(order[i]);
    }
    if (hits.empty() && !order.empty()) return *order.back();
    if (!order.empty()) {
      std::size_t last = order.size() - 1;
      if (seqs[last].empty()) seqs[last] = sturm_sequence(*order[last]);
      if (sturm_count(seqs[last], lo, hi) >= 1) hits.push_back(order[last]);
    }
    if (hits.size() == 1) return *hits.front();
    if (hits.empty()) break;
    Rational mid = (lo + hi) / 2;
    Rational half = (hi - lo) / 2048;
    lo = mid - half;
    hi = mid + half;
  }
  throw std::logic_error("factor_at: no unique factor at the given root");
}

// Polynomial q with G(x) = q(x^2); throws when G has odd terms.
IntPoly even_part(const IntPoly& G) {
  std::vector<Integer> q((G.size() + 1) / 2);
  for (std::size_t i = 0; i < G.size(); ++i) {
    if (i % 2 == 1) {
      if (G[i] != 0) throw std::logic_error("even_part: polynomial has odd terms");
    } else {
      q[i / 2] = G[i];
    }
  }
  return IntPoly(std::move(q));
}

// q(x^2) -> G(x)
IntPoly inflate2(const IntPoly& q) { return q.inflated(2); }

struct MinPolyChoice {
  IntPoly minpoly;
  CyclotomicVerdict verdict;
};

using IntervalProvider = std::function<std::pair<Rational, Rational>()>;

// Minimal polynomial of the root of q picked out by `where`, together with
// its cyclotomic test. Factorization patterns from the test double as an
// irreducibility certificate; Zassenhaus is the fallback. Irreducible factors
// in `known` are divided out first, and small factors found by Zassenhaus are
// added to it.
MinPolyChoice choose_and_test(const IntPoly& q_in, std::uint64_t M, const IntervalProvider& where,
                              std::vector<IntPoly>* known = nullptr) {
  const IntPoly q = normalized(q_in);
  if (q.degree() < 1) throw std::logic_error("choose_and_test: constant polynomial");
  if (q.degree() == 1) return {q, cyclotomic_test(q, M)};
  IntPoly rest = normalized(square_free_part(q));
  std::vector<IntPoly> factors;
  if (known) {
    for (const auto& k : *known) {
      if (rest.degree() <= k.degree()) continue;
      if (auto qt = try_exact_divide(rest, k)) {
        factors.push_back(k);
        rest = std::move(*qt);
      }
    }
  }
  const bool whole = factors.empty() && rest == q;
  if (rest.degree() == 1) {
    factors.push_back(rest);
  } else {
    DegreeSetTracker tracker(static_cast<unsigned>(rest.degree()));
    CyclotomicVerdict v;
    v.bound = M;
    for (std::uint64_t p : modp::primes_up_to(M)) {
      auto pattern = good_pattern(rest, p);
      if (!pattern) continue;
      v.primes_tested.push_back(p);
      tracker.add_pattern(*pattern);
      if (v.passed && !uniform(*pattern)) {
        v.passed = false;
        v.failing_prime = p;
      }
      if (!v.passed && tracker.certified_irreducible()) break;
    }
    std::uint64_t p = M;
    for (int extra = 0; extra < 80 && !tracker.certified_irreducible(); ++extra) {
      do {
        ++p;
      } while (!modp::is_prime(p));
      auto pattern = good_pattern(rest, p);
      if (pattern) tracker.add_pattern(*pattern);
    }
    if (tracker.certified_irreducible()) {
      if (whole) return {q, v};
      factors.push_back(rest);
    } else {
      for (auto& f : factor_squarefree_over_z(rest)) {
        f = normalized(f);
        if (known && 2 * f.degree() <= rest.degree()) known->push_back(f);
        factors.push_back(std::move(f));
      }
    }
  }
  IntPoly chosen;
  if (factors.size() == 1) {
    chosen = normalized(factors.front());
  } else {
    auto [lo, hi] = where();
    chosen = normalized(factor_at(factors, lo, hi));
  }
  return {chosen, cyclotomic_test(chosen, M)};
}

// The non-cyclotomic part of t^n F_n as q with q(x^2) = G(x), G(t + 1/t) = t^-k rest.
IntPoly q_from_rest(const IntPoly& rest) {
  if (rest.degree() % 2 != 0) throw std::logic_error("q_from_rest: odd degree");
  const long k = rest.degree() / 2;
  IntPoly G = from_laurent_F(LaurentPoly(-k, rest));
  return even_part(G);
}

NormSquared finish_norm_squared(const IntPoly& minpoly, const IntPoly& P, const Integer& upper,
                                std::vector<CyclotomicFactor> cyc) {
  BigFloat lambda = largest_real_root(P, upper);
  BigFloat l2 = lambda * lambda;
  auto [lo, hi] = around(l2, kIntervalBits);
  auto seq = sturm_sequence(minpoly);
  if (sturm_count(seq, lo, hi) != 1) throw std::logic_error("norm_squared_exact: isolation failed");
  return NormSquared{minpoly, lo, hi, std::move(cyc)};
}

struct LambdaField {
  FieldPtr field;
  BigFloat lambda;
};

// Q(lambda) from the minimal polynomial q of lambda^2: the factor of q(x^2)
// vanishing at lambda.
LambdaField lambda_field(const IntPoly& q, const IntPoly& P, const Integer& upper) {
  BigFloat lambda = largest_real_root(P, upper);
  auto [lo, hi] = around(lambda, kIntervalBits);
  IntPoly big = inflate2(q);
  auto factors = factor_squarefree_over_z(big);
  IntPoly m = normalized(factors.size() == 1 ? factors.front() : factor_at(factors, lo, hi));
  if (m.leading() != 1) throw std::logic_error("lambda_field: lambda is not an algebraic integer");
  if (sturm_count(sturm_sequence(m), lo, hi) != 1) throw std::logic_error("lambda_field: isolation failed");
  return {NumberField::create(m, lo, hi), lambda};
}

}  // namespace

CyclotomicVerdict cyclotomic_test(const IntPoly& minpoly, std::uint64_t M) {
  if (minpoly.degree() < 1) throw std::invalid_argument("cyclotomic_test: constant polynomial");
  CyclotomicVerdict v;
  v.bound = M;
  for (std::uint64_t p : modp::primes_up_to(M)) {
    auto pattern = good_pattern(minpoly, p);
    if (!pattern) continue;
    v.primes_tested.push_back(p);
    if (!uniform(*pattern)) {
      v.passed = false;
      v.failing_prime = p;
      return v;
    }
  }
  return v;
}

bool fails_at_any(const IntPoly& minpoly, const std::vector<std::uint64_t>& primes) {
  for (std::uint64_t p : primes) {
    auto pattern = good_pattern(minpoly, p);
    if (pattern && !uniform(*pattern)) return true;
  }
  return false;
}

NormSquared norm_squared_exact(const Bigraph& g) {
  const AdjacencyMatrix adj = adjacency_matrix(g);
  const IntPoly P = char_poly(adj);
  const long n = static_cast<long>(adj.size);
  LaurentPoly F = to_laurent_F(P);
  IntPoly f = F.body().shifted(static_cast<std::size_t>(F.low() + n));
  CyclotomicSplit split = strip_cyclotomic(f);
  const Integer upper = row_sum_bound(adj);
  if (split.rest.degree() < 1) {
    // Every eigenvalue is 2cos(pi r); lambda^2 is a root of some cyclotomic factor's image.
    BigFloat lambda = largest_real_root(P, upper);
    BigFloat l2 = lambda * lambda;
    auto [lo, hi] = around(l2, kIntervalBits);
    IntPoly q = even_part(n % 2 == 1 ? exact_divide(P, IntPoly{0, 1}) : P);
    auto factors = factor_over_z(q);
    std::vector<IntPoly> fs;
    for (auto& [h, mult] : factors) fs.push_back(h);
    IntPoly m = normalized(factor_at(fs, lo, hi));
    return NormSquared{m, lo, hi, split.factors};
  }
  IntPoly q = q_from_rest(split.rest);
  IntervalProvider where = [&]() {
    BigFloat lambda = largest_real_root(P, upper);
    return around(lambda * lambda, kIntervalBits);
  };
  MinPolyChoice choice = choose_and_test(q, 2, where);
  return finish_norm_squared(choice.minpoly, P, upper, split.factors);
}

IntPoly norm_squared_min_poly(const Bigraph& g) { return norm_squared_exact(g).minpoly; }

DNumberVerdict d_number_test(const IntPoly& minpoly_in) {
  DNumberVerdict v;
  const IntPoly minpoly = normalized(minpoly_in);
  if (minpoly.degree() < 1) throw std::invalid_argument("d_number_test: constant polynomial");
  if (minpoly.leading() != 1) {
    v.passed = false;
    v.algebraic_integer = false;
    return v;
  }
  const std::size_t n = static_cast<std::size_t>(minpoly.degree());
  const Integer an = minpoly[0];
  for (std::size_t i = 1; i <= n; ++i) {
    const Integer& ai = minpoly[n - i];
    Integer lhs, rhs;
    mpz_pow_ui(lhs.get_mpz_t(), an.get_mpz_t(), i);
    mpz_pow_ui(rhs.get_mpz_t(), ai.get_mpz_t(), n);
    bool divides = lhs == 0 ? rhs == 0 : mpz_divisible_p(rhs.get_mpz_t(), lhs.get_mpz_t()) != 0;
    if (!divides) {
      v.passed = false;
      v.failing_index = i;
      return v;
    }
  }
  return v;
}

ExactDimensions fp_dimensions_exact(const Bigraph& g) {
  ExactDimensions out;
  out.matrix = adjacency_matrix(g);
  const AdjacencyMatrix& a = out.matrix;
  const IntPoly P = char_poly(a);
  const Integer upper = row_sum_bound(a);
  NormSquared ns = norm_squared_exact(g);
  LambdaField lf = lambda_field(ns.minpoly, P, upper);
  out.field = lf.field;
  const FieldPtr& K = out.field;
  const NumberFieldElement lambda = NumberFieldElement::generator(K);
  const std::size_t n = a.size;
  const std::size_t s = a.start_index;

  // (lambda I - M') v' = M[., s], M' the matrix without the start vertex:
  // positive definite, so symmetric pivoting in any order is regular.
  std::vector<std::size_t> vars;
  for (std::size_t i = 0; i < n; ++i)
    if (i != s) vars.push_back(i);
  const std::size_t m = vars.size();
  std::vector<std::map<std::size_t, NumberFieldElement>> rows(m);
  std::vector<NumberFieldElement> rhs(m, NumberFieldElement(K, Rational(0)));
  for (std::size_t r = 0; r < m; ++r) {
    const std::size_t i = vars[r];
    for (std::size_t c = 0; c < m; ++c) {
      const std::size_t j = vars[c];
      long entry = -a.at(i, j);
      if (r == c) {
        rows[r].emplace(c, lambda + NumberFieldElement(K, Rational(entry)));
      } else if (entry != 0) {
        rows[r].emplace(c, NumberFieldElement(K, Rational(entry)));
      }
    }
    rhs[r] = NumberFieldElement(K, Rational(a.at(i, s)));
  }
  std::vector<char> done(m, 0);
  std::vector<std::size_t> order;
  for (std::size_t step = 0; step < m; ++step) {
    std::size_t piv = m;
    std::size_t best = SIZE_MAX;
    for (std::size_t r = 0; r < m; ++r) {
      if (done[r]) continue;
      if (rows[r].size() < best) {
        best = rows[r].size();
        piv = r;
      }
    }
    done[piv] = 1;
    order.push_back(piv);
    const NumberFieldElement inv = rows[piv].at(piv).inverse();
    for (std::size_t r = 0; r < m; ++r) {
      if (done[r]) continue;
      auto it = rows[r].find(piv);
      if (it == rows[r].end()) continue;
      const NumberFieldElement f = it->second * inv;
      rows[r].erase(it);
      for (const auto& [c, val] : rows[piv]) {
        if (c == piv || done[c]) continue;
        NumberFieldElement delta = f * val;
        auto jt = rows[r].find(c);
        if (jt == rows[r].end()) {
          rows[r].emplace(c, -delta);
        } else {
          jt->second -= delta;
          if (jt->second.is_zero()) rows[r].erase(jt);
        }
      }
      rhs[r] -= f * rhs[piv];
    }
  }
  std::vector<std::optional<NumberFieldElement>> sol(m);
  for (std::size_t k = order.size(); k-- > 0;) {
    const std::size_t r = order[k];
    NumberFieldElement acc = rhs[r];
    for (const auto& [c, val] : rows[r]) {
      if (c == r) continue;
      if (!sol[c]) throw std::logic_error("fp_dimensions_exact: elimination order broken");
      acc -= val * *sol[c];
    }
    sol[r] = acc * rows[r].at(r).inverse();
  }
  out.dims.assign(n, NumberFieldElement(K, Rational(1)));
  for (std::size_t r = 0; r < m; ++r) out.dims[vars[r]] = *sol[r];
  // remaining equation: sum_j M[s][j] v_j = lambda
  NumberFieldElement check(K, Rational(0));
  for (std::size_t j = 0; j < n; ++j)
    if (a.at(s, j) != 0) check += NumberFieldElement(K, Rational(a.at(s, j))) * out.dims[j];
  if (!(check == lambda)) throw std::logic_error("fp_dimensions_exact: eigen-equation fails at the start vertex");
  for (const auto& d : out.dims)
    if (d.evaluate(256).sign() <= 0) throw std::logic_error("fp_dimensions_exact: non-positive dimension");
  return out;
}

NumberFieldElement global_even_dimension(const ExactDimensions& d) {
  NumberFieldElement gl(d.field, Rational(0));
  for (std::size_t i = 0; i < d.dims.size(); ++i)
    if (d.matrix.parity[i] == 0) gl += d.dims[i] * d.dims[i];
  return gl;
}

IntPoly global_even_dimension_min_poly(const Bigraph& g) {
  return global_even_dimension(fp_dimensions_exact(g)).min_poly();
}

AlgebraicIntegerVerdict algebraic_integer_test(const ExactDimensions& d, std::size_t vertex) {
  if (vertex >= d.dims.size()) throw std::out_of_range("algebraic_integer_test: no such vertex");
  AlgebraicIntegerVerdict v;
  v.vertex = vertex;
  v.minpoly = d.dims[vertex].min_poly();
  v.passed = v.minpoly.leading() == 1;
  return v;
}

AlgebraicIntegerVerdict algebraic_integer_test(const Bigraph& g, std::size_t vertex) {
  return algebraic_integer_test(fp_dimensions_exact(g), vertex);
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Survivor:
      return "survivor";
    case Verdict::EliminatedCyclotomic:
      return "cyclotomic";
    case Verdict::EliminatedDNumber:
      return "d-number";
    case Verdict::EliminatedAlgebraicInteger:
      return "algebraic-integer";
  }
  return "?";
}

struct TranslateScreener::Tracker {
  struct Slot {
    std::uint64_t order;
    std::uint64_t prime;
    std::uint64_t w2;
    std::uint64_t w2p1;
    std::uint64_t prev;
    std::uint64_t cur;
  };
  std::vector<Slot> slots;
  std::map<std::uint64_t, IntPoly> phi;
  std::vector<IntPoly> known_factors;
  long n_cur = 0;

  const IntPoly& cyclotomic(std::uint64_t m) {
    auto it = phi.find(m);
    if (it == phi.end()) it = phi.emplace(m, cyclotomic_poly(m)).first;
    return it->second;
  }
};

TranslateScreener::TranslateScreener(const Bigraph& vine, long n_max, std::uint64_t prime_bound)
    : vine_(vine), n_max_(n_max), prime_bound_(prime_bound), seq_(vine), tracker_(std::make_unique<Tracker>()) {
  const long base = seq_.base_size();
  const long top = std::max(n_max_, base + 1);
  for (std::uint64_t m : cyclotomic_orders_up_to_degree(static_cast<unsigned>(2 * top))) {
    auto f = cached_root_of_unity_field(m);
    Tracker::Slot s{};
    s.order = m;
    s.prime = f.prime;
    s.w2 = modp::mul_mod(f.root, f.root, f.prime);
    s.w2p1 = s.w2 + 1 == f.prime ? 0 : s.w2 + 1;
    s.prev = eval_mod_prime(seq_.f(base), f.root, f.prime);
    s.cur = eval_mod_prime(seq_.f(base + 1), f.root, f.prime);
    tracker_->slots.push_back(s);
  }
  tracker_->n_cur = base + 1;
}

TranslateScreener::~TranslateScreener() = default;

ObstructionReport TranslateScreener::screen(long j) {
  const long base = seq_.base_size();
  const long n = base + j;
  if (j < 0) throw std::invalid_argument("screen: negative translation");
  Tracker& tr = *tracker_;
  if (n < tr.n_cur - 1) {
    for (auto& s : tr.slots) {
      auto f = cached_root_of_unity_field(s.order);
      s.prev = eval_mod_prime(seq_.f(base), f.root, f.prime);
      s.cur = eval_mod_prime(seq_.f(base + 1), f.root, f.prime);
    }
    tr.n_cur = base + 1;
  }
  while (tr.n_cur < n) {
    for (auto& s : tr.slots) {
      std::uint64_t a = modp::mul_mod(s.w2p1, s.cur, s.prime);
      std::uint64_t b = modp::mul_mod(s.w2, s.prev, s.prime);
      std::uint64_t next = a >= b ? a - b : a + (s.prime - b);
      s.prev = s.cur;
      s.cur = next;
    }
    ++tr.n_cur;
  }
  const bool at_cur = tr.n_cur == n;
  const IntPoly& f = seq_.f(n);

  ObstructionReport rep;
  rep.j = j;
  rep.n = n;
  const Bigraph T = translate(vine_, static_cast<std::size_t>(j));
  rep.graph = serialize_bigraph(T);

  IntPoly rest = f;
  std::vector<CyclotomicFactor> cyc;
  for (const auto& s : tr.slots) {
    const std::uint64_t value = at_cur ? s.cur : s.prev;
    if (value != 0) continue;
    if (rest.degree() < static_cast<int>(euler_phi(s.order))) continue;
    const IntPoly& phi = tr.cyclotomic(s.order);
    unsigned mult = 0;
    while (rest.degree() >= phi.degree()) {
      auto qt = try_exact_divide(rest, phi);
      if (!qt) break;
      rest = std::move(*qt);
      ++mult;
    }
    if (mult > 0) cyc.push_back({s.order, mult});
  }
  if (rest.degree() < 1) throw std::logic_error("screen: translate has only cyclotomic eigenvalues");
  const IntPoly& P = seq_.P(n);
  Integer upper = row_sum_bound(adjacency_matrix(vine_)) + 1;
  if (upper < 3) upper = 3;
  const IntPoly q = q_from_rest(rest);
  IntervalProvider where = [&]() {
    BigFloat lambda = largest_real_root(P, upper);
    return around(lambda * lambda, kIntervalBits);
  };
  MinPolyChoice choice = choose_and_test(q, prime_bound_, where, &tr.known_factors);
  rep.norm_sq_minpoly = choice.minpoly;
  rep.cyclotomic = choice.verdict;
  if (!rep.cyclotomic.passed) {
    rep.verdict = Verdict::EliminatedCyclotomic;
    rep.reason = "fails the cyclotomic test at p = " + std::to_string(rep.cyclotomic.failing_prime);
    return rep;
  }
  BigFloat lambda = largest_real_root(P, upper);
  rep.norm_sq = (lambda * lambda).to_string(40);

  ExactDimensions dims = fp_dimensions_exact(T);
  IntPoly gl = global_even_dimension(dims).min_poly();
  rep.global_even_minpoly = gl;
  rep.dnumber = d_number_test(gl);
  if (!rep.dnumber->passed) {
    rep.verdict = Verdict::EliminatedDNumber;
    rep.reason = rep.dnumber->algebraic_integer
                     ? "global even dimension is not a d-number (i = " + std::to_string(rep.dnumber->failing_index) + ")"
                     : "global even dimension is not an algebraic integer";
    return rep;
  }
  if (T.depth() >= 3) {
    rep.algebraic_integer = algebraic_integer_test(dims, T.bottom_vertex_at_depth(3));
    if (!rep.algebraic_integer->passed) {
      rep.verdict = Verdict::EliminatedAlgebraicInteger;
      rep.reason = "dimension of vertex " + std::to_string(rep.algebraic_integer->vertex) +
                   " is not an algebraic integer";
      return rep;
    }
  }
  rep.verdict = Verdict::Survivor;
  rep.reason = "passes all tests";
  return rep;
}

ObstructionReport screen_translate(const Bigraph& g, long j, std::uint64_t M) {
  TranslateScreener screener(g, static_cast<long>(g.vertex_count()) + j, M);
  return screener.screen(j);
}

}  // namespace vines
