#include "vines/checks.hpp"

#include "vines/cyclotomic.hpp"
#include "vines/golden.hpp"
#include "vines/obstructions.hpp"
#include "vines/perron.hpp"
#include "vines/translates.hpp"

#include <functional>
#include <sstream>

namespace vines {

namespace {

void fail(CheckResult& r, const std::string& what) {
  if (r.passed) r.detail = what;
  r.passed = false;
}

}  // namespace

Bigraph random_bigraph(std::mt19937_64& rng, std::size_t max_vertices, unsigned max_mult) {
  Bigraph g;
  std::size_t count = 1;
  std::size_t prev = 1;
  std::uniform_int_distribution<unsigned> mult(0, max_mult);
  while (count < max_vertices) {
    const std::size_t room = max_vertices - count;
    std::uniform_int_distribution<std::size_t> width(1, std::min<std::size_t>(room, 3));
    const std::size_t w = width(rng);
    std::vector<std::vector<unsigned>> layer;
    for (std::size_t v = 0; v < w; ++v) {
      std::vector<unsigned> m(prev);
      bool any = false;
      for (auto& x : m) {
        x = mult(rng);
        any = any || x > 0;
      }
      if (!any) m[std::uniform_int_distribution<std::size_t>(0, prev - 1)(rng)] = 1;
      layer.push_back(std::move(m));
    }
    g.layers.push_back(std::move(layer));
    count += w;
    prev = w;
    if (std::uniform_int_distribution<int>(0, 3)(rng) == 0) break;
  }
  if (g.layers.empty()) g.layers.push_back({{1}});
  return g;
}

std::vector<Bigraph> all_bigraphs(std::size_t max_vertices, unsigned max_mult) {
  std::vector<Bigraph> out;
  Bigraph cur;
  // vectors of length `len` over [0, max_mult] with a positive entry
  auto vectors = [max_mult](std::size_t len) {
    std::vector<std::vector<unsigned>> vs;
    std::vector<unsigned> v(len, 0);
    for (;;) {
      std::size_t i = 0;
      while (i < len && v[i] == max_mult) v[i++] = 0;
      if (i == len) break;
      ++v[i];
      vs.push_back(v);
    }
    return vs;
  };
  std::function<void(std::size_t, std::size_t)> grow = [&](std::size_t used, std::size_t prev) {
    if (!cur.layers.empty()) out.push_back(cur);
    const auto vs = vectors(prev);
    for (std::size_t w = 1; used + w <= max_vertices; ++w) {
      std::vector<std::size_t> idx(w, 0);
      for (;;) {
        std::vector<std::vector<unsigned>> layer;
        for (auto i : idx) layer.push_back(vs[i]);
        cur.layers.push_back(std::move(layer));
        grow(used + w, w);
        cur.layers.pop_back();
        std::size_t k = 0;
        while (k < w && idx[k] + 1 == vs.size()) idx[k++] = 0;
        if (k == w) break;
        ++idx[k];
      }
    }
  };
  grow(1, 1);
  return out;
}

Integer det_shifted_brute_force(const AdjacencyMatrix& m, long k) {
  const std::size_t n = m.size;
  auto entry = [&](std::size_t i, std::size_t j) { return (i == j ? k : 0) - m.at(i, j); };
  std::vector<std::size_t> perm(n);
  std::vector<char> used(n, 0);
  Integer total = 0;
  std::function<void(std::size_t, Integer)> rec = [&](std::size_t row, Integer prod) {
    if (row == n) {
      // sign from the cycle decomposition
      std::vector<char> seen(n, 0);
      std::size_t cycles = 0;
      for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = 1;
      }
      if ((n - cycles) % 2 == 0) {
        total += prod;
      } else {
        total -= prod;
      }
      return;
    }
    for (std::size_t c = 0; c < n; ++c) {
      if (used[c]) continue;
      const long e = entry(row, c);
      if (e == 0) continue;
      used[c] = 1;
      perm[row] = c;
      rec(row + 1, prod * e);
      used[c] = 0;
    }
  };
  rec(0, Integer(1));
  return total;
}

CheckResult check_recurrence(std::size_t count, std::uint64_t seed) {
  CheckResult r("recurrence identity on random translates");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> jdist(0, 25);
  for (std::size_t i = 0; i < count; ++i) {
    Bigraph g = random_bigraph(rng, 9, 2);
    const std::size_t j = jdist(rng);
    TranslateSequence seq(g);
    const long n = static_cast<long>(g.vertex_count() + j);
    const IntPoly direct = char_poly(adjacency_matrix(translate(g, j)));
    ++r.cases;
    if (!(direct == seq.P(n))) fail(r, serialize_bigraph(g) + " j=" + std::to_string(j));
  }
  return r;
}

CheckResult check_separation(const Bigraph& vine, const VineProfile& profile, long span) {
  CheckResult r("separation identity " + serialize_bigraph(vine));
  TranslateSequence seq(vine);
  const LaurentPoly tt(-1, IntPoly{-1, 0, 1});
  for (long n = profile.s + 1; n <= profile.s + span; ++n) {
    const LaurentPoly lhs = profile.A.shifted(n) - profile.A.reflected().shifted(-n);
    ++r.cases;
    if (!(lhs == tt * seq.F(n))) fail(r, "n=" + std::to_string(n));
  }
  return r;
}

CheckResult check_char_poly_oracle(std::size_t max_vertices, unsigned max_mult) {
  CheckResult r("characteristic polynomial against permutation expansion");
  for (const auto& g : all_bigraphs(max_vertices, max_mult)) {
    const AdjacencyMatrix m = adjacency_matrix(g);
    const IntPoly p = char_poly(m);
    ++r.cases;
    if (p.degree() != static_cast<int>(m.size) || p.leading() != 1) {
      fail(r, serialize_bigraph(g) + ": not monic of degree n");
      continue;
    }
    for (long k = 0; k <= static_cast<long>(m.size); ++k) {
      if (p.eval(Rational(k)) != Rational(det_shifted_brute_force(m, k))) {
        fail(r, serialize_bigraph(g) + " at x=" + std::to_string(k));
        break;
      }
    }
  }
  return r;
}

CheckResult check_cyclotomic_product(std::uint64_t max_n) {
  CheckResult r("product of cyclotomic polynomials");
  for (std::uint64_t n = 1; n <= max_n; ++n) {
    IntPoly prod{1};
    for (std::uint64_t d = 1; d <= n; ++d)
      if (n % d == 0) prod = prod * cyclotomic_poly(d);
    std::vector<Integer> c(n + 1);
    c[0] = -1;
    c[n] = 1;
    ++r.cases;
    if (!(prod == IntPoly(std::move(c)))) fail(r, "n=" + std::to_string(n));
  }
  return r;
}

CheckResult check_dnumbers() {
  CheckResult r("d-number test on known cases");
  std::vector<IntPoly> good;
  for (long k = 1; k <= 44; ++k) good.push_back(IntPoly{-k, 1});
  for (const auto& q : std::vector<IntPoly>{{5, -5, 1}, {1, -3, 1}, {2, -4, 1}, {3, -6, 1}, {8, -8, 1}, {20, -10, 1}})
    good.push_back(q);
  for (const auto& p : good) {
    ++r.cases;
    if (!d_number_test(p).passed) fail(r, p.to_string() + " rejected");
    ++r.cases;
    if (!d_number_test(p * IntPoly{3}).passed) fail(r, "3*(" + p.to_string() + ") rejected");
  }
  for (const auto& b : golden::table_b()) {
    std::vector<Integer> c;
    for (auto it = b.coeffs.rbegin(); it != b.coeffs.rend(); ++it) c.emplace_back(*it);
    const IntPoly p(std::move(c));
    ++r.cases;
    if (d_number_test(p).passed) fail(r, p.to_string() + " accepted");
  }
  return r;
}

CheckResult check_perron_residuals(const std::vector<Bigraph>& graphs) {
  CheckResult r("Perron pair residuals");
  const BigFloat bound = BigFloat::pow10(-100, bits_for_digits(BigFloat::kDefaultDigits));
  for (const auto& g : graphs) {
    PerronPair p = perron_eigenpair(adjacency_matrix(g));
    ++r.cases;
    if (!(p.residual < bound)) fail(r, serialize_bigraph(g) + " residual " + p.residual.to_string(5));
  }
  return r;
}

}  // namespace vines
