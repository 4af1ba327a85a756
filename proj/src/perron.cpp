#include "vines/perron.hpp"

#include <Eigen/Dense>

#include <cmath>

namespace vines {

namespace {

using Matrix = std::vector<std::vector<BigFloat>>;

// Solves (A) x = b in place by Gaussian elimination with partial pivoting.
bool solve(Matrix a, std::vector<BigFloat>& b) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (a[i][k].abs() > a[piv][k].abs()) piv = i;
    if (a[piv][k].sign() == 0) return false;
    std::swap(a[k], a[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a[i][k].sign() == 0) continue;
      BigFloat f = a[i][k] / a[k][k];
      for (std::size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    for (std::size_t j = k + 1; j < n; ++j) b[k] -= a[k][j] * b[j];
    b[k] /= a[k][k];
  }
  return true;
}

double double_estimate(const AdjacencyMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.size);
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      a(i, j) = static_cast<double>(m.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)));
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  return es.eigenvalues()(n - 1);
}

}  // namespace

PerronPair perron_eigenpair(const AdjacencyMatrix& m, unsigned digits) {
  const std::size_t n = m.size;
  if (n == 0) throw std::invalid_argument("perron_eigenpair: empty matrix");
  const mpfr_prec_t out_bits = bits_for_digits(digits);
  const mpfr_prec_t bits = bits_for_digits(digits + 20);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m.at(i, j) < 0 || m.at(i, j) != m.at(j, i))
        throw std::invalid_argument("perron_eigenpair: matrix not symmetric non-negative");

  BigFloat sigma(Rational(double_estimate(m)), bits);
  // Perturb the shift slightly above the estimate so the first solve is regular.
  sigma += BigFloat(Rational(1, 1 << 20), bits);
  std::vector<BigFloat> v(n, BigFloat(1L, bits));
  const BigFloat tolerance = BigFloat::pow10(-static_cast<long>(digits) + 10, bits);

  auto apply = [&](const std::vector<BigFloat>& x) {
    std::vector<BigFloat> y(n, BigFloat(bits));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (m.at(i, j) != 0) y[i] += BigFloat(m.at(i, j), bits) * x[j];
    return y;
  };

  for (int iter = 0; iter < 60; ++iter) {
    Matrix a(n, std::vector<BigFloat>(n, BigFloat(bits)));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] = BigFloat(m.at(i, j), bits);
        if (i == j) a[i][j] -= sigma;
      }
    std::vector<BigFloat> w = v;
    if (!solve(a, w)) {
      // sigma is an eigenvalue to working precision: shift by a few ulps
      BigFloat nudge(1L, bits);
      mpfr_div_2si(nudge.raw(), nudge.raw(), bits / 2, MPFR_RNDN);
      nudge *= sigma.abs() + BigFloat(1L, bits);
      for (std::size_t i = 0; i < n; ++i) a[i][i] -= nudge;
      w = v;
      if (!solve(std::move(a), w)) w = v;
    }
    // normalize at the distinguished vertex
    BigFloat pivot = w[m.start_index];
    if (pivot.sign() == 0) throw ConvergenceError("perron_eigenpair: eigenvector vanishes at start vertex");
    for (auto& x : w) x /= pivot;
    v = std::move(w);
    auto mv = apply(v);
    BigFloat num(bits), den(bits);
    for (std::size_t i = 0; i < n; ++i) {
      num += v[i] * mv[i];
      den += v[i] * v[i];
    }
    sigma = num / den;
    BigFloat res(bits);
    for (std::size_t i = 0; i < n; ++i) {
      BigFloat r = (mv[i] - sigma * v[i]).abs();
      if (r > res) res = r;
    }
    if (res < tolerance) {
      for (const auto& x : v)
        if (x.sign() <= 0) throw ConvergenceError("perron_eigenpair: converged to a non-Perron eigenvector");
      PerronPair out{BigFloat(out_bits), {}, BigFloat(out_bits)};
      mpfr_set(out.lambda.raw(), sigma.raw(), MPFR_RNDN);
      mpfr_set(out.residual.raw(), res.raw(), MPFR_RNDU);
      for (const auto& x : v) {
        BigFloat y(out_bits);
        mpfr_set(y.raw(), x.raw(), MPFR_RNDN);
        out.vector.push_back(std::move(y));
      }
      return out;
    }
  }
  throw ConvergenceError("perron_eigenpair: no convergence within iteration budget");
}

BigFloat norm_squared(const Bigraph& g, unsigned digits) {
  PerronPair p = perron_eigenpair(adjacency_matrix(g), digits);
  return p.lambda * p.lambda;
}

BigFloat largest_root_from_above(const RealEvaluator& eval, const BigFloat& start, unsigned digits) {
  const mpfr_prec_t bits = start.precision();
  BigFloat x = start;
  BigFloat value(bits), slope(bits);
  const BigFloat tolerance = BigFloat::pow10(-static_cast<long>(digits), bits);
  for (int iter = 0; iter < 10000; ++iter) {
    eval(x, value, slope);
    if (value.sign() == 0) return x;
    if (slope.sign() == 0) throw ConvergenceError("largest_root_from_above: zero slope");
    BigFloat step = value / slope;
    x -= step;
    if (step.abs() < tolerance * (x.abs() + BigFloat(1L, bits))) {
      eval(x, value, slope);
      return x;
    }
  }
  throw ConvergenceError("largest_root_from_above: no convergence");
}

}  // namespace vines
