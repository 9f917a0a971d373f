#include "ihara/zeta.hpp"

#include "ihara/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <omp.h>

namespace ihara {

namespace {

constexpr std::size_t kParallelDimension = 64;

void require_in_domain(const SpectralRadius& lambda, Real x) {
  const Real limit = domain_limit(lambda);
  if (!(x >= 0) || !(x < limit)) {
    throw Error(ErrorKind::OutOfDomain, "x = " + format_real(x) + " outside [0, " + format_real(limit) + ")");
  }
}

using DenseMatrix = std::vector<std::vector<Real>>;

DenseMatrix identity_minus(const OrientedLineGraph& olg, Real x) {
  const std::size_t n = olg.size();
  DenseMatrix m(n, std::vector<Real>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    m[i][i] = 1;
    for (std::size_t j : olg.successors(i)) m[i][j] -= x;
  }
  return m;
}

struct LuFactors {
  DenseMatrix lu;
  std::vector<std::size_t> pivot;  ///< row i of the factorization came from pivot[i]
  int sign = 1;
};

// Partially pivoted Doolittle elimination; row updates below the pivot run
// in parallel when `parallel` is set and are bit-identical to the serial loop.
LuFactors factorize(DenseMatrix m, bool parallel) {
  const std::size_t n = m.size();
  LuFactors f;
  f.pivot.resize(n);
  for (std::size_t i = 0; i < n; ++i) f.pivot[i] = i;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t best = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[best][col])) best = r;
    if (m[best][col] == 0) throw Error(ErrorKind::SingularMatrix, "I - xT is singular");
    if (best != col) {
      std::swap(m[best], m[col]);
      std::swap(f.pivot[best], f.pivot[col]);
      f.sign = -f.sign;
    }
    const Real diag = m[col][col];
    const std::vector<Real>& pivot_row = m[col];
#pragma omp parallel for if (parallel) schedule(static)
    for (std::size_t r = col + 1; r < n; ++r) {
      const Real factor = m[r][col] / diag;
      m[r][col] = factor;
      if (factor == 0) continue;
      for (std::size_t c = col + 1; c < n; ++c) m[r][c] -= factor * pivot_row[c];
    }
  }
  f.lu = std::move(m);
  return f;
}

Real determinant(const LuFactors& f) {
  Real det = f.sign;
  for (std::size_t i = 0; i < f.lu.size(); ++i) det *= f.lu[i][i];
  return det;
}

Real det_impl(const OrientedLineGraph& olg, Real x, bool parallel) {
  return determinant(factorize(identity_minus(olg, x), parallel));
}

}  // namespace

ZetaSeries zeta_coefficients(const TraceVector& tv, std::size_t order, const SpectralRadius& lambda,
                             std::size_t directed_edges) {
  if (tv.max_power() < order) {
    throw Error(ErrorKind::InsufficientTraces, "have " + std::to_string(tv.max_power()) + " traces, need " +
                                                   std::to_string(order));
  }
  ZetaSeries zs;
  zs.log_series = TruncatedSeries<Rational>(order);
  for (std::size_t k = 1; k <= order; ++k) zs.log_series[k] = Rational(tv[k], BigInt(k));
  zs.coefficients = series::exp(zs.log_series);
  zs.real_coefficients = series::to_real(zs.coefficients);
  zs.real_log_series = series::to_real(zs.log_series);
  zs.lambda = lambda;
  zs.directed_edges = directed_edges;
  return zs;
}

ZetaModel build_zeta_model(const Graph& g, std::size_t order, const PowerIterationOptions& options) {
  OrientedLineGraph olg = build_line_graph(g);
  TraceVector tv = traces(olg, order);
  const SpectralRadius lambda = spectral_radius(olg, options);
  ZetaSeries zs = zeta_coefficients(tv, order, lambda, olg.size());
  return ZetaModel{std::move(olg), std::move(tv), std::move(zs)};
}

Real domain_limit(const SpectralRadius& lambda) { return 1 / (lambda.lambda + 2 * lambda.residual); }

Real zeta_tail_bound(const ZetaSeries& zs, Real x) {
  if (x == 0) return 0;
  const std::size_t n = zs.order();
  const Real lam = zs.lambda.lambda + 2 * zs.lambda.residual;
  const Real rho = lam * x;
  if (rho >= 1) return std::numeric_limits<Real>::infinity();
  const Real edges = static_cast<Real>(zs.directed_edges);
  const Real np1 = static_cast<Real>(n + 1);

  // Logarithm tail: sum_{k>N} 2m rho^k / k <= 2m rho^(N+1) / ((N+1)(1-rho)).
  const Real log_tail = edges * std::pow(rho, np1) / (np1 * (1 - rho));
  const Real f_at_x = series::evaluate(zs.real_log_series, x);
  const Real from_log_tail = std::exp(f_at_x) * std::expm1(log_tail);

  // exp(f_N) has nonnegative coefficients d_k, so d_k x^k <= exp(f_N(r)) (x/r)^k
  // for every r > x. Minimize the resulting geometric tail over a grid in r.
  Real best_log = std::numeric_limits<Real>::infinity();
  for (int i = 1; i <= 400; ++i) {
    const Real ratio = std::exp(static_cast<Real>(i) * 0.01L);  // r / x in (1, e^4]
    const Real r = x * ratio;
    const Real q = 1 / ratio;
    const Real log_bound = series::evaluate(zs.real_log_series, r) + np1 * std::log(q) - std::log1p(-q);
    best_log = std::min(best_log, log_bound);
  }
  // Working-precision allowance covering Horner on N + 1 nonnegative terms and
  // the elimination in the determinant evaluator.
  const Real value = series::evaluate(zs.real_coefficients, x);
  const Real rounding = static_cast<Real>(2 * n + 4 * zs.directed_edges) * std::numeric_limits<Real>::epsilon() * value;
  return from_log_tail + std::exp(best_log) + rounding;
}

ZetaEvaluation zeta_eval_series(const ZetaSeries& zs, Real x) {
  require_in_domain(zs.lambda, x);
  return ZetaEvaluation{series::evaluate(zs.real_coefficients, x), zeta_tail_bound(zs, x)};
}

Real det_identity_minus(const OrientedLineGraph& olg, Real x) {
  return det_impl(olg, x, olg.size() >= kParallelDimension);
}

Real det_identity_minus_serial(const OrientedLineGraph& olg, Real x) { return det_impl(olg, x, false); }

Real zeta_eval_exact(const OrientedLineGraph& olg, const SpectralRadius& lambda, Real x) {
  require_in_domain(lambda, x);
  const Real det = det_identity_minus(olg, x);
  if (!(det > 0)) throw Error(ErrorKind::SingularMatrix, "det(I - xT) = " + format_real(det));
  return 1 / det;
}

Real resolvent_trace(const OrientedLineGraph& olg, Real x) {
  const std::size_t n = olg.size();
  const bool parallel = n >= kParallelDimension;
  const LuFactors f = factorize(identity_minus(olg, x), parallel);
  // Column j of Y = (I - xT)^{-1} T; only Y_jj is needed.
  std::vector<Real> diagonal(n, 0);
#pragma omp parallel for if (parallel) schedule(dynamic)
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<Real> rhs(n, 0);
    for (std::size_t i = 0; i < n; ++i) rhs[i] = olg.adjacent(f.pivot[i], j) ? 1 : 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < i; ++k) rhs[i] -= f.lu[i][k] * rhs[k];
    for (std::size_t i = n; i-- > 0;) {
      for (std::size_t k = i + 1; k < n; ++k) rhs[i] -= f.lu[i][k] * rhs[k];
      rhs[i] /= f.lu[i][i];
    }
    diagonal[j] = rhs[j];
  }
  Real trace = 0;
  for (Real d : diagonal) trace += d;
  return trace;
}

Real zeta_derivative(const ZetaSeries& zs, Real x) {
  require_in_domain(zs.lambda, x);
  return series::evaluate(series::derivative(zs.real_coefficients), x);
}

Real zeta_second_derivative(const ZetaSeries& zs, Real x) {
  require_in_domain(zs.lambda, x);
  return series::evaluate(series::derivative(series::derivative(zs.real_coefficients)), x);
}

Real zeta_derivative_exact(const OrientedLineGraph& olg, const SpectralRadius& lambda, Real x) {
  return zeta_eval_exact(olg, lambda, x) * resolvent_trace(olg, x);
}

}  // namespace ihara
