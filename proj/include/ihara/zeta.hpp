#pragma once

#include "ihara/line_graph.hpp"
#include "ihara/power_series.hpp"

#include <cstddef>
#include <optional>

namespace ihara {

/// Truncated expansion of the zeta function, c_0 .. c_N, with the data the
/// evaluators need (Perron root for the domain, traces for the tail bound).
struct ZetaSeries {
  TruncatedSeries<Rational> coefficients;
  TruncatedSeries<Rational> log_series;  ///< sum_k trace(T^k) x^k / k
  TruncatedSeries<Real> real_coefficients;
  TruncatedSeries<Real> real_log_series;
  SpectralRadius lambda;
  std::size_t directed_edges = 0;  ///< 2m

  std::size_t order() const noexcept { return coefficients.order(); }
};

/// exp(sum_{k<=N} trace(T^k) x^k / k). Throws InsufficientTraces when
/// tv has fewer than N powers.
ZetaSeries zeta_coefficients(const TraceVector& tv, std::size_t order, const SpectralRadius& lambda,
                             std::size_t directed_edges);

/// Everything derived from one graph: line graph, traces, Perron root, series.
struct ZetaModel {
  OrientedLineGraph olg;
  TraceVector traces;
  ZetaSeries series;

  const SpectralRadius& lambda() const noexcept { return series.lambda; }
};

ZetaModel build_zeta_model(const Graph& g, std::size_t order, const PowerIterationOptions& options = {});

/// Largest accepted argument: 1 / (lambda + 2 * residual). Arguments must
/// be strictly below it.
Real domain_limit(const SpectralRadius& lambda);

struct ZetaEvaluation {
  Real value = 0;
  /// Upper bound on zeta(x) - value (the truncated series underestimates).
  Real tail_bound = 0;
};

/// Horner evaluation of the truncated series plus a bound on the omitted tail.
ZetaEvaluation zeta_eval_series(const ZetaSeries& zs, Real x);

/// Bound on sum_{k > N} c_k x^k using trace(T^k) <= 2m lambda^k for the
/// logarithm's tail and a Cauchy estimate for exp of the truncated logarithm,
/// plus a small working-precision allowance so the bound also covers the
/// rounding in both evaluators.
Real zeta_tail_bound(const ZetaSeries& zs, Real x);

/// 1 / det(I - xT) by partially pivoted LU.
Real zeta_eval_exact(const OrientedLineGraph& olg, const SpectralRadius& lambda, Real x);

/// Derivative of the truncated series.
Real zeta_derivative(const ZetaSeries& zs, Real x);

/// zeta'(x) = zeta(x) * trace(T (I - xT)^{-1}), no truncation.
Real zeta_derivative_exact(const OrientedLineGraph& olg, const SpectralRadius& lambda, Real x);

/// zeta''(x) from the truncated series.
Real zeta_second_derivative(const ZetaSeries& zs, Real x);

/// Determinant kernels, exposed for tests and benchmarks.
Real det_identity_minus(const OrientedLineGraph& olg, Real x);
Real det_identity_minus_serial(const OrientedLineGraph& olg, Real x);
/// trace(T (I - xT)^{-1}).
Real resolvent_trace(const OrientedLineGraph& olg, Real x);

}  // namespace ihara
