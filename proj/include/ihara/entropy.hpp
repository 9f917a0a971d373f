#pragma once

#include "ihara/formal_group.hpp"
#include "ihara/zeta.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace ihara {

/// Finite distribution: p_i >= 0, sum within 1e-12 of one.
class ProbabilityDistribution {
 public:
  static constexpr Real kSumTolerance = 1e-12L;

  explicit ProbabilityDistribution(std::vector<Real> p);

  static ProbabilityDistribution uniform(std::size_t w);
  /// Joint distribution of two independent systems, p_i q_j in row-major order.
  static ProbabilityDistribution product(const ProbabilityDistribution& a, const ProbabilityDistribution& b);
  /// JSON array or whitespace-separated numbers.
  static ProbabilityDistribution parse(std::string_view text);

  ProbabilityDistribution with_zero_event() const;

  std::size_t size() const noexcept { return p_.size(); }
  Real operator[](std::size_t i) const { return p_.at(i); }
  const std::vector<Real>& values() const noexcept { return p_; }

 private:
  std::vector<Real> p_;
};

Real shannon_entropy(const ProbabilityDistribution& p);
/// (1 - sum p_i^q) / (q - 1); q = 1 is rejected.
Real tsallis_entropy(const ProbabilityDistribution& p, Real q);

/// Which zeta evaluator feeds the entropy formulas.
enum class ZetaPath {
  Exact,   ///< 1/det(I - xT) and the resolvent trace
  Series,  ///< truncated series; kept for cross-checks
};

struct EntropyReport {
  Real entropy = 0;
  std::vector<Real> terms;
  Real a = 0;
  std::size_t order = 0;
  Real lambda = 0;
  std::optional<Real> maximizer;
  Real shannon = 0;
  std::optional<std::pair<Real, Real>> tsallis;  ///< (q, value)
};

struct MaximizerResult {
  Real c = 0;
  Real h_at_c = 0;
  std::size_t iterations = 0;
};

struct JointEntropyCheck {
  Real direct = 0;
  Real via_phi = 0;
  Real delta = 0;
};

/// Formal group logarithm of the entropy,
///   G(t) = (zeta(a e^{-t}) - zeta(a) + e^{-t} - 1) / -(1 + a zeta'(a)),
/// with zeta replaced by its degree-N truncation. Built by re-expanding
/// zeta about a and composing with a(e^{-t} - 1). G_0 = 0 and G_1 = 1.
template <typename T>
TruncatedSeries<T> formal_group_log_series(const ZetaSeries& zs, const T& a, std::size_t order) {
  const std::size_t n = zs.order();
  TruncatedSeries<T> zeta(n);
  for (std::size_t k = 0; k <= n; ++k) {
    if constexpr (std::is_same_v<T, Rational>) {
      zeta[k] = zs.coefficients[k];
    } else {
      zeta[k] = static_cast<T>(to_real(zs.coefficients[k]));
    }
  }
  // zeta(a + y) = sum_j d_j y^j, with d_0 = zeta(a) and d_1 = zeta'(a).
  const TruncatedSeries<T> about_a = series::taylor_shift(zeta, a).truncated(order);
  const T zeta_a = about_a[0];
  const T dzeta_a = about_a[1];
  const TruncatedSeries<T> shift = series::scale(series::exp_minus_one<T>(order, T(-1)), a);
  TruncatedSeries<T> numerator = series::compose(about_a, shift);
  numerator[0] -= zeta_a;
  numerator = series::add(numerator, series::exp_minus_one<T>(order, T(-1)));
  const T denominator = -(T(1) + a * dzeta_a);
  if (denominator == T(0)) throw Error(ErrorKind::InvalidParams, "degenerate normalization");
  auto g = series::scale(numerator, T(1) / denominator);
  g[0] = T(0);  // exact already for rationals; removes round-off for reals
  return g;
}

/// The entropy for one graph and one scaling parameter a in (0, 1/lambda).
/// Immutable after construction.
class IharaEntropy {
 public:
  /// Throws InvalidParams unless 0 < a < domain_limit(lambda).
  IharaEntropy(std::shared_ptr<const ZetaModel> model, Real a);

  /// a = fraction / lambda.
  static IharaEntropy with_fraction(std::shared_ptr<const ZetaModel> model, Real fraction);

  Real a() const noexcept { return a_; }
  const ZetaModel& model() const noexcept { return *model_; }
  std::shared_ptr<const ZetaModel> model_ptr() const noexcept { return model_; }

  /// 1 + a zeta'(a).
  Real normalizer(ZetaPath path = ZetaPath::Exact) const;

  /// G(log(1/p)) = (zeta(a) + 1 - (zeta(ap) + p)) / (1 + a zeta'(a)), p in [0, 1].
  Real g_of_log_inv_p(Real p, ZetaPath path = ZetaPath::Exact) const;

  /// s(p) = p G(log(1/p)); s(0) = 0.
  Real term(Real p, ZetaPath path = ZetaPath::Exact) const;

  /// s'(p) numerator: h(p) = 1 + zeta(a) - 2p - zeta(ap) - a p zeta'(ap).
  Real h(Real p) const;

  EntropyReport entropy(const ProbabilityDistribution& dist, ZetaPath path = ZetaPath::Exact) const;

  /// Root of h in (0, 1) by bisection; |h(c)| <= tol unless the bracket
  /// collapses first.
  MaximizerResult maximizer(Real tol = 1e-12L, std::size_t max_iterations = 200) const;

  /// G as a working-precision series at the model's truncation order.
  TruncatedSeries<Real> log_series() const;

  /// Phi(s1, s2) = G(F(s1) + F(s2)) at working precision, for the joint check.
  BivariateSeries<Real> group_law(std::size_t order) const;

  /// Direct entropy of the product distribution against
  /// sum_ij p_i q_j Phi(G(log 1/p_i), G(log 1/q_j)).
  JointEntropyCheck joint_entropy_check(const ProbabilityDistribution& a, const ProbabilityDistribution& b,
                                        const BivariateSeries<Real>& phi) const;
  JointEntropyCheck joint_entropy_check(const ProbabilityDistribution& a, const ProbabilityDistribution& b) const;

 private:
  Real zeta(Real x, ZetaPath path) const;
  Real zeta_prime(Real x, ZetaPath path) const;

  std::shared_ptr<const ZetaModel> model_;
  Real a_;
  Real zeta_a_exact_;
  Real zeta_a_series_;
  Real normalizer_exact_;
  Real normalizer_series_;
};

/// Batch entropies (parallel over distributions, one result per input).
std::vector<Real> entropy_batch(const IharaEntropy& entropy, std::span<const ProbabilityDistribution> dists);
std::vector<Real> entropy_batch_serial(const IharaEntropy& entropy, std::span<const ProbabilityDistribution> dists);

}  // namespace ihara
