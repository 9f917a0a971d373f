#include "ihara/entropy.hpp"

#include "ihara/error.hpp"

#include <json.hpp>

#include <cmath>
#include <cstdlib>
#include <limits>
#include <sstream>
#include <string>

#include <omp.h>

namespace ihara {

ProbabilityDistribution::ProbabilityDistribution(std::vector<Real> p) : p_(std::move(p)) {
  if (p_.empty()) throw Error(ErrorKind::InvalidDistribution, "empty distribution");
  Real sum = 0;
  for (Real x : p_) {
    if (!std::isfinite(x) || x < 0) {
      throw Error(ErrorKind::InvalidDistribution, "probability " + format_real(x) + " is not a finite value >= 0");
    }
    sum += x;
  }
  if (std::fabs(sum - 1) > kSumTolerance) {
    throw Error(ErrorKind::InvalidDistribution, "probabilities sum to " + format_real(sum, 21));
  }
}

ProbabilityDistribution ProbabilityDistribution::uniform(std::size_t w) {
  if (w == 0) throw Error(ErrorKind::InvalidDistribution, "uniform distribution needs at least one event");
  return ProbabilityDistribution(std::vector<Real>(w, Real(1) / static_cast<Real>(w)));
}

ProbabilityDistribution ProbabilityDistribution::product(const ProbabilityDistribution& a,
                                                         const ProbabilityDistribution& b) {
  std::vector<Real> joint;
  joint.reserve(a.size() * b.size());
  for (Real p : a.p_)
    for (Real q : b.p_) joint.push_back(p * q);
  return ProbabilityDistribution(std::move(joint));
}

ProbabilityDistribution ProbabilityDistribution::parse(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw Error(ErrorKind::InvalidDistribution, "no probabilities in input");
  std::vector<Real> values;
  if (text[first] == '[') {
    nlohmann::json parsed;
    try {
      parsed = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorKind::InvalidDistribution, std::string("malformed JSON: ") + e.what());
    }
    if (!parsed.is_array()) throw Error(ErrorKind::InvalidDistribution, "expected a JSON array");
    for (const auto& item : parsed) {
      if (item.is_number()) {
        values.push_back(item.get<double>());
      } else if (item.is_string()) {
        // Strings keep full long double precision ("0.1").
        const std::string s = item.get<std::string>();
        char* end = nullptr;
        const Real v = std::strtold(s.c_str(), &end);
        if (end == s.c_str() || *end != '\0') throw Error(ErrorKind::InvalidDistribution, "bad number '" + s + "'");
        values.push_back(v);
      } else {
        throw Error(ErrorKind::InvalidDistribution, "array entries must be numbers");
      }
    }
  } else {
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token) {
      char* end = nullptr;
      const Real v = std::strtold(token.c_str(), &end);
      if (end == token.c_str() || *end != '\0') {
        throw Error(ErrorKind::InvalidDistribution, "bad number '" + token + "'");
      }
      values.push_back(v);
    }
  }
  return ProbabilityDistribution(std::move(values));
}

ProbabilityDistribution ProbabilityDistribution::with_zero_event() const {
  std::vector<Real> p = p_;
  p.push_back(0);
  return ProbabilityDistribution(std::move(p));
}

Real shannon_entropy(const ProbabilityDistribution& p) {
  Real s = 0;
  for (Real x : p.values())
    if (x > 0) s -= x * std::log(x);
  return s;
}

Real tsallis_entropy(const ProbabilityDistribution& p, Real q) {
  if (q == 1 || !std::isfinite(q)) throw Error(ErrorKind::InvalidParams, "Tsallis index q must be finite and != 1");
  // 1 - sum p^q = (1 - sum p) - sum p (p^(q-1) - 1); the expm1 form keeps the
  // q -> 1 limit accurate.
  Real mass = 0, excess = 0;
  for (Real x : p.values()) {
    mass += x;
    if (x > 0) excess += x * std::expm1((q - 1) * std::log(x));
  }
  return ((1 - mass) - excess) / (q - 1);
}

IharaEntropy::IharaEntropy(std::shared_ptr<const ZetaModel> model, Real a) : model_(std::move(model)), a_(a) {
  if (!model_) throw Error(ErrorKind::InvalidParams, "missing zeta model");
  const Real limit = domain_limit(model_->lambda());
  if (!(a_ > 0) || !(a_ < limit)) {
    throw Error(ErrorKind::InvalidParams, "a = " + format_real(a_) + " must lie in (0, " + format_real(limit) + ")");
  }
  zeta_a_exact_ = zeta_eval_exact(model_->olg, model_->lambda(), a_);
  normalizer_exact_ = 1 + a_ * zeta_derivative_exact(model_->olg, model_->lambda(), a_);
  zeta_a_series_ = zeta_eval_series(model_->series, a_).value;
  normalizer_series_ = 1 + a_ * zeta_derivative(model_->series, a_);
}

IharaEntropy IharaEntropy::with_fraction(std::shared_ptr<const ZetaModel> model, Real fraction) {
  if (!(fraction > 0) || !(fraction < 1)) throw Error(ErrorKind::InvalidParams, "a-fraction must lie in (0, 1)");
  const Real lambda = model->lambda().lambda;
  return IharaEntropy(std::move(model), fraction / lambda);
}

Real IharaEntropy::zeta(Real x, ZetaPath path) const {
  if (path == ZetaPath::Exact) return zeta_eval_exact(model_->olg, model_->lambda(), x);
  return zeta_eval_series(model_->series, x).value;
}

Real IharaEntropy::zeta_prime(Real x, ZetaPath path) const {
  if (path == ZetaPath::Exact) return zeta_derivative_exact(model_->olg, model_->lambda(), x);
  return zeta_derivative(model_->series, x);
}

Real IharaEntropy::normalizer(ZetaPath path) const {
  return path == ZetaPath::Exact ? normalizer_exact_ : normalizer_series_;
}

Real IharaEntropy::g_of_log_inv_p(Real p, ZetaPath path) const {
  if (!(p >= 0) || !(p <= 1)) throw Error(ErrorKind::InvalidParams, "p = " + format_real(p) + " outside [0, 1]");
  const Real zeta_a = path == ZetaPath::Exact ? zeta_a_exact_ : zeta_a_series_;
  const Real zeta_ap = p == 1 ? zeta_a : zeta(a_ * p, path);
  return ((zeta_a + 1) - (zeta_ap + p)) / normalizer(path);
}

Real IharaEntropy::term(Real p, ZetaPath path) const {
  if (p == 0) return 0;
  return p * g_of_log_inv_p(p, path);
}

Real IharaEntropy::h(Real p) const {
  if (!(p >= 0) || !(p <= 1)) throw Error(ErrorKind::InvalidParams, "p = " + format_real(p) + " outside [0, 1]");
  const Real x = a_ * p;
  const Real zeta_ap = p == 1 ? zeta_a_exact_ : zeta(x, ZetaPath::Exact);
  return 1 + zeta_a_exact_ - 2 * p - zeta_ap - x * zeta_prime(x, ZetaPath::Exact);
}

EntropyReport IharaEntropy::entropy(const ProbabilityDistribution& dist, ZetaPath path) const {
  EntropyReport report;
  report.terms.reserve(dist.size());
  for (Real p : dist.values()) {
    report.terms.push_back(term(p, path));
    report.entropy += report.terms.back();
  }
  report.a = a_;
  report.order = model_->series.order();
  report.lambda = model_->lambda().lambda;
  report.shannon = shannon_entropy(dist);
  return report;
}

MaximizerResult IharaEntropy::maximizer(Real tol, std::size_t max_iterations) const {
  if (!(tol > 0)) throw Error(ErrorKind::InvalidParams, "bisection tolerance must be positive");
  // h(0) = zeta(a) > 0 and h(1) = -(1 + a zeta'(a)) < 0; h is strictly decreasing.
  Real lo = 0, hi = 1;
  MaximizerResult best;
  best.c = 0.5L;
  best.h_at_c = h(best.c);
  for (std::size_t it = 1; it <= max_iterations; ++it) {
    const Real mid = lo + (hi - lo) / 2;
    const Real value = h(mid);
    best = MaximizerResult{mid, value, it};
    if (std::fabs(value) <= tol) break;
    if (value > 0) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= std::numeric_limits<Real>::epsilon() * hi) break;
  }
  return best;
}

TruncatedSeries<Real> IharaEntropy::log_series() const {
  return formal_group_log_series<Real>(model_->series, a_, model_->series.order());
}

BivariateSeries<Real> IharaEntropy::group_law(std::size_t order) const {
  const auto log = log_series();
  const auto exp_map = series::inverse_composition(log);
  return lazard_law(log, exp_map, order, Real(1e-9L));
}

JointEntropyCheck IharaEntropy::joint_entropy_check(const ProbabilityDistribution& a,
                                                    const ProbabilityDistribution& b,
                                                    const BivariateSeries<Real>& phi) const {
  JointEntropyCheck out;
  out.direct = entropy(ProbabilityDistribution::product(a, b)).entropy;
  std::vector<Real> sb(b.size());
  for (std::size_t j = 0; j < b.size(); ++j) sb[j] = b[j] > 0 ? g_of_log_inv_p(b[j]) : 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    const Real si = g_of_log_inv_p(a[i]);
    for (std::size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      out.via_phi += a[i] * b[j] * phi.evaluate({si, sb[j]});
    }
  }
  out.delta = std::fabs(out.direct - out.via_phi);
  return out;
}

JointEntropyCheck IharaEntropy::joint_entropy_check(const ProbabilityDistribution& a,
                                                    const ProbabilityDistribution& b) const {
  return joint_entropy_check(a, b, group_law(model_->series.order()));
}

std::vector<Real> entropy_batch(const IharaEntropy& entropy, std::span<const ProbabilityDistribution> dists) {
  std::vector<Real> out(dists.size());
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < dists.size(); ++i) out[i] = entropy.entropy(dists[i]).entropy;
  return out;
}

std::vector<Real> entropy_batch_serial(const IharaEntropy& entropy, std::span<const ProbabilityDistribution> dists) {
  std::vector<Real> out(dists.size());
  for (std::size_t i = 0; i < dists.size(); ++i) out[i] = entropy.entropy(dists[i]).entropy;
  return out;
}

}  // namespace ihara
