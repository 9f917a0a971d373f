#pragma once

// One-dimensional formal group law Phi(s1, s2) = G(F(s1) + F(s2)) built from
// a logarithm G and its compositional inverse F, plus coefficientwise checks
// of the group-law axioms.

#include "ihara/multi_series.hpp"
#include "ihara/power_series.hpp"

#include <algorithm>
#include <cstddef>
#include <limits>

namespace ihara {

/// Largest coefficient deviation accepted by the checks below. Exact
/// coefficient types use zero.
template <typename T>
T default_law_tolerance() {
  if constexpr (coefficient_traits<T>::exact) {
    return T(0);
  } else {
    return T(1e-12L);
  }
}

/// Throws InversePairMismatch unless G(F(x)) = x to the common order, within
/// `tolerance` per coefficient (relative to max(1, |coefficient|) scale).
template <typename T>
void require_inverse_pair(const TruncatedSeries<T>& log, const TruncatedSeries<T>& exp_map, const T& tolerance) {
  const std::size_t n = std::min(log.order(), exp_map.order());
  const auto composed = series::compose(log.truncated(n), exp_map.truncated(n));
  const auto identity = TruncatedSeries<T>::identity(n);
  const T deviation = series::max_abs_difference(composed, identity);
  if (deviation > tolerance) {
    throw Error(ErrorKind::InversePairMismatch, "G(F(x)) differs from x");
  }
}

template <typename T>
BivariateSeries<T> lazard_law(const TruncatedSeries<T>& log, const TruncatedSeries<T>& exp_map, std::size_t order,
                              const T& tolerance = default_law_tolerance<T>()) {
  require_inverse_pair(log, exp_map, tolerance);
  const std::size_t n = std::min({order, log.order(), exp_map.order()});
  const auto sum = BivariateSeries<T>::embed(exp_map, 0, n) + BivariateSeries<T>::embed(exp_map, 1, n);
  return series::compose(log.truncated(n), sum);
}

template <typename T>
struct GroupLawChecks {
  std::size_t order = 0;
  std::size_t associativity_order = 0;
  bool leading_terms = false;  ///< Phi = s1 + s2 + (degree >= 2)
  bool unit = false;           ///< Phi(s, 0) = Phi(0, s) = s
  bool commutative = false;
  bool associative = false;
  T max_deviation = T(0);

  bool all_pass() const noexcept { return leading_terms && unit && commutative && associative; }
};

/// Checks the axioms coefficientwise up to `order`. Associativity, a
/// three-variable substitution, stops at `associativity_order`.
template <typename T>
GroupLawChecks<T> check_group_law(const BivariateSeries<T>& phi, std::size_t order,
                                  const T& tolerance = default_law_tolerance<T>(),
                                  std::size_t associativity_order = std::numeric_limits<std::size_t>::max()) {
  using Ex = Exponents<2>;
  const std::size_t n = std::min(order, phi.order());
  GroupLawChecks<T> out;
  out.order = n;
  auto abs = [](const T& x) { return coefficient_traits<T>::abs(x); };
  auto note = [&](const T& d) {
    if (d > out.max_deviation) out.max_deviation = d;
    return d <= tolerance;
  };

  out.leading_terms = note(abs(phi[Ex{0, 0}]));
  if (n >= 1) {
    out.leading_terms = note(abs(phi[Ex{1, 0}] - T(1))) && out.leading_terms;
    out.leading_terms = note(abs(phi[Ex{0, 1}] - T(1))) && out.leading_terms;
  }

  out.unit = true;
  for (unsigned i = 0; i <= n; ++i) {
    const T expected = i == 1 ? T(1) : T(0);
    out.unit = note(abs(phi[Ex{i, 0}] - expected)) && out.unit;
    out.unit = note(abs(phi[Ex{0, i}] - expected)) && out.unit;
  }

  out.commutative = true;
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = 0; i + j <= n; ++j) out.commutative = note(abs(phi[Ex{i, j}] - phi[Ex{j, i}])) && out.commutative;
  }

  // Phi(Phi(s1, s2), s3) against Phi(s1, Phi(s2, s3)) in three variables.
  const std::size_t na = std::min(n, associativity_order);
  out.associativity_order = na;
  BivariateSeries<T> law(na);
  for (unsigned i = 0; i <= na; ++i) {
    for (unsigned j = 0; i + j <= na; ++j) law[Ex{i, j}] = phi[Ex{i, j}];
  }
  using Tri = MultiSeries<T, 3>;
  auto lift = [&](const BivariateSeries<T>& b, std::size_t first, std::size_t second) {
    Tri r(na);
    for (unsigned i = 0; i <= na; ++i) {
      for (unsigned j = 0; i + j <= na; ++j) {
        Exponents<3> e{};
        e[first] = i;
        e[second] = j;
        r[e] = b[Ex{i, j}];
      }
    }
    return r;
  };
  const Tri left = series::substitute(law, lift(law, 0, 1), Tri::variable(2, na));
  const Tri right = series::substitute(law, Tri::variable(0, na), lift(law, 1, 2));
  out.associative = true;
  for (std::size_t i = 0; i < left.size(); ++i) {
    out.associative = note(abs(left.coefficient(i) - right.coefficient(i))) && out.associative;
  }
  return out;
}

}  // namespace ihara
