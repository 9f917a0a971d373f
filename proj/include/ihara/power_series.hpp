#pragma once

// Truncated formal power series a_0 + a_1 x + ... + a_N x^N.
//
// Coefficients are either exact (Rational) or working-precision reals. All
// operations are exact modulo x^(N+1) when the coefficient type is exact.

#include "ihara/error.hpp"
#include "ihara/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace ihara {

template <typename T>
struct coefficient_traits {
  static constexpr bool exact = false;
  static T abs(const T& x) { return x < T(0) ? -x : x; }
};

template <>
struct coefficient_traits<Rational> {
  static constexpr bool exact = true;
  static Rational abs(const Rational& x) { return boost::multiprecision::abs(x); }
};

template <typename T>
class TruncatedSeries {
 public:
  using value_type = T;

  explicit TruncatedSeries(std::size_t order = 0) : coeffs_(order + 1, T(0)) {}

  /// Missing coefficients are zero; coefficients past `order` are dropped.
  TruncatedSeries(std::size_t order, std::vector<T> coeffs) : coeffs_(std::move(coeffs)) {
    coeffs_.resize(order + 1, T(0));
  }

  static TruncatedSeries constant(std::size_t order, const T& c) {
    TruncatedSeries s(order);
    s.coeffs_[0] = c;
    return s;
  }

  /// The series x.
  static TruncatedSeries identity(std::size_t order) {
    TruncatedSeries s(order);
    if (order >= 1) s.coeffs_[1] = T(1);
    return s;
  }

  std::size_t order() const noexcept { return coeffs_.size() - 1; }
  const T& operator[](std::size_t i) const { return coeffs_.at(i); }
  T& operator[](std::size_t i) { return coeffs_.at(i); }
  const std::vector<T>& coefficients() const noexcept { return coeffs_; }

  /// Same coefficients at a different truncation order.
  TruncatedSeries truncated(std::size_t order) const { return TruncatedSeries(order, coeffs_); }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::vector<T> coeffs_;
};

namespace series {

namespace detail {

template <typename T>
void require_same_order(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  if (a.order() != b.order()) {
    throw Error(ErrorKind::OrderMismatch,
                "orders " + std::to_string(a.order()) + " and " + std::to_string(b.order()));
  }
}

template <typename T>
bool is_zero(const T& x) {
  return x == T(0);
}

}  // namespace detail

template <typename T>
TruncatedSeries<T> add(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  TruncatedSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] + b[i];
  return r;
}

template <typename T>
TruncatedSeries<T> subtract(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  TruncatedSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] - b[i];
  return r;
}

template <typename T>
TruncatedSeries<T> scale(const TruncatedSeries<T>& a, const T& factor) {
  TruncatedSeries<T> r(a.order());
  for (std::size_t i = 0; i <= a.order(); ++i) r[i] = a[i] * factor;
  return r;
}

/// Cauchy product truncated at the common order.
template <typename T>
TruncatedSeries<T> multiply(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  const std::size_t n = a.order();
  TruncatedSeries<T> r(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (detail::is_zero(a[i])) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (detail::is_zero(b[j])) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return r;
}

/// 1 / a; requires a_0 != 0.
template <typename T>
TruncatedSeries<T> reciprocal(const TruncatedSeries<T>& a) {
  if (detail::is_zero(a[0])) throw Error(ErrorKind::NotInvertible, "reciprocal of a series with zero constant term");
  const std::size_t n = a.order();
  TruncatedSeries<T> r(n);
  r[0] = T(1) / a[0];
  for (std::size_t k = 1; k <= n; ++k) {
    T acc(0);
    for (std::size_t j = 1; j <= k; ++j) {
      if (!detail::is_zero(a[j])) acc += a[j] * r[k - j];
    }
    r[k] = -acc / a[0];
  }
  return r;
}

template <typename T>
TruncatedSeries<T> derivative(const TruncatedSeries<T>& a) {
  TruncatedSeries<T> r(a.order());
  for (std::size_t i = 1; i <= a.order(); ++i) r[i - 1] = a[i] * T(static_cast<long>(i));
  return r;
}

/// exp(a) from n b_n = sum_{k=1}^{n} k a_k b_{n-k}, the coefficient form of
/// (exp a)' = a' exp a.
template <typename T>
TruncatedSeries<T> exp(const TruncatedSeries<T>& a) {
  if (!detail::is_zero(a[0])) throw Error(ErrorKind::NonzeroConstantTerm, "exp needs a_0 = 0");
  const std::size_t n = a.order();
  TruncatedSeries<T> b(n);
  b[0] = T(1);
  for (std::size_t m = 1; m <= n; ++m) {
    T acc(0);
    for (std::size_t k = 1; k <= m; ++k) {
      if (!detail::is_zero(a[k])) acc += T(static_cast<long>(k)) * a[k] * b[m - k];
    }
    b[m] = acc / T(static_cast<long>(m));
  }
  return b;
}

/// outer(inner(x)) by Horner's rule over truncated products.
template <typename T>
TruncatedSeries<T> compose(const TruncatedSeries<T>& outer, const TruncatedSeries<T>& inner) {
  detail::require_same_order(outer, inner);
  if (!detail::is_zero(inner[0])) {
    throw Error(ErrorKind::InnerConstantNonzero, "inner series of a composition must have zero constant term");
  }
  const std::size_t n = outer.order();
  TruncatedSeries<T> r = TruncatedSeries<T>::constant(n, outer[n]);
  for (std::size_t k = n; k-- > 0;) {
    r = multiply(r, inner);
    r[0] += outer[k];
  }
  return r;
}

/// Compositional inverse by Lagrange inversion:
///   [x^n] F = (1/n) [x^(n-1)] (x / T(x))^n.
/// Requires t_0 = 0 and t_1 != 0. A unit linear coefficient is the usual
/// formal-group normalization; other nonzero values are accepted as well.
template <typename T>
TruncatedSeries<T> inverse_composition(const TruncatedSeries<T>& t) {
  const std::size_t n = t.order();
  if (!detail::is_zero(t[0])) throw Error(ErrorKind::NotInvertible, "t_0 != 0");
  if (n == 0) return TruncatedSeries<T>(0);
  if (detail::is_zero(t[1])) throw Error(ErrorKind::NotInvertible, "t_1 = 0, no compositional inverse");

  // t(x)/x, valid through order n-1.
  TruncatedSeries<T> shifted(n - 1);
  for (std::size_t i = 0; i + 1 <= n; ++i) shifted[i] = t[i + 1];
  const TruncatedSeries<T> h = reciprocal(shifted);

  TruncatedSeries<T> f(n);
  TruncatedSeries<T> power = TruncatedSeries<T>::constant(n - 1, T(1));
  for (std::size_t k = 1; k <= n; ++k) {
    power = multiply(power, h);
    f[k] = power[k - 1] / T(static_cast<long>(k));
  }
  return f;
}

/// Re-expansion of the polynomial p about `center`: coefficients of p(center + y).
template <typename T>
TruncatedSeries<T> taylor_shift(const TruncatedSeries<T>& p, const T& center) {
  const std::size_t n = p.order();
  std::vector<T> c = p.coefficients();
  // Repeated synthetic division; exact for rational coefficients.
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = n; j-- > i;) c[j] += center * c[j + 1];
  }
  return TruncatedSeries<T>(n, std::move(c));
}

/// exp(scale * x) - 1.
template <typename T>
TruncatedSeries<T> exp_minus_one(std::size_t order, const T& rate) {
  TruncatedSeries<T> r(order);
  T term(1);
  for (std::size_t k = 1; k <= order; ++k) {
    term = term * rate / T(static_cast<long>(k));
    r[k] = term;
  }
  return r;
}

/// Polynomial value at x (Horner).
template <typename T>
T evaluate(const TruncatedSeries<T>& s, const T& x) {
  T acc(0);
  for (std::size_t k = s.order() + 1; k-- > 0;) acc = acc * x + s[k];
  return acc;
}

template <typename T>
TruncatedSeries<Real> to_real(const TruncatedSeries<T>& s) {
  TruncatedSeries<Real> r(s.order());
  for (std::size_t i = 0; i <= s.order(); ++i) {
    if constexpr (std::is_same_v<T, Rational>) {
      r[i] = ihara::to_real(s[i]);
    } else {
      r[i] = static_cast<Real>(s[i]);
    }
  }
  return r;
}

/// Largest |a_i - b_i|.
template <typename T>
T max_abs_difference(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  detail::require_same_order(a, b);
  T worst(0);
  for (std::size_t i = 0; i <= a.order(); ++i) {
    T d = coefficient_traits<T>::abs(a[i] - b[i]);
    if (d > worst) worst = d;
  }
  return worst;
}

/// Coefficients as decimal strings; exact rationals as "p/q".
template <typename T>
std::vector<std::string> to_strings(const TruncatedSeries<T>& s) {
  std::vector<std::string> out;
  out.reserve(s.order() + 1);
  for (const auto& c : s.coefficients()) {
    if constexpr (std::is_same_v<T, Rational>) {
      out.push_back(ihara::to_string(c));
    } else {
      out.push_back(format_real(static_cast<Real>(c)));
    }
  }
  return out;
}

}  // namespace series

template <typename T>
TruncatedSeries<T> operator+(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return series::add(a, b);
}
template <typename T>
TruncatedSeries<T> operator-(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return series::subtract(a, b);
}
template <typename T>
TruncatedSeries<T> operator*(const TruncatedSeries<T>& a, const TruncatedSeries<T>& b) {
  return series::multiply(a, b);
}

}  // namespace ihara
