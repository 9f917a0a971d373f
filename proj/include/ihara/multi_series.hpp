#pragma once

// Multivariate series truncated at total degree N, stored densely over the
// monomials of total degree <= N. Used for the formal group law (two
// variables) and its associativity check (three variables).

#include "ihara/power_series.hpp"

#include <array>
#include <cstddef>
#include <memory>
#include <numeric>
#include <vector>

namespace ihara {

template <std::size_t Vars>
using Exponents = std::array<unsigned, Vars>;

namespace detail {

/// Monomials of total degree <= N, ordered by degree, with a dense lookup
/// table. Exponent vectors add componentwise, so dense indices add too.
template <std::size_t Vars>
class MonomialTable {
 public:
  explicit MonomialTable(std::size_t order) : order_(order) {
    std::size_t dense = 1;
    for (std::size_t v = 0; v < Vars; ++v) {
      stride_[v] = dense;
      dense *= order + 1;
    }
    compact_.assign(dense, npos);
    for (std::size_t d = 0; d <= order; ++d) {
      Exponents<Vars> e{};
      enumerate(e, 0, d);
      degree_end_.push_back(monomials_.size());
    }
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  std::size_t order() const noexcept { return order_; }
  std::size_t size() const noexcept { return monomials_.size(); }
  const Exponents<Vars>& monomial(std::size_t i) const { return monomials_[i]; }
  std::size_t dense_index(std::size_t i) const { return dense_[i]; }
  std::size_t degree(std::size_t i) const { return degree_[i]; }
  /// Number of monomials with total degree <= d.
  std::size_t count_up_to(std::size_t d) const { return degree_end_[d]; }

  std::size_t index(const Exponents<Vars>& e) const {
    std::size_t total = 0, dense = 0;
    for (std::size_t v = 0; v < Vars; ++v) {
      total += e[v];
      dense += e[v] * stride_[v];
    }
    if (total > order_) return npos;
    return compact_[dense];
  }
  std::size_t from_dense(std::size_t dense) const { return compact_[dense]; }

 private:
  void enumerate(Exponents<Vars>& e, std::size_t var, std::size_t remaining) {
    if (var + 1 == Vars) {
      e[var] = static_cast<unsigned>(remaining);
      std::size_t dense = 0, total = 0;
      for (std::size_t v = 0; v < Vars; ++v) {
        dense += e[v] * stride_[v];
        total += e[v];
      }
      compact_[dense] = monomials_.size();
      monomials_.push_back(e);
      dense_.push_back(dense);
      degree_.push_back(total);
      return;
    }
    for (std::size_t k = remaining + 1; k-- > 0;) {
      e[var] = static_cast<unsigned>(k);
      enumerate(e, var + 1, remaining - k);
    }
  }

  std::size_t order_;
  std::array<std::size_t, Vars> stride_{};
  std::vector<std::size_t> compact_;
  std::vector<Exponents<Vars>> monomials_;
  std::vector<std::size_t> dense_;
  std::vector<std::size_t> degree_;
  std::vector<std::size_t> degree_end_;
};

}  // namespace detail

template <typename T, std::size_t Vars>
class MultiSeries {
 public:
  explicit MultiSeries(std::size_t order)
      : table_(std::make_shared<const detail::MonomialTable<Vars>>(order)), coeffs_(table_->size(), T(0)) {}

  std::size_t order() const noexcept { return table_->order(); }
  std::size_t size() const noexcept { return coeffs_.size(); }

  const T& operator[](const Exponents<Vars>& e) const { return coeffs_.at(checked(e)); }
  T& operator[](const Exponents<Vars>& e) { return coeffs_.at(checked(e)); }

  /// Coefficient of the i-th monomial in degree order.
  const T& coefficient(std::size_t i) const { return coeffs_[i]; }
  T& coefficient(std::size_t i) { return coeffs_[i]; }
  const Exponents<Vars>& monomial(std::size_t i) const { return table_->monomial(i); }

  /// Single-variable series placed in variable `var`.
  static MultiSeries embed(const TruncatedSeries<T>& s, std::size_t var, std::size_t order) {
    MultiSeries r(order);
    for (std::size_t k = 0; k <= std::min(order, s.order()); ++k) {
      Exponents<Vars> e{};
      e[var] = static_cast<unsigned>(k);
      r[e] = s[k];
    }
    return r;
  }

  static MultiSeries variable(std::size_t var, std::size_t order) {
    MultiSeries r(order);
    if (order >= 1) {
      Exponents<Vars> e{};
      e[var] = 1;
      r[e] = T(1);
    }
    return r;
  }

  friend MultiSeries operator+(const MultiSeries& a, const MultiSeries& b) {
    a.require_same_order(b);
    MultiSeries r = a;
    for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] += b.coeffs_[i];
    return r;
  }

  MultiSeries scaled(const T& factor) const {
    MultiSeries r = *this;
    for (auto& c : r.coeffs_) c *= factor;
    return r;
  }

  void add_constant(const T& c) { coeffs_[0] += c; }

  /// Truncated product; zero coefficients are skipped.
  friend MultiSeries operator*(const MultiSeries& a, const MultiSeries& b) {
    a.require_same_order(b);
    const auto& table = *a.table_;
    const std::size_t n = table.order();
    MultiSeries r(a.table_);
    for (std::size_t i = 0; i < table.size(); ++i) {
      const T& ai = a.coeffs_[i];
      if (ai == T(0)) continue;
      const std::size_t limit = table.count_up_to(n - table.degree(i));
      const std::size_t di = table.dense_index(i);
      for (std::size_t j = 0; j < limit; ++j) {
        const T& bj = b.coeffs_[j];
        if (bj == T(0)) continue;
        r.coeffs_[table.from_dense(di + table.dense_index(j))] += ai * bj;
      }
    }
    return r;
  }

  friend bool operator==(const MultiSeries& a, const MultiSeries& b) {
    return a.order() == b.order() && a.coeffs_ == b.coeffs_;
  }

  /// Value at a point (working precision).
  Real evaluate(const std::array<Real, Vars>& point) const {
    Real acc = 0;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
      Real term = to_real_value(coeffs_[i]);
      if (term == 0) continue;
      const auto& e = table_->monomial(i);
      for (std::size_t v = 0; v < Vars; ++v) {
        for (unsigned k = 0; k < e[v]; ++k) term *= point[v];
      }
      acc += term;
    }
    return acc;
  }

 private:
  explicit MultiSeries(std::shared_ptr<const detail::MonomialTable<Vars>> table)
      : table_(std::move(table)), coeffs_(table_->size(), T(0)) {}

  static Real to_real_value(const T& x) {
    if constexpr (std::is_same_v<T, Rational>) {
      return ihara::to_real(x);
    } else {
      return static_cast<Real>(x);
    }
  }

  std::size_t checked(const Exponents<Vars>& e) const {
    const std::size_t i = table_->index(e);
    if (i == detail::MonomialTable<Vars>::npos) throw Error(ErrorKind::OrderMismatch, "monomial above truncation degree");
    return i;
  }

  void require_same_order(const MultiSeries& other) const {
    if (order() != other.order()) throw Error(ErrorKind::OrderMismatch, "multivariate series orders differ");
  }

  std::shared_ptr<const detail::MonomialTable<Vars>> table_;
  std::vector<T> coeffs_;
};

template <typename T>
using BivariateSeries = MultiSeries<T, 2>;

namespace series {

/// outer(inner) for univariate `outer` and multivariate `inner` with zero
/// constant term.
template <typename T, std::size_t Vars>
MultiSeries<T, Vars> compose(const TruncatedSeries<T>& outer, const MultiSeries<T, Vars>& inner) {
  if (inner.coefficient(0) != T(0)) {
    throw Error(ErrorKind::InnerConstantNonzero, "inner series of a composition must have zero constant term");
  }
  const std::size_t n = std::min(outer.order(), inner.order());
  MultiSeries<T, Vars> r(inner.order());
  r.add_constant(outer[n]);
  for (std::size_t k = n; k-- > 0;) {
    r = r * inner;
    r.add_constant(outer[k]);
  }
  return r;
}

/// outer(x, y) for bivariate `outer` and arguments in `Vars` variables.
template <typename T, std::size_t Vars>
MultiSeries<T, Vars> substitute(const BivariateSeries<T>& outer, const MultiSeries<T, Vars>& x,
                                const MultiSeries<T, Vars>& y) {
  const std::size_t n = std::min(outer.order(), x.order());
  if (x.coefficient(0) != T(0) || y.coefficient(0) != T(0)) {
    throw Error(ErrorKind::InnerConstantNonzero, "substituted series must have zero constant term");
  }
  std::vector<MultiSeries<T, Vars>> y_powers;
  y_powers.reserve(n + 1);
  MultiSeries<T, Vars> one(x.order());
  one.add_constant(T(1));
  y_powers.push_back(one);
  for (std::size_t j = 1; j <= n; ++j) y_powers.push_back(y_powers.back() * y);

  // Horner in x over the polynomials sum_j phi_ij y^j.
  MultiSeries<T, Vars> r(x.order());
  for (std::size_t i = n + 1; i-- > 0;) {
    if (i != n) r = r * x;
    for (std::size_t j = 0; i + j <= n; ++j) {
      const T& c = outer[Exponents<2>{static_cast<unsigned>(i), static_cast<unsigned>(j)}];
      if (c == T(0)) continue;
      r = r + y_powers[j].scaled(c);
    }
  }
  return r;
}

}  // namespace series

}  // namespace ihara
