#include "ihara/line_graph.hpp"

#include "ihara/error.hpp"

#include <algorithm>
#include <cmath>

#include <omp.h>

namespace ihara {

OrientedLineGraph::OrientedLineGraph(DirectedEdgeSet edges) : edges_(std::move(edges)), successors_(edges_.size()) {
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const DirectedEdge& from = edges_[e];
    for (std::size_t f : edges_.outgoing(from.head)) {
      if (edges_[f].head != from.tail) successors_[e].push_back(f);
    }
    arc_count_ += successors_[e].size();
  }
}

bool OrientedLineGraph::adjacent(std::size_t from, std::size_t to) const {
  const auto& s = successors_.at(from);
  return std::binary_search(s.begin(), s.end(), to);
}

std::vector<std::vector<int>> OrientedLineGraph::dense_matrix() const {
  std::vector<std::vector<int>> t(size(), std::vector<int>(size(), 0));
  for (std::size_t e = 0; e < size(); ++e)
    for (std::size_t f : successors_[e]) t[e][f] = 1;
  return t;
}

OrientedLineGraph build_line_graph(DirectedEdgeSet edges) { return OrientedLineGraph(std::move(edges)); }

OrientedLineGraph build_line_graph(const Graph& g) { return OrientedLineGraph(orientations(g)); }

TraceVector traces(const OrientedLineGraph& olg, std::size_t max_power) {
  const std::size_t n = olg.size();
  // diagonal[e][k-1] = (T^k)_{ee}; summed afterwards in index order.
  std::vector<std::vector<BigInt>> diagonal(n, std::vector<BigInt>(max_power));

#pragma omp parallel for schedule(dynamic)
  for (std::size_t e = 0; e < n; ++e) {
    // Row vector r = e_e^T T^k, advanced by r_{k+1}[f] = sum_{g -> f} r_k[g].
    std::vector<BigInt> row(n), next(n);
    row[e] = 1;
    for (std::size_t k = 1; k <= max_power; ++k) {
      std::fill(next.begin(), next.end(), BigInt(0));
      for (std::size_t g = 0; g < n; ++g) {
        if (row[g] == 0) continue;
        for (std::size_t f : olg.successors(g)) next[f] += row[g];
      }
      std::swap(row, next);
      diagonal[e][k - 1] = row[e];
    }
  }

  TraceVector tv;
  tv.values.assign(max_power, BigInt(0));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t k = 0; k < max_power; ++k) tv.values[k] += diagonal[e][k];
  return tv;
}

TraceVector traces_serial(const OrientedLineGraph& olg, std::size_t max_power) {
  const std::size_t n = olg.size();
  using Matrix = std::vector<std::vector<BigInt>>;
  Matrix t(n, std::vector<BigInt>(n));
  for (std::size_t e = 0; e < n; ++e)
    for (std::size_t f : olg.successors(e)) t[e][f] = 1;

  TraceVector tv;
  Matrix power = t;
  for (std::size_t k = 1; k <= max_power; ++k) {
    if (k > 1) {
      Matrix next(n, std::vector<BigInt>(n));
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          if (power[i][j] == 0) continue;
          for (std::size_t l : olg.successors(j)) next[i][l] += power[i][j];
        }
      power = std::move(next);
    }
    BigInt trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += power[i][i];
    tv.values.push_back(trace);
  }
  return tv;
}

namespace {

// y = (T + I) x.
void shifted_product(const OrientedLineGraph& olg, const std::vector<Real>& x, std::vector<Real>& y, bool parallel) {
  const std::size_t n = olg.size();
#pragma omp parallel for if (parallel) schedule(static)
  for (std::size_t e = 0; e < n; ++e) {
    Real acc = x[e];
    for (std::size_t f : olg.successors(e)) acc += x[f];
    y[e] = acc;
  }
}

Real norm2(const std::vector<Real>& v) {
  Real s = 0;
  for (Real x : v) s += x * x;
  return std::sqrt(s);
}

SpectralRadius power_iteration(const OrientedLineGraph& olg, const PowerIterationOptions& options, bool parallel) {
  if (!(options.tolerance > 0)) throw Error(ErrorKind::InvalidParams, "power iteration tolerance must be positive");
  const std::size_t n = olg.size();
  if (n == 0) throw Error(ErrorKind::InvalidParams, "empty oriented line graph");

  std::vector<Real> v(n, 1), w(n);
  Real scale = norm2(v);
  for (Real& x : v) x /= scale;

  SpectralRadius out;
  out.tolerance = options.tolerance;
  for (std::size_t it = 1; it <= options.max_iterations; ++it) {
    shifted_product(olg, v, w, parallel);
    // Rayleigh quotient of T at unit v; residual of T v - lambda v.
    Real rq = 0;
    for (std::size_t i = 0; i < n; ++i) rq += v[i] * (w[i] - v[i]);
    Real residual = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const Real r = (w[i] - v[i]) - rq * v[i];
      residual += r * r;
    }
    residual = std::sqrt(residual);
    out.lambda = rq;
    out.residual = residual;
    out.iterations = it;
    if (residual <= options.tolerance) return out;
    scale = norm2(w);
    for (std::size_t i = 0; i < n; ++i) v[i] = w[i] / scale;
  }
  throw Error(ErrorKind::NoConvergence,
              "power iteration residual " + format_real(out.residual, 6) + " after " +
                  std::to_string(options.max_iterations) + " iterations");
}

}  // namespace

SpectralRadius spectral_radius(const OrientedLineGraph& olg, const PowerIterationOptions& options) {
  return power_iteration(olg, options, olg.size() >= 256);
}

SpectralRadius spectral_radius_serial(const OrientedLineGraph& olg, const PowerIterationOptions& options) {
  return power_iteration(olg, options, false);
}

Real trace_lower_bound(const TraceVector& tv, std::size_t dimension) {
  if (dimension == 0) return 0;
  Real best = 0;
  for (std::size_t k = 1; k <= tv.max_power(); ++k) {
    if (tv[k] <= 0) continue;
    const Real root = std::pow(to_real(Rational(tv[k], BigInt(dimension))), Real(1) / static_cast<Real>(k));
    best = std::max(best, root);
  }
  return best;
}

}  // namespace ihara
