#pragma once

#include "ihara/graph.hpp"
#include "ihara/numeric.hpp"

#include <cstddef>
#include <vector>

namespace ihara {

/// Non-backtracking successor structure on the 2m directed edges:
/// e -> f iff head(e) == tail(f) and tail(e) != head(f).
class OrientedLineGraph {
 public:
  explicit OrientedLineGraph(DirectedEdgeSet edges);

  std::size_t size() const noexcept { return successors_.size(); }
  const DirectedEdgeSet& edge_set() const noexcept { return edges_; }

  /// Successor indices of directed edge e, ascending.
  const std::vector<std::size_t>& successors(std::size_t e) const { return successors_.at(e); }

  bool adjacent(std::size_t from, std::size_t to) const;

  /// Row-major 0/1 matrix T.
  std::vector<std::vector<int>> dense_matrix() const;

  std::size_t arc_count() const noexcept { return arc_count_; }

 private:
  DirectedEdgeSet edges_;
  std::vector<std::vector<std::size_t>> successors_;
  std::size_t arc_count_ = 0;
};

OrientedLineGraph build_line_graph(DirectedEdgeSet edges);
OrientedLineGraph build_line_graph(const Graph& g);

/// trace(T^1) .. trace(T^K), exact.
struct TraceVector {
  std::vector<BigInt> values;  ///< values[k-1] = trace(T^k)

  std::size_t max_power() const noexcept { return values.size(); }
  const BigInt& operator[](std::size_t k) const { return values.at(k - 1); }
};

/// Parallel over basis vectors: (T^k)_{ee} from repeated sparse
/// products starting at the unit vector of e.
TraceVector traces(const OrientedLineGraph& olg, std::size_t max_power);

/// Serial reference: dense exact matrix powers.
TraceVector traces_serial(const OrientedLineGraph& olg, std::size_t max_power);

struct PowerIterationOptions {
  Real tolerance = 1e-12L;
  std::size_t max_iterations = 100000;
};

struct SpectralRadius {
  Real lambda = 0;
  Real residual = 0;  ///< ||T v - lambda v|| / ||v|| at exit
  Real tolerance = 0;
  std::size_t iterations = 0;
};

/// Perron root of T by power iteration from the all-ones vector. The
/// iteration runs on T + I, which has the same Perron vector and a strictly
/// dominant eigenvalue even when T is periodic (bipartite graphs).
SpectralRadius spectral_radius(const OrientedLineGraph& olg, const PowerIterationOptions& options = {});

/// Single-threaded version of the same iteration; results are identical.
SpectralRadius spectral_radius_serial(const OrientedLineGraph& olg,
                                      const PowerIterationOptions& options = {});

/// max_k (trace(T^k) / dimension)^(1/k). trace(T^k) <= dimension * lambda^k,
/// so this never exceeds lambda.
Real trace_lower_bound(const TraceVector& tv, std::size_t dimension);

}  // namespace ihara
