#pragma once

#include "ihara/line_graph.hpp"
#include "ihara/power_series.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

namespace ihara {

/// Rotation class of a primitive closed non-backtracking walk, stored as
/// its lexicographically least rotation of directed-edge indices.
struct PrimeCycle {
  std::vector<std::size_t> edges;

  std::size_t length() const noexcept { return edges.size(); }
  friend auto operator<=>(const PrimeCycle&, const PrimeCycle&) = default;
};

struct PrimeCycleList {
  std::size_t max_length = 0;  ///< every prime of length <= max_length is present
  std::vector<PrimeCycle> cycles;  ///< sorted by (length, edges)

  std::map<std::size_t, std::size_t> length_histogram() const;
};

struct SearchBudget {
  std::uint64_t max_steps = 10'000'000;  ///< DFS nodes visited, all threads combined
};

/// Budget from IHARA_MAX_DFS_STEPS, or the default when unset.
SearchBudget budget_from_environment();

/// Primes of length <= max_length, one DFS per starting edge (in parallel).
/// Throws BudgetExceeded.
PrimeCycleList enumerate_primes(const OrientedLineGraph& olg, std::size_t max_length,
                                const SearchBudget& budget = {});
PrimeCycleList enumerate_primes_serial(const OrientedLineGraph& olg, std::size_t max_length,
                                       const SearchBudget& budget = {});

/// Closed walks of length k in the oriented line graph, by exhaustive DFS.
BigInt count_closed_walks_bruteforce(const OrientedLineGraph& olg, std::size_t k, const SearchBudget& budget = {});
BigInt count_closed_walks_bruteforce_serial(const OrientedLineGraph& olg, std::size_t k,
                                            const SearchBudget& budget = {});

/// prod_P (1 - x^len(P))^{-1} to order N. Throws IncompletePrimeList when
/// the list was enumerated only up to a length below N.
TruncatedSeries<Rational> euler_product_series(const PrimeCycleList& primes, std::size_t order);

/// Canonical form helpers, exposed for tests.
bool is_primitive(const std::vector<std::size_t>& word);
std::vector<std::size_t> least_rotation(const std::vector<std::size_t>& word);

}  // namespace ihara
