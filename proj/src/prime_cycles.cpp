#include "ihara/prime_cycles.hpp"

#include "ihara/error.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>

#include <omp.h>

namespace ihara {

namespace {

class StepCounter {
 public:
  explicit StepCounter(std::uint64_t limit) : limit_(limit) {}

  /// False once the shared budget is spent.
  bool take() { return steps_.fetch_add(1, std::memory_order_relaxed) < limit_; }
  bool exhausted() const { return steps_.load(std::memory_order_relaxed) > limit_; }

 private:
  std::uint64_t limit_;
  std::atomic<std::uint64_t> steps_{0};
};

[[noreturn]] void budget_exceeded(std::uint64_t limit) {
  throw Error(ErrorKind::BudgetExceeded, "DFS budget of " + std::to_string(limit) + " steps exhausted");
}

// Closed walks starting at `start` whose other edges all have index >= start;
// the walk is kept when it is primitive and already in least rotation.
class PrimeSearch {
 public:
  PrimeSearch(const OrientedLineGraph& olg, std::size_t start, std::size_t max_length, StepCounter& counter)
      : olg_(olg), start_(start), max_length_(max_length), counter_(counter) {}

  bool run(std::vector<PrimeCycle>& out) {
    walk_.assign(1, start_);
    return extend(out);
  }

 private:
  bool extend(std::vector<PrimeCycle>& out) {
    if (!counter_.take()) return false;
    const std::size_t last = walk_.back();
    if (olg_.adjacent(last, start_)) {
      if (is_primitive(walk_) && least_rotation(walk_) == walk_) out.push_back(PrimeCycle{walk_});
    }
    if (walk_.size() == max_length_) return true;
    for (std::size_t next : olg_.successors(last)) {
      if (next < start_) continue;
      walk_.push_back(next);
      const bool ok = extend(out);
      walk_.pop_back();
      if (!ok) return false;
    }
    return true;
  }

  const OrientedLineGraph& olg_;
  std::size_t start_;
  std::size_t max_length_;
  StepCounter& counter_;
  std::vector<std::size_t> walk_;
};

PrimeCycleList collect(std::size_t max_length, std::vector<std::vector<PrimeCycle>>& per_start) {
  PrimeCycleList list;
  list.max_length = max_length;
  for (auto& part : per_start)
    for (auto& c : part) list.cycles.push_back(std::move(c));
  std::sort(list.cycles.begin(), list.cycles.end(), [](const PrimeCycle& a, const PrimeCycle& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    return a.edges < b.edges;
  });
  return list;
}

PrimeCycleList enumerate(const OrientedLineGraph& olg, std::size_t max_length, const SearchBudget& budget,
                         bool parallel) {
  const std::size_t n = olg.size();
  std::vector<std::vector<PrimeCycle>> per_start(n);
  StepCounter counter(budget.max_steps);
  std::atomic<bool> failed{false};

#pragma omp parallel for if (parallel) schedule(dynamic)
  for (std::size_t s = 0; s < n; ++s) {
    if (failed.load(std::memory_order_relaxed)) continue;
    PrimeSearch search(olg, s, max_length, counter);
    if (!search.run(per_start[s])) failed.store(true, std::memory_order_relaxed);
  }
  if (failed) budget_exceeded(budget.max_steps);
  return collect(max_length, per_start);
}

std::uint64_t count_from(const OrientedLineGraph& olg, std::size_t start, std::size_t current, std::size_t remaining,
                         StepCounter& counter, bool& ok) {
  if (!ok) return 0;
  if (!counter.take()) {
    ok = false;
    return 0;
  }
  if (remaining == 0) return current == start ? 1 : 0;
  std::uint64_t total = 0;
  for (std::size_t next : olg.successors(current)) total += count_from(olg, start, next, remaining - 1, counter, ok);
  return total;
}

BigInt count_closed(const OrientedLineGraph& olg, std::size_t k, const SearchBudget& budget, bool parallel) {
  if (k == 0) throw Error(ErrorKind::InvalidParams, "walk length must be positive");
  const std::size_t n = olg.size();
  std::vector<std::uint64_t> per_start(n, 0);
  StepCounter counter(budget.max_steps);
  std::atomic<bool> failed{false};

#pragma omp parallel for if (parallel) schedule(dynamic)
  for (std::size_t s = 0; s < n; ++s) {
    bool ok = !failed.load(std::memory_order_relaxed);
    per_start[s] = count_from(olg, s, s, k, counter, ok);
    if (!ok) failed.store(true, std::memory_order_relaxed);
  }
  if (failed) budget_exceeded(budget.max_steps);
  BigInt total = 0;
  for (std::uint64_t c : per_start) total += c;
  return total;
}

}  // namespace

std::map<std::size_t, std::size_t> PrimeCycleList::length_histogram() const {
  std::map<std::size_t, std::size_t> h;
  for (const auto& c : cycles) ++h[c.length()];
  return h;
}

SearchBudget budget_from_environment() {
  SearchBudget budget;
  if (const char* raw = std::getenv("IHARA_MAX_DFS_STEPS")) {
    std::uint64_t value = 0;
    const char* end = raw + std::strlen(raw);
    const auto [ptr, ec] = std::from_chars(raw, end, value);
    if (ec != std::errc() || ptr != end || value == 0) {
      throw Error(ErrorKind::InvalidParams, "IHARA_MAX_DFS_STEPS must be a positive integer");
    }
    budget.max_steps = value;
  }
  return budget;
}

bool is_primitive(const std::vector<std::size_t>& word) {
  const std::size_t n = word.size();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    bool periodic = true;
    for (std::size_t i = d; i < n && periodic; ++i) periodic = word[i] == word[i - d];
    if (periodic) return false;
  }
  return true;
}

std::vector<std::size_t> least_rotation(const std::vector<std::size_t>& word) {
  std::vector<std::size_t> best = word;
  std::vector<std::size_t> candidate(word.size());
  for (std::size_t r = 1; r < word.size(); ++r) {
    std::rotate_copy(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(r), word.end(), candidate.begin());
    if (candidate < best) best = candidate;
  }
  return best;
}

PrimeCycleList enumerate_primes(const OrientedLineGraph& olg, std::size_t max_length, const SearchBudget& budget) {
  return enumerate(olg, max_length, budget, true);
}

PrimeCycleList enumerate_primes_serial(const OrientedLineGraph& olg, std::size_t max_length,
                                       const SearchBudget& budget) {
  return enumerate(olg, max_length, budget, false);
}

BigInt count_closed_walks_bruteforce(const OrientedLineGraph& olg, std::size_t k, const SearchBudget& budget) {
  return count_closed(olg, k, budget, true);
}

BigInt count_closed_walks_bruteforce_serial(const OrientedLineGraph& olg, std::size_t k,
                                            const SearchBudget& budget) {
  return count_closed(olg, k, budget, false);
}

TruncatedSeries<Rational> euler_product_series(const PrimeCycleList& primes, std::size_t order) {
  if (primes.max_length < order) {
    throw Error(ErrorKind::IncompletePrimeList, "primes enumerated to length " + std::to_string(primes.max_length) +
                                                    " but order " + std::to_string(order) + " requested");
  }
  // Integer coefficients; multiply by 1/(1 - x^L) in place.
  std::vector<BigInt> c(order + 1, BigInt(0));
  c[0] = 1;
  for (const PrimeCycle& p : primes.cycles) {
    const std::size_t len = p.length();
    if (len == 0 || len > order) continue;
    for (std::size_t i = len; i <= order; ++i) c[i] += c[i - len];
  }
  TruncatedSeries<Rational> s(order);
  for (std::size_t i = 0; i <= order; ++i) s[i] = Rational(c[i]);
  return s;
}

}  // namespace ihara
