#include "ihara/error.hpp"
#include "ihara/prime_cycles.hpp"
#include "ihara/zeta.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <set>

using namespace ihara;

namespace {

const std::vector<Graph>& named_graphs() {
  static const std::vector<Graph> graphs{catalog::complete(4), catalog::wheel5(), catalog::diamond(),
                                         catalog::petersen()};
  return graphs;
}

}  // namespace

TEST_CASE("K4 has eight triangles as primes of length three") {
  const auto primes = enumerate_primes(build_line_graph(catalog::complete(4)), 3);
  CHECK(primes.cycles.size() == 8);
  for (const auto& p : primes.cycles) CHECK(p.length() == 3);
}

TEST_CASE("Petersen has no primes shorter than its girth") {
  const auto primes = enumerate_primes(build_line_graph(catalog::petersen()), 4);
  CHECK(primes.cycles.empty());
  const auto five = enumerate_primes(build_line_graph(catalog::petersen()), 5);
  CHECK(five.length_histogram().at(5) == 24);
}

TEST_CASE("enumerated primes are well formed") {
  for (const Graph& g : named_graphs()) {
    const auto olg = build_line_graph(g);
    const auto& des = olg.edge_set();
    const auto primes = enumerate_primes(olg, 7);
    std::set<std::vector<std::size_t>> unique;
    for (const auto& p : primes.cycles) {
      const auto& w = p.edges;
      const std::size_t n = w.size();
      CHECK(n >= 3);
      for (std::size_t i = 0; i < n; ++i) {
        const std::size_t next = w[(i + 1) % n];
        CHECK(olg.adjacent(w[i], next));
        CHECK(next != des.inverse(w[i]));
      }
      CHECK(is_primitive(w));
      CHECK(least_rotation(w) == w);
      unique.insert(w);
    }
    CHECK(unique.size() == primes.cycles.size());
  }
}

TEST_CASE("prime counts agree with the Moebius inversion of traces") {
  for (const Graph& g : named_graphs()) {
    const auto olg = build_line_graph(g);
    const auto tv = traces(olg, 8);
    const auto hist = enumerate_primes(olg, 8).length_histogram();
    for (std::size_t n = 1; n <= 8; ++n) {
      const auto it = hist.find(n);
      const BigInt found = it == hist.end() ? BigInt(0) : BigInt(it->second);
      CHECK(found == oracle::prime_count_from_traces(tv, n));
    }
  }
}

TEST_CASE("primitivity and rotation helpers") {
  CHECK(is_primitive({1, 2, 3}));
  CHECK_FALSE(is_primitive({1, 2, 1, 2}));
  CHECK_FALSE(is_primitive({4, 4, 4}));
  CHECK(is_primitive({1, 2, 1, 3}));
  CHECK(least_rotation({3, 1, 2}) == std::vector<std::size_t>{1, 2, 3});
  CHECK(least_rotation({2, 1, 1, 2, 1}) == std::vector<std::size_t>{1, 1, 2, 1, 2});
}

TEST_CASE("closed-walk counts") {
  const auto k4 = build_line_graph(catalog::complete(4));
  CHECK(count_closed_walks_bruteforce(k4, 3) == 24);
  for (const Graph& g : named_graphs()) {
    const auto olg = build_line_graph(g);
    CHECK(count_closed_walks_bruteforce(olg, 1) == 0);
    CHECK(count_closed_walks_bruteforce(olg, 2) == 0);
    const auto tv = traces(olg, 8);
    for (std::size_t k = 1; k <= 8; ++k) CHECK(count_closed_walks_bruteforce(olg, k) == tv[k]);
  }
}

TEST_CASE("Euler product basics") {
  CHECK(euler_product_series(PrimeCycleList{7, {}}, 7) == TruncatedSeries<Rational>::constant(7, Rational(1)));

  PrimeCycleList one{7, {PrimeCycle{{0, 1, 2}}}};
  const auto s = euler_product_series(one, 7);
  TruncatedSeries<Rational> expected(7);
  expected[0] = expected[3] = expected[6] = 1;
  CHECK(s == expected);

  CHECK_THROWS_AS(euler_product_series(PrimeCycleList{5, {}}, 8), Error);
}

TEST_CASE("Euler product equals the exp-trace series") {
  for (const Graph& g : named_graphs()) {
    const auto model = build_zeta_model(g, 8);
    const auto euler = euler_product_series(enumerate_primes(model.olg, 8), 8);
    CHECK(euler == model.series.coefficients);
  }
  for (const Graph& g : oracle::random_admissible_graphs(77, 10, 6)) {
    const auto model = build_zeta_model(g, 8);
    CHECK(euler_product_series(enumerate_primes(model.olg, 8), 8) == model.series.coefficients);
  }
}

TEST_CASE("parallel enumeration matches the serial reference") {
  for (const Graph& g : named_graphs()) {
    const auto olg = build_line_graph(g);
    CHECK(enumerate_primes(olg, 8).cycles == enumerate_primes_serial(olg, 8).cycles);
    CHECK(count_closed_walks_bruteforce(olg, 7) == count_closed_walks_bruteforce_serial(olg, 7));
  }
}

TEST_CASE("search budget") {
  SearchBudget tiny;
  tiny.max_steps = 10;
  const auto olg = build_line_graph(catalog::petersen());
  try {
    enumerate_primes(olg, 8, tiny);
    FAIL("budget not enforced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  CHECK_THROWS_AS(count_closed_walks_bruteforce(olg, 8, tiny), Error);
}
