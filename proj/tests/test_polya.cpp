#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>

#include "crdeg/hypergraph.hpp"
#include "crdeg/polya.hpp"
#include "oracles.hpp"

using namespace crdeg;

TEST_CASE("conjugacy class sizes sum to p!") {
  for (int p = 0; p <= 10; ++p) {
    std::uint64_t total = 0, fact = 1;
    for (int i = 2; i <= p; ++i) fact *= static_cast<std::uint64_t>(i);
    for (auto& [pt, size] : cycle_types(p)) {
      CHECK(pt.total() == p);
      total += size;
    }
    CHECK(total == fact);
  }
  CHECK_THROWS(cycle_types(13));
}

TEST_CASE("induced cycle type agrees with Moebius inversion of fixed points") {
  for (int p = 4; p <= 8; ++p) {
    for (int k : {1, 2, 3, 4}) {
      for (auto& [pt, size] : cycle_types(p)) {
        CAPTURE(p);
        CAPTURE(k);
        CHECK(induced_cycle_type(pt, k) == oracle::induced_by_inversion(pt, k));
      }
    }
  }
}

TEST_CASE("cycle index weights sum to one") {
  for (int p = 4; p <= 8; ++p) {
    mpq_class s = 0;
    for (auto& [pt, w] : induced_cycle_index(p, 4).terms) s += w;
    CHECK(s == 1);
  }
}

TEST_CASE("counting polynomial matches enumeration with isolated vertices allowed") {
  for (int p = 4; p <= 8; ++p) {
    const auto poly = counting_polynomial(p, 3);
    for (int k = 0; k <= 5; ++k) {
      CAPTURE(p);
      CAPTURE(k);
      const std::size_t enumerated = k == 0 ? 1 : enumerate_all_keys(p, k).size();
      CHECK(poly.coefficient(k) == static_cast<unsigned long>(enumerated));
    }
  }
}

TEST_CASE("plex counts for eight points") {
  CHECK(counting_polynomial(8, 3).coefficient(5) == 621);
  CHECK(counting_polynomial(7, 3).coefficient(5) == 137);
  CHECK(count_no_isolated(8, 5, 3) == 484);
  CHECK(count_no_isolated(7, 4, 3) == 29);
}

TEST_CASE("counting polynomial is symmetric and sums to the number of classes of subsets") {
  // Complementing the edge set is a bijection between k and C(p,4)-k edges.
  const auto poly = counting_polynomial(7, 3);
  const int m = static_cast<int>(binomial(7, 4));
  for (int k = 0; k <= m; ++k) CHECK(poly.coefficient(k) == poly.coefficient(m - k));
  CHECK(counting_polynomial(3, 3).coefficients.size() == 1);
}

TEST_CASE("no-isolated counts match enumeration") {
  for (int p = 4; p <= 8; ++p) {
    for (int k = 1; k <= 5; ++k) {
      if (4 * k < p) continue;
      CAPTURE(p);
      CAPTURE(k);
      CHECK(count_no_isolated(p, k, 3) == static_cast<unsigned long>(enumerate_classes(p, k).size()));
    }
  }
}
