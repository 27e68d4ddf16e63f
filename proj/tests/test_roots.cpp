#include "doctest.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "cvec/root_system.hpp"

using namespace cvec;

namespace {

// Positive roots of A_n are the indicator vectors of intervals.
std::vector<RootVector> interval_roots(int n) {
  std::vector<RootVector> out;
  for (int i = 0; i < n; ++i)
    for (int j = i; j < n; ++j) {
      RootVector r(n, 0);
      for (int k = i; k <= j; ++k) r[k] = 1;
      out.push_back(r);
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("A_n roots are intervals") {
  for (int n = 1; n <= 8; ++n) CHECK(positive_roots(DynkinType::parse("A" + std::to_string(n))) == interval_roots(n));
}

TEST_CASE("root counts") {
  CHECK(positive_roots(DynkinType::parse("A2")).size() == 3);
  CHECK(positive_roots(DynkinType::parse("D4")).size() == 12);
  CHECK(positive_roots(DynkinType::parse("D5")).size() == 20);
  CHECK(positive_roots(DynkinType::parse("E6")).size() == 36);
  CHECK(positive_roots(DynkinType::parse("E7")).size() == 63);
  CHECK(positive_roots(DynkinType::parse("E8")).size() == 120);
}

TEST_CASE("maximal coefficients") {
  CHECK(max_coefficient(DynkinType::parse("A5")).value == 1);
  CHECK(max_coefficient(DynkinType::parse("A5")).vertices.size() == 5);
  CHECK(max_coefficient(DynkinType::parse("D6")).value == 2);
  CHECK(max_coefficient(DynkinType::parse("E6")).value == 3);
  CHECK(max_coefficient(DynkinType::parse("E7")).value == 4);
  const auto e8 = max_coefficient(DynkinType::parse("E8"));
  CHECK(e8.value == 6);
  CHECK(e8.vertices == std::set<int>{DynkinType::parse("E8").branch_vertex()});
}

TEST_CASE("highest roots") {
  CHECK(highest_root(DynkinType::parse("A2")) == RootVector{1, 1});
  CHECK(highest_root(DynkinType::parse("D4")) == RootVector{1, 2, 1, 1});
  CHECK(highest_root(DynkinType::parse("E8")) == RootVector{2, 3, 4, 6, 5, 4, 3, 2});
}

TEST_CASE("closure is independent of reflection order") {
  std::mt19937 rng(7);
  for (const auto& t : dynkin_types_up_to(8)) {
    std::vector<int> order(t.rank);
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    CHECK(positive_roots_with_order(t, order) == positive_roots(t));
  }
}

TEST_CASE("every positive root has connected support and norm 2") {
  for (const auto& t : dynkin_types_up_to(8)) {
    const IntMatrix cartan = cartan_matrix(t);
    for (const auto& r : positive_roots(t)) {
      CHECK(has_connected_support(t, r));
      std::int64_t q = 0;
      for (int i = 0; i < t.rank; ++i)
        for (int j = 0; j < t.rank; ++j) q += r[i] * cartan(i, j) * r[j];
      CHECK(q == 2);
    }
  }
}
