#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "cvec/rational.hpp"
#include "cvec/root_system.hpp"
#include "cvec/seed.hpp"

using namespace cvec;

namespace {

using Grid = std::vector<std::vector<long>>;

long pos(long x) { return x > 0 ? x : 0; }

// Entry-by-entry oracle for mutation of the extended matrix (B over C).
std::pair<Grid, Grid> oracle_mutate(const Grid& b, const Grid& c, int k) {
  const int n = static_cast<int>(b.size());
  Grid nb = b, nc = c;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      nb[i][j] = (i == k || j == k) ? -b[i][j] : b[i][j] + pos(b[i][k]) * pos(b[k][j]) - pos(-b[i][k]) * pos(-b[k][j]);
      nc[i][j] = j == k ? -c[i][j] : c[i][j] + pos(c[i][k]) * pos(b[k][j]) - pos(-c[i][k]) * pos(-b[k][j]);
    }
  return {nb, nc};
}

Grid to_grid(const IntMatrix& m) {
  Grid g(m.rows(), std::vector<long>(m.cols()));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) g[i][j] = m(i, j);
  return g;
}

ExchangeMatrix a2() { return ExchangeMatrix::from_arrows(2, {{0, 1}}); }

ExchangeMatrix random_b(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> d(-2, 2);
  IntMatrix b = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      b(i, j) = d(rng);
      b(j, i) = -b(i, j);
    }
  return ExchangeMatrix(b);
}

}  // namespace

TEST_CASE("single mutation of A2") {
  Seed s = mutate_seed(initial_seed(a2()), 0);
  IntMatrix b(2, 2);
  b << 0, -1, 1, 0;
  CHECK(s.b.matrix() == b);
  CHECK(s.c_vector(0) == IntVector{-1, 0});
  CHECK(s.c_vector(1) == IntVector{1, 1});
  CHECK(s.word == MutationWord{0});
}

TEST_CASE("A3 linear mutated at the middle is the oriented 3-cycle") {
  auto b = mutate_matrix(ExchangeMatrix::from_arrows(3, {{0, 1}, {1, 2}}), 1);
  CHECK(b(0, 2) == 1);
  CHECK(b(1, 0) == 1);
  CHECK(b(2, 1) == 1);
}

TEST_CASE("mutation agrees with the entrywise oracle on random walks") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 4;
    Seed s = initial_seed(random_b(rng, n));
    Grid gb = to_grid(s.b.matrix()), gc = to_grid(s.c);
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int step = 0; step < 12; ++step) {
      const int k = pick(rng);
      try {
        s = mutate_seed(s, k);
      } catch (const OverflowError&) {
        break;
      }
      std::tie(gb, gc) = oracle_mutate(gb, gc, k);
      REQUIRE(to_grid(s.b.matrix()) == gb);
      REQUIRE(to_grid(s.c) == gc);
    }
  }
}

TEST_CASE("A2 has ten seeds along the alternating walk") {
  // Oracle: alternate mutations until (B, C) returns to the start.
  Grid b = to_grid(a2().matrix()), c = {{1, 0}, {0, 1}};
  std::set<std::pair<Grid, Grid>> seen{{b, c}};
  for (int step = 0; step < 20; ++step) {
    std::tie(b, c) = oracle_mutate(b, c, step % 2);
    seen.insert({b, c});
  }
  CHECK(seen.size() == 10);
  const auto e = enumerate_seeds(a2(), 1000);
  CHECK(e.exhaustive);
  CHECK(e.seeds.size() == seen.size());
  for (const auto& s : e.seeds) CHECK(seen.count({to_grid(s.b.matrix()), to_grid(s.c)}) == 1);
}

TEST_CASE("A1 seeds and c-vectors") {
  ExchangeMatrix b(IntMatrix::Zero(1, 1));
  const auto e = enumerate_seeds(b, 10);
  CHECK(e.exhaustive);
  CHECK(e.seeds.size() == 2);
  CHECK(positive_c_vectors(b, 10).vectors == VectorSet{{1}});
}

TEST_CASE("positive c-vectors of A2 and A3") {
  CHECK(positive_c_vectors(a2(), 1000).vectors == VectorSet{{0, 1}, {1, 0}, {1, 1}});
  const auto a3 = ExchangeMatrix::from_arrows(3, {{0, 1}, {1, 2}});
  const auto pc = positive_c_vectors(a3, 10000);
  CHECK(pc.exhaustive);
  const auto& roots = positive_roots(DynkinType::parse("A3"));
  CHECK(pc.vectors == VectorSet(roots.begin(), roots.end()));
  CHECK(pc.vectors == positive_c_vectors(opposite(a3), 10000).vectors);
}

TEST_CASE("the affine A quiver does not terminate") {
  const auto b = ExchangeMatrix::from_arrows(3, {{0, 1}, {1, 2}, {0, 2}});
  CHECK_FALSE(enumerate_seeds(b, 10000).exhaustive);
  CHECK(std::holds_alternative<InfiniteType>(detect_finite_type(b, 10000)));
}

TEST_CASE("finite type detection") {
  const auto cycle = ExchangeMatrix::from_arrows(3, {{0, 1}, {1, 2}, {2, 0}});
  auto r = detect_finite_type(cycle, 10000);
  REQUIRE(std::holds_alternative<FiniteType>(r));
  const auto& ft = std::get<FiniteType>(r);
  CHECK(ft.type.name() == "A3");
  CHECK(ft.acyclic_member.is_acyclic());
  ExchangeMatrix m = cycle;
  for (int k : ft.word_to_acyclic) m = mutate_matrix(m, k);
  CHECK(m == ft.acyclic_member);

  for (const auto& t : dynkin_types_up_to(8)) {
    auto res = detect_finite_type(dynkin_quiver(t), 100000);
    INFO(t.name());
    REQUIRE(std::holds_alternative<FiniteType>(res));
    CHECK(std::get<FiniteType>(res).type.name() == t.name());
  }
}

TEST_CASE("enumeration is deterministic across thread counts") {
  const auto d5 = dynkin_quiver(DynkinType::parse("D5"));
  const auto one = enumerate_seeds(d5, 1000000, 1);
  const auto many = enumerate_seeds(d5, 1000000, 8);
  REQUIRE(one.seeds.size() == many.seeds.size());
  for (std::size_t i = 0; i < one.seeds.size(); ++i) {
    CHECK(one.seeds[i].same_pair(many.seeds[i]));
    CHECK(one.seeds[i].word == many.seeds[i].word);
  }
  CHECK(one.edges == many.edges);
}

TEST_CASE("finite-type positive c-vectors are positive roots") {
  for (const auto& t : dynkin_types_up_to(5)) {
    const auto pc = positive_c_vectors(dynkin_quiver(t), 1000000);
    REQUIRE(pc.exhaustive);
    const auto& roots = positive_roots(t);
    CHECK(pc.vectors == VectorSet(roots.begin(), roots.end()));
  }
}

TEST_CASE("random walks keep sign coherence, unimodularity and the involution") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + trial % 5;
    Seed s = initial_seed(random_b(rng, n));
    std::uniform_int_distribution<int> pick(0, n - 1);
    for (int step = 0; step < 25; ++step) {
      const int k = pick(rng);
      Seed next;
      std::int64_t det = 0;
      try {
        next = mutate_seed(s, k);
        REQUIRE(mutate_seed(next, k).same_pair(s));
        det = determinant(next.c);
      } catch (const OverflowError&) {
        break;
      }
      s = next;
      for (int j = 0; j < n; ++j) REQUIRE(is_sign_coherent(s.c_vector(j)));
      REQUIRE((det == 1 || det == -1));
      REQUIRE(s.b.matrix() == IntMatrix(-s.b.matrix().transpose()));
      ++checked;
    }
  }
  CHECK(checked > 1000);
}

TEST_CASE("malformed input is rejected") {
  IntMatrix bad(2, 2);
  bad << 0, 1, 1, 0;
  CHECK_THROWS_AS(ExchangeMatrix{bad}, std::invalid_argument);
  CHECK_THROWS_AS(mutate_seed(initial_seed(a2()), 2), std::out_of_range);
}
