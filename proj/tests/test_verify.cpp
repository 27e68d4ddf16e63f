#include "doctest.h"

#include "cvec/verify.hpp"

using namespace cvec;

namespace {

ExchangeMatrix dynkin(const std::string& name) { return dynkin_quiver(DynkinType::parse(name)); }

ExchangeMatrix three_cycle() { return ExchangeMatrix::from_arrows(3, {{0, 1}, {1, 2}, {2, 0}}); }

}  // namespace

TEST_CASE("lockstep walk keeps quiver and seed together") {
  const FiniteModel m = finite_model(dynkin("D4"));
  LockstepState s = lockstep_start(*m.category, m.cluster);
  CHECK(s.seed.b == dynkin("D4"));
  for (int k : {0, 2, 1, 3, 2, 0, 1}) s = lockstep_step(*m.category, s, k);
  CHECK(s.word.size() == 7);
  CHECK(m.category->seed_matrix(s.cluster) == s.seed.b);
}

TEST_CASE("finite model of a non-acyclic quiver") {
  const FiniteModel m = finite_model(three_cycle());
  CHECK(m.type.name() == "A3");
  CHECK(m.category->seed_matrix(m.cluster) == three_cycle());
  CHECK_THROWS_AS(finite_model(affine_example_quiver()), std::invalid_argument);
}

TEST_CASE("c-vector family of a single vertex") {
  const FiniteModel m = finite_model(dynkin("A1"));
  const auto& cat = *m.category;
  const ObjectId u = cat.shifted_projective(0);
  auto fam = c_family(cat, m.cluster, u, 1);
  CHECK(fam.vectors == VectorSet{{-1}});
  CHECK(fam.hits == 1);
}

TEST_CASE("c-vector family of a simple in A2") {
  const FiniteModel m = finite_model(dynkin("A2"));
  const auto& cat = *m.category;
  VectorSet all;
  for (ObjectId u = 0; u < cat.object_count(); ++u) {
    auto fam = c_family(cat, m.cluster, u, 10);
    CHECK(fam.hits > 0);
    CHECK(fam.truncated == 0);
    CHECK(fam.incoherent == 0);
    all.insert(fam.vectors.begin(), fam.vectors.end());
  }
  CHECK(all.count({1, 1}) == 1);
  CHECK(all.size() == 6);
}

TEST_CASE("non-acyclic members are distinct and reproducible") {
  auto a = non_acyclic_members(dynkin("A4"), 5, 8, 11);
  auto b = non_acyclic_members(dynkin("A4"), 5, 8, 11);
  REQUIRE(a.size() == 5);
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK_FALSE(a[i].first.is_acyclic());
    CHECK(a[i].second.size() <= 8);
  }
  CHECK(non_acyclic_members(dynkin("A2"), 5, 8, 11).empty());
}

TEST_CASE("cokernel signs on small types") {
  for (const char* name : {"A1", "A2", "A3"}) {
    INFO(name);
    auto r = check_cokernel_signs(dynkin(name), {6, 10, 12, 5, 2});
    CHECK(r.status == Status::Pass);
    CHECK(r.details["violations"] == 0);
  }
  auto r = check_cokernel_signs(three_cycle(), {5, 0, 0, 1, 1});
  CHECK(r.status == Status::Pass);
}

TEST_CASE("root sets of A2 and the oriented 3-cycle") {
  auto r = check_root_sets(dynkin("A2"));
  CHECK(r.status == Status::Pass);
  CHECK(r.details["seed_side"] == nlohmann::json::parse("[[0,1],[1,0],[1,1]]"));
  auto c = check_root_sets(three_cycle());
  CHECK(c.status == Status::Pass);
  CHECK(c.details["seed_side_size"] == 6);
  CHECK(c.details["category_side_size"] == 6);
}

TEST_CASE("sampled root-set mode reports coverage") {
  RootSetOptions o;
  o.exhaustive_rank = 3;
  o.sampled_walks = 3;
  o.walk_length = 4;
  auto r = check_root_sets(dynkin("D4"), o);
  CHECK(r.status == Status::PassSampled);
  CHECK(r.details["coverage"] == "12/12");
}

TEST_CASE("opposite quivers on A3 and D4") {
  CHECK(check_opposite(dynkin("A3")).status == Status::Pass);
  CHECK(check_opposite(dynkin("D4")).status == Status::Pass);
  CHECK(check_opposite(affine_example_quiver(), 500).status == Status::BoundLimited);
}

TEST_CASE("coefficient bound up to rank 6") {
  BoundOptions o;
  o.rank_cap = 6;
  auto r = check_bound(o);
  CHECK(r.status == Status::Pass);
}

TEST_CASE("affine example without depth doubling") {
  AffineExampleOptions o;
  o.double_depth = false;
  auto r = check_affine_example(o);
  CHECK(r.status == Status::Pass);
  CHECK(r.details["cokernel"]["cokernel"] == nlohmann::json::parse("[0,1,1]"));
  CHECK(r.details["cokernel"]["c_vector"] == nlohmann::json::parse("[0,-1,-1]"));
  CHECK(r.details["family"]["family"] == nlohmann::json::parse("[[-1,-1,-1],[0,-1,-1],[0,-1,0]]"));
}

TEST_CASE("reports serialize without timing") {
  auto r = check_opposite(dynkin("A2"));
  r.seconds = 123;
  const auto j = r.to_json();
  CHECK(j.dump().find("123") == std::string::npos);
  CHECK(j["status"] == "pass");
  CHECK(word_string({0, 2}) == "1,3");
}
