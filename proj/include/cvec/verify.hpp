#pragma once

// Lockstep walks of seeds and clusters, and the checks built on them.
//
// A seed is paired with the cluster T whose seed_matrix() is its exchange
// matrix. Reports carry only deterministic content; timing is kept apart
// so that two runs can be compared byte for byte.

#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "cvec/cluster_category.hpp"
#include "cvec/seed.hpp"

namespace cvec {

enum class Status { Pass, PassSampled, BoundLimited, Fail };
std::string to_string(Status s);

struct VerificationReport {
  std::string claim;
  Status status = Status::Pass;
  nlohmann::json details = nlohmann::json::object();
  /// Each failure names the 1-based word that reproduces it.
  std::vector<std::string> failures;
  double seconds = 0;  // not serialized

  bool passed() const { return status != Status::Fail; }
  nlohmann::json to_json() const;
};

/// Raised when quiver_of(cluster) stops matching the seed.
class LockstepError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct LockstepState {
  Seed seed;
  Cluster cluster;
  MutationWord word;
};

/// The seed starts with C = I and the exchange matrix of `start`.
LockstepState lockstep_start(const ClusterCategory& cat, const Cluster& start);
/// Mutates seed and cluster at k and checks the lockstep invariant.
/// Throws ModelError if the partner lies outside a bounded domain.
LockstepState lockstep_step(const ClusterCategory& cat, const LockstepState& s, int k);

/// A finite-type exchange matrix realized in a cluster category: the
/// category of an acyclic member A of its mutation class and the cluster
/// whose seed matrix is the input.
struct FiniteModel {
  std::unique_ptr<ClusterCategory> category;
  Cluster cluster;
  DynkinType type;
  MutationWord word_from_acyclic;
};

/// Throws std::invalid_argument unless `b` is of finite type within `budget`.
FiniteModel finite_model(const ExchangeMatrix& b, std::size_t budget = 100000);

struct CFamily {
  VectorSet vectors;
  VectorSet positive;
  VectorSet negative;
  std::size_t states = 0;        // lockstep states visited
  std::size_t hits = 0;          // states with U as a summand
  std::size_t truncated = 0;     // mutations cut off by the dimension bound
  std::size_t incoherent = 0;    // c-vectors that are not sign-coherent
  std::vector<std::pair<MutationWord, int>> hit_words;  // (word, position of U)
};

/// c-vectors c_j(t) over all states t within `depth` mutations of `initial`
/// whose cluster has U in position j. States are deduplicated on (B, C).
CFamily c_family(const ClusterCategory& cat, const Cluster& initial, ObjectId u, int depth, unsigned threads = 1);

/// Shortest word taking `start` to `target` position by position, searching
/// labeled clusters up to `max_depth`; nullopt if none is found.
std::optional<MutationWord> find_cluster_word(const ClusterCategory& cat, const Cluster& start, const Cluster& target,
                                              int max_depth);

/// Up to `count` distinct non-acyclic members of the mutation class of `b`,
/// each reached by a random word of length at most `max_length`.
std::vector<std::pair<ExchangeMatrix, MutationWord>> non_acyclic_members(const ExchangeMatrix& b, int count,
                                                                         int max_length, std::uint64_t rng_seed);

struct CokernelSignOptions {
  int exhaustive_depth = 6;
  int random_walks = 0;
  int walk_length = 20;
  std::uint64_t rng_seed = 1;
  unsigned threads = 1;
};
VerificationReport check_cokernel_signs(const ExchangeMatrix& b, const CokernelSignOptions& options = {});

struct RootSetOptions {
  std::size_t budget = 200000;    // seeds for the exhaustive side
  int exhaustive_rank = 5;        // larger ranks are sampled
  int sampled_walks = 500;
  int walk_length = 40;
  std::size_t directed_budget = 50000;  // clusters visited by directed search
  std::uint64_t rng_seed = 1;
  unsigned threads = 1;
};
VerificationReport check_root_sets(const ExchangeMatrix& b, const RootSetOptions& options = {});

VerificationReport check_opposite(const ExchangeMatrix& b, std::size_t budget = 200000, unsigned threads = 1);

struct BoundOptions {
  int rank_cap = 8;
  std::size_t budget = 200000;
  int exhaustive_rank = 5;
  int sampled_walks = 200;
  int walk_length = 40;
  std::uint64_t rng_seed = 1;
  unsigned threads = 1;
};
VerificationReport check_bound(const BoundOptions& options = {});

struct AffineExampleOptions {
  int depth = 12;
  bool double_depth = true;  // also collect at 2 * depth and require equality
  int dimension_bound = 0;   // 0 picks a bound from the depth
  bool family = true;        // false runs only the cokernel part
  unsigned threads = 1;
};
VerificationReport check_affine_example(const AffineExampleOptions& options = {});

/// Quiver of the affine example: arrows 1 -> 2, 2 -> 3, 1 -> 3.
ExchangeMatrix affine_example_quiver();

nlohmann::json to_json(const IntVector& v);
nlohmann::json to_json(const VectorSet& s);
nlohmann::json to_json(const ExchangeMatrix& b);
/// 1-based word.
nlohmann::json word_json(const MutationWord& w);
std::string word_string(const MutationWord& w);

}  // namespace cvec
