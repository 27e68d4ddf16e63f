#pragma once

// Exact seed mutation with principal coefficients.
//
// Convention: b(i, j) > 0 means b(i, j) arrows i -> j. c-vectors are the
// columns of the C-matrix.

#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <tuple>
#include <variant>
#include <vector>

#include <Eigen/Core>

#include "cvec/dynkin.hpp"

namespace cvec {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = std::vector<std::int64_t>;
using MutationWord = std::vector<int>;

/// Skew-symmetric integer matrix encoding a quiver without loops or 2-cycles.
class ExchangeMatrix {
 public:
  ExchangeMatrix() = default;
  /// Throws std::invalid_argument unless `b` is square and skew-symmetric.
  explicit ExchangeMatrix(IntMatrix b);

  /// Builds b from a 0-based arrow list; repeated arrows add up and
  /// opposite arrows cancel.
  static ExchangeMatrix from_arrows(int n, const std::vector<std::pair<int, int>>& arrows);

  int size() const { return static_cast<int>(b_.rows()); }
  std::int64_t operator()(int i, int j) const { return b_(i, j); }
  const IntMatrix& matrix() const { return b_; }

  /// Arrow list with multiplicity (i -> j repeated b(i, j) times), sorted.
  std::vector<std::pair<int, int>> arrows() const;

  bool is_acyclic() const;

  friend bool operator==(const ExchangeMatrix& a, const ExchangeMatrix& b) { return a.b_ == b.b_; }
  friend bool operator!=(const ExchangeMatrix& a, const ExchangeMatrix& b) { return !(a == b); }

 private:
  IntMatrix b_;
};

/// Exchange matrix together with its C-matrix at a vertex of the n-regular tree.
struct Seed {
  ExchangeMatrix b;
  IntMatrix c;
  MutationWord word;  // path from the initial vertex

  int size() const { return b.size(); }
  IntVector c_vector(int j) const;

  /// Equality of the labeled pair (B, C); the word is provenance only.
  bool same_pair(const Seed& o) const { return b == o.b && c == o.c; }
};

Seed initial_seed(const ExchangeMatrix& b);

/// Matrix mutation at k, also applied to the C-matrix. Throws
/// std::out_of_range for a bad index and OverflowError if an entry leaves
/// the int64 range.
Seed mutate_seed(const Seed& s, int k);

ExchangeMatrix mutate_matrix(const ExchangeMatrix& b, int k);

Seed mutate_along(const Seed& s, const MutationWord& word);

ExchangeMatrix opposite(const ExchangeMatrix& b);

/// Stable 64-bit FNV-1a hash of the little-endian bytes of (B, C).
std::uint64_t seed_hash(const Seed& s);

std::int64_t determinant(const IntMatrix& m);

/// Nonzero with all entries of one sign.
bool is_sign_coherent(const IntVector& v);
/// Sign of a sign-coherent vector: +1, -1, or 0 if not sign-coherent.
int vector_sign(const IntVector& v);

struct SeedEnumeration {
  std::vector<Seed> seeds;  // ordered by (depth, word)
  bool exhaustive = false;
  /// Exchange-graph edges (parent index, child index, mutation index) among
  /// the listed seeds; every undirected edge appears once.
  std::vector<std::tuple<std::size_t, std::size_t, int>> edges;
};

/// Breadth-first walk of the exchange pattern with deduplication on the
/// exact (B, C) pair. `budget` caps the number of distinct seeds.
SeedEnumeration enumerate_seeds(const ExchangeMatrix& b, std::size_t budget, unsigned threads = 1);

using VectorSet = std::set<IntVector>;

struct CVectorSet {
  VectorSet vectors;
  bool exhaustive = false;
};

CVectorSet positive_c_vectors(const ExchangeMatrix& b, std::size_t budget, unsigned threads = 1);
/// All c-vectors (both signs).
CVectorSet all_c_vectors(const ExchangeMatrix& b, std::size_t budget, unsigned threads = 1);

/// Standard acyclic orientation of a Dynkin diagram: every edge points from
/// the smaller label to the larger one.
ExchangeMatrix dynkin_quiver(const DynkinType& t);

/// Outcome of the finite-type test.
struct FiniteType {
  DynkinType type;
  ExchangeMatrix acyclic_member;
  MutationWord word_to_acyclic;       // applied to the input reaches acyclic_member
  std::vector<int> vertex_to_label;   // input vertex -> 0-based Dynkin label
};
struct InfiniteType {
  ExchangeMatrix witness;  // |b_ij b_ji| >= 4, or acyclic with a non-Dynkin graph
  MutationWord word;
};
struct BudgetExhausted {
  std::size_t visited = 0;
};
using FiniteTypeResult = std::variant<FiniteType, InfiniteType, BudgetExhausted>;

/// Raised when the mutation class is finite but no acyclic ADE member is
/// found; this is an internal-consistency failure.
class ClassificationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Breadth-first search over the mutation class, deduplicated on B. Stops at
/// the first member with |b_ij b_ji| >= 4 (infinite) or the first acyclic
/// member, which is of finite type iff its graph is an ADE diagram. Throws
/// std::invalid_argument for a disconnected quiver.
FiniteTypeResult detect_finite_type(const ExchangeMatrix& b, std::size_t budget);

/// Matches the underlying graph of an acyclic single-edge quiver with an ADE
/// diagram. Returns nullopt when the graph is not a Dynkin tree.
std::optional<std::pair<DynkinType, std::vector<int>>> identify_dynkin(const ExchangeMatrix& b);

std::string to_string(const IntVector& v);

}  // namespace cvec
