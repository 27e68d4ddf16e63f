#pragma once

// Cluster category of an acyclic quiver, modeled on the fundamental domain
// ind(mod H) u {Sigma P_i}.
//
// The quiver Q is read from an acyclic exchange matrix B. Modules are
// representations of Q^op, so that Hom(P_i, P_j) is spanned by the paths
// i ~> j of Q and the quiver of the projective cluster is B itself.
//
// Hom_C(X, Y) = H(X, Y) (+) F(X, Y) with, for modules M, N:
//
//   X \ Y      | N                               | Sigma P_j
//   -----------+---------------------------------+----------------------
//   M          | H = Hom(M, N)                   | H = Ext^1(M, P_j)
//              | F = Ext^1(M, tau^-1 N)          | F = 0
//   Sigma P_i  | H = 0                           | H = Hom(P_i, P_j)
//              | F = Hom(P_i, tau^-1 N)          | F = 0
//
// and F = 0 whenever N is injective. H-parts compose to H-parts, an F-part
// composed with an H-part is an F-part, and two F-parts compose to zero.

#include <atomic>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "cvec/representation.hpp"
#include "cvec/seed.hpp"

namespace cvec {

/// Internal inconsistency of the category model (for instance a cluster
/// summand with two exchange partners).
class ModelError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

enum class ObjectKind { Module, ShiftedProjective };

struct CObject {
  ObjectKind kind = ObjectKind::Module;
  IntVector root;   // dimension vector, for modules
  int vertex = -1;  // for shifted projectives

  static CObject module(IntVector root) { return {ObjectKind::Module, std::move(root), -1}; }
  static CObject shifted_projective(int i) { return {ObjectKind::ShiftedProjective, {}, i}; }
  std::string str() const;  // "(1,0,1)" or "S P2" with 1-based vertex
  friend bool operator==(const CObject& a, const CObject& b) {
    return a.kind == b.kind && a.root == b.root && a.vertex == b.vertex;
  }
};

using ObjectId = int;

struct HomDim {
  int h = 0;
  int f = 0;
  int total() const { return h + f; }
  friend bool operator==(const HomDim& a, const HomDim& b) { return a.h == b.h && a.f == b.f; }
};

/// Morphism in the cluster category as coordinates over the fixed bases of
/// the H- and F-parts of Hom_C(source, target).
struct CMorphism {
  ObjectId source = -1;
  ObjectId target = -1;
  QVector h;
  QVector f;

  bool is_zero() const;
  friend bool operator==(const CMorphism& a, const CMorphism& b) {
    return a.source == b.source && a.target == b.target && a.h == b.h && a.f == b.f;
  }
};

/// Ordered cluster-tilting object; position i corresponds to seed vertex i.
struct Cluster {
  std::vector<ObjectId> summands;
  MutationWord word;

  int size() const { return static_cast<int>(summands.size()); }
  ObjectId operator[](int i) const { return summands[i]; }
  /// Summands as a sorted set, the key for unlabeled comparisons.
  std::vector<ObjectId> sorted() const;
  /// Position of `x`, or -1.
  int position(ObjectId x) const;
};

/// Minimal right add(T minus T_skip)-approximation B -> Y. Component m is a
/// morphism T_{positions[m]} -> Y; a position appears once per multiplicity.
struct Approximation {
  std::vector<int> positions;
  std::vector<CMorphism> maps;

  std::vector<int> multiplicities(int n) const;
};

struct Exchange {
  Cluster cluster;              // the mutated cluster
  ObjectId partner = -1;        // new summand at position k
  Approximation old_summand;    // B -> T_k with B in add of the common part
  Approximation new_summand;    // B' -> T_k*
};

/// The two candidate c-module dimension vectors: `positive` from the
/// cokernel into Hom(T, Sigma T'_j*), `negative` from the cokernel into
/// Hom(T, Sigma T'_j).
struct CModuleDims {
  IntVector positive;
  IntVector negative;
};

struct ClusterGraph {
  std::vector<Cluster> clusters;  // first arrival, breadth-first
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  bool exhaustive = true;
};

class ClusterCategory {
 public:
  struct Options {
    /// Largest total dimension of a module kept in the domain when the
    /// quiver is not of Dynkin type. Ignored for Dynkin quivers.
    int dimension_bound = 0;
  };

  /// Throws std::invalid_argument unless `b` is acyclic and either of
  /// Dynkin type or given a positive dimension bound.
  explicit ClusterCategory(const ExchangeMatrix& b) : ClusterCategory(b, Options()) {}
  ClusterCategory(const ExchangeMatrix& b, Options options);
  ClusterCategory(const ClusterCategory&) = delete;
  ClusterCategory& operator=(const ClusterCategory&) = delete;

  int rank() const { return b_.size(); }
  const ExchangeMatrix& exchange_matrix() const { return b_; }
  const QuiverPtr& module_quiver() const { return quiver_; }
  /// False for a Dynkin quiver; true when the domain is cut at a bound.
  bool bound_limited() const { return bound_limited_; }
  std::optional<DynkinType> dynkin_type() const { return type_; }

  int object_count() const { return static_cast<int>(objects_.size()); }
  const CObject& object(ObjectId x) const { return objects_.at(x).object; }
  std::optional<ObjectId> find(const CObject& o) const;
  ObjectId module_id(const IntVector& root) const;
  ObjectId shifted_projective(int i) const { return shifted_[i]; }
  ObjectId projective(int i) const { return projective_[i]; }
  ObjectId injective(int i) const { return injective_[i]; }
  bool is_module(ObjectId x) const { return object(x).kind == ObjectKind::Module; }
  /// The module of a Module object, or P_i for Sigma P_i.
  const Representation& representation(ObjectId x) const { return objects_.at(x).rep; }

  /// Sigma and Sigma^-1, normalized into the domain; nullopt if the result
  /// lies outside a bounded domain.
  std::optional<ObjectId> shift(ObjectId x) const;
  std::optional<ObjectId> unshift(ObjectId x) const;

  HomDim hom_dim(ObjectId x, ObjectId y) const;
  /// Basis of Hom_C(x, y): unit vectors on the H-part, then on the F-part.
  std::vector<CMorphism> hom_basis(ObjectId x, ObjectId y) const;
  CMorphism identity(ObjectId x) const;
  CMorphism compose(const CMorphism& g, const CMorphism& f) const;
  /// Matrix of f |-> g o f from Hom_C(s, g.source) to Hom_C(s, g.target),
  /// both in stacked (H, F) coordinates.
  QMatrix postcompose(const CMorphism& g, ObjectId s) const;

  /// dim Hom_C(x, Sigma y), computed from Ext groups in the module category.
  int ext_dim(ObjectId x, ObjectId y) const;
  bool compatible(ObjectId x, ObjectId y) const;

  /// Images of the indecomposable projectives in vertex order.
  Cluster initial_cluster() const;
  /// Throws ModelError unless `c` consists of n pairwise compatible objects.
  void validate_cluster(const Cluster& c) const;
  /// The unique other completion of c minus c[k]. nullopt only when the
  /// domain is bounded and the partner lies outside it.
  std::optional<ObjectId> exchange_partner(const Cluster& c, int k) const;
  Approximation right_approximation(const Cluster& c, int skip, ObjectId y) const;
  /// Throws ModelError if the partner is outside a bounded domain.
  Exchange mutate(const Cluster& c, int k) const;
  /// As mutate, without the approximations.
  Cluster mutate_cluster(const Cluster& c, int k) const;

  /// Gabriel quiver of End_C(T): b(i, j) = number of irreducible maps T_i -> T_j.
  ExchangeMatrix quiver_of(const Cluster& c) const;
  /// Exchange matrix of the seed paired with `c`: the quiver of End_C(T)^op,
  /// over which Hom_C(T, -) takes its values. Equals -quiver_of(c).
  ExchangeMatrix seed_matrix(const Cluster& c) const { return opposite(quiver_of(c)); }
  /// Coordinate l is dim Hom_C(T_l, x).
  IntVector j_dim_vector(const Cluster& t, ObjectId x) const;
  /// Both c-module candidates for position j of `current`, measured with
  /// Hom_C(T_l, -) over the summands of `initial`.
  CModuleDims c_module_dims(const Cluster& initial, const Cluster& current, int j) const;

  /// Closure of `start` under mutation, deduplicated as unordered sets.
  ClusterGraph cluster_graph(const Cluster& start, std::size_t budget) const;
  /// All maximal sets of pairwise compatible objects, by clique search on
  /// the compatibility graph. Independent of mutation.
  std::vector<std::vector<ObjectId>> maximal_compatible_sets() const;

 private:
  struct Block {
    enum class Kind { Zero, Hom, Ext } kind = Kind::Zero;
    std::shared_ptr<const HomSpace> hom;
    std::shared_ptr<const ExtSpace> ext;
    int dim() const;
  };
  struct PairSpaces {
    Block h, f;
  };
  struct Entry {
    CObject object;
    Representation rep;
    bool injective_module = false;
  };

  const PairSpaces& spaces(ObjectId x, ObjectId y) const;
  const std::vector<ExtSpace>& translate_spaces(ObjectId x) const;
  const Representation& tau_inv(ObjectId x) const;
  LinMap tau_inv_map(ObjectId x, ObjectId y, const LinMap& g) const;
  int module_hom_dim(ObjectId x, ObjectId y) const;
  QMatrix radical_basis(ObjectId x, ObjectId y) const;
  QMatrix factor_span(const Cluster& c, int i, ObjectId y, int skip, bool radical_target) const;
  void add_module(Representation m);
  void build_dynkin_domain();
  void build_bounded_domain(int bound);
  void finish_domain();

  ExchangeMatrix b_;
  QuiverPtr quiver_;
  std::optional<DynkinType> type_;
  bool bound_limited_ = false;
  std::vector<Entry> objects_;
  std::map<IntVector, ObjectId> by_root_;
  std::vector<ObjectId> shifted_, projective_, injective_;

  mutable std::mutex mutex_;
  mutable std::unordered_map<std::int64_t, std::unique_ptr<PairSpaces>> pair_cache_;
  mutable std::unordered_map<ObjectId, std::unique_ptr<std::vector<ExtSpace>>> translate_cache_;
  mutable std::unordered_map<ObjectId, std::unique_ptr<Representation>> tau_inv_cache_;
  mutable std::unique_ptr<std::atomic<signed char>[]> compat_cache_;
  mutable std::unique_ptr<std::atomic<int>[]> hom_dim_cache_;
};

}  // namespace cvec
