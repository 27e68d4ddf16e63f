#pragma once

// Representations of a finite acyclic quiver over the rationals.
//
// A representation assigns a vector space Q^{dims[i]} to each vertex and a
// dims[target] x dims[source] matrix to each arrow. Morphisms are families
// of per-vertex matrices satisfying phi_j * M_a = N_a * phi_i for every
// arrow a : i -> j. All arithmetic is exact.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cvec/linalg.hpp"
#include "cvec/rational.hpp"
#include "cvec/seed.hpp"

namespace cvec {

struct Arrow {
  int source = 0;
  int target = 0;
};

using Path = std::vector<int>;  // arrow indices in traversal order

class Quiver {
 public:
  /// Throws std::invalid_argument if the quiver has an oriented cycle or a
  /// loop, or an endpoint is out of range.
  Quiver(int n, std::vector<Arrow> arrows);

  /// One arrow i -> j per unit of b(i, j) > 0.
  static std::shared_ptr<const Quiver> from_exchange_matrix(const ExchangeMatrix& b);

  int size() const { return n_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  std::shared_ptr<const Quiver> opposite() const;
  ExchangeMatrix exchange_matrix() const;

  /// All paths from `from` to `to`, the trivial path first when from == to.
  const std::vector<Path>& paths(int from, int to) const { return paths_[from * n_ + to]; }
  /// Index of `p` in paths(from, to); -1 if absent.
  int path_index(int from, int to, const Path& p) const;

  /// Number of arrows touching each vertex, ignoring orientation.
  std::vector<int> valencies() const;

  friend bool operator==(const Quiver& a, const Quiver& b);

 private:
  int n_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<Path>> paths_;
  std::vector<std::map<Path, int>> path_lookup_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

class Representation {
 public:
  /// Throws std::invalid_argument on shape mismatch.
  Representation(QuiverPtr q, std::vector<int> dims, std::vector<QMatrix> maps);

  static Representation zero(QuiverPtr q);
  static Representation simple(QuiverPtr q, int i);
  /// P_i(x) has the paths i ~> x as basis.
  static Representation projective(QuiverPtr q, int i);
  /// I_i(x) has the dual basis of the paths x ~> i.
  static Representation injective(QuiverPtr q, int i);

  const Quiver& quiver() const { return *quiver_; }
  const QuiverPtr& quiver_ptr() const { return quiver_; }
  int dim(int i) const { return dims_[i]; }
  const std::vector<int>& dims() const { return dims_; }
  IntVector dim_vector() const;
  int total_dim() const;
  bool is_zero() const { return total_dim() == 0; }
  const QMatrix& map(int arrow) const { return maps_[arrow]; }
  const std::vector<QMatrix>& maps() const { return maps_; }

  /// Composite of the arrow maps along `p` (identity for the trivial path at `from`).
  QMatrix path_map(int from, const Path& p) const;

  friend bool operator==(const Representation& a, const Representation& b) {
    return a.dims_ == b.dims_ && a.maps_ == b.maps_;
  }

 private:
  QuiverPtr quiver_;
  std::vector<int> dims_;
  std::vector<QMatrix> maps_;
};

Representation direct_sum(const std::vector<Representation>& parts);

/// Morphism of representations, one block per vertex (target x source).
struct LinMap {
  std::vector<QMatrix> blocks;

  bool is_zero() const;
  friend bool operator==(const LinMap& a, const LinMap& b) { return a.blocks == b.blocks; }
};

LinMap compose(const LinMap& g, const LinMap& f);
LinMap identity_map(const Representation& m);
LinMap zero_map(const Representation& m, const Representation& n);
LinMap operator+(const LinMap& a, const LinMap& b);
LinMap operator*(const Rational& s, const LinMap& f);
bool is_morphism(const Representation& m, const Representation& n, const LinMap& f);

/// The linear map phi |-> (phi_j M_a - N_a phi_i)_a whose kernel is Hom(M, N)
/// and whose cokernel is Ext^1(M, N).
QMatrix hom_ext_operator(const Representation& m, const Representation& n);

/// dim Hom(M, N) by sparse elimination, without building a basis.
int hom_dimension(const Representation& m, const Representation& n);

/// Hom(M, N) with an explicit basis and coordinate extraction.
class HomSpace {
 public:
  HomSpace(const Representation& m, const Representation& n);

  int dim() const { return static_cast<int>(basis_.size()); }
  const std::vector<LinMap>& basis() const { return basis_; }
  const LinMap& operator[](int k) const { return basis_[k]; }
  /// Coordinates of a morphism in the basis; throws if `f` is not in Hom(M, N).
  QVector coordinates(const LinMap& f) const;
  LinMap element(const QVector& coords) const;

 private:
  std::vector<int> src_dims_, dst_dims_;
  std::vector<LinMap> basis_;
  std::vector<linalg::Index> free_;  // coordinate k is the entry at free_[k]
};

/// Ext^1(M, N) presented as the cokernel of hom_ext_operator(M, N).
/// Classes are coordinate vectors; representatives are per-arrow matrices
/// psi_a : M_source(a) -> N_target(a).
class ExtSpace {
 public:
  ExtSpace(const Representation& m, const Representation& n);

  int dim() const { return static_cast<int>(coker_.dim()); }
  std::vector<QMatrix> representative(const QVector& coords) const;
  QVector classify(const std::vector<QMatrix>& psi) const;

  /// Matrix of the pushforward h_* : Ext(M, N) -> Ext(M, N') for h : N -> N'.
  QMatrix pushforward(const LinMap& h, const ExtSpace& target) const;
  /// Matrix of the pullback f^* : Ext(M, N) -> Ext(M', N) for f : M' -> M.
  QMatrix pullback(const LinMap& f, const ExtSpace& target) const;

  const std::vector<int>& source_dims() const { return src_dims_; }
  const std::vector<int>& target_dims() const { return dst_dims_; }

 private:
  QMatrix tuple_to_vector(const std::vector<QMatrix>& psi) const;
  QuiverPtr quiver_;
  std::vector<int> src_dims_, dst_dims_;
  linalg::Cokernel<Rational> coker_;
};

HomSpace hom_basis(const Representation& m, const Representation& n);
ExtSpace ext_basis(const Representation& m, const Representation& n);

/// sum_i d_i e_i - sum_{a : i -> j} d_i e_j.
std::int64_t euler_form(const Quiver& q, const IntVector& d, const IntVector& e);

/// dim Hom(M, N) - <dim M, dim N>. Throws std::logic_error if negative.
int ext_dim(const Representation& m, const Representation& n);

/// Canonical morphism P_l -> P_k, p |-> p precomposed with a, for arrow a : k -> l.
LinMap projective_arrow_map(const Quiver& q, int arrow);
/// Canonical morphism I_l -> I_k for arrow a : k -> l.
LinMap injective_arrow_map(const Quiver& q, int arrow);

/// Standard resolution 0 -> P1 -> P0 -> M -> 0 with
/// P0 = (+)_i P_i^{dim M_i} and P1 = (+)_{a : i -> j} P_j^{dim M_i}.
struct ProjectiveResolution {
  Representation p1;
  Representation p0;
  LinMap differential;  // P1 -> P0
  LinMap augmentation;  // P0 -> M
  std::vector<int> p0_summands;  // vertex of each indecomposable summand of P0
  std::vector<int> p1_summands;
};

ProjectiveResolution projective_resolution(const Representation& m);

/// Result of an Auslander-Reiten translate. `defined` is false when the
/// input had a projective (for tau) or injective (for tau^-1) summand that
/// the translate sends to zero.
struct Translate {
  Representation module;
  bool defined = true;
};

/// tau M, with (tau M)_k = D Ext^1(M, P_k).
Translate ar_translate(const Representation& m);
/// tau^-1 M, with (tau^-1 M)_k = Ext^1(I_k, M).
Translate ar_translate_inv(const Representation& m);
/// tau^-1 applied to a morphism g : X -> Y, as a map tau^-1 X -> tau^-1 Y.
LinMap ar_translate_inv(const Representation& x, const Representation& y, const LinMap& g);

/// The spaces Ext^1(I_k, M), k = 0..n-1, whose coordinates define tau^-1 M.
std::vector<ExtSpace> inverse_translate_spaces(const Representation& m);
/// tau^-1 M built from precomputed inverse_translate_spaces(M).
Representation ar_translate_inv(const QuiverPtr& q, const std::vector<ExtSpace>& spaces);
/// tau^-1 g from precomputed spaces of its source and target.
LinMap ar_translate_inv(const std::vector<ExtSpace>& from, const std::vector<ExtSpace>& to, const LinMap& g);

/// One indecomposable per positive root, knitted from the projectives by
/// tau^-1. Requires an ADE underlying graph; throws std::logic_error if the
/// count does not match the number of positive roots.
std::vector<Representation> indecomposables(const QuiverPtr& q);

/// Whether Hom(M, N) contains an isomorphism. Decided by probing integer
/// combinations of a Hom basis with a fixed pseudorandom sequence; a false
/// negative needs every probe to hit the zero set of a nonzero determinant.
bool is_iso(const Representation& m, const Representation& n);

/// Whether `f` is invertible (square blocks of full rank).
bool is_invertible(const LinMap& f);

}  // namespace cvec
