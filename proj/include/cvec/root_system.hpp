#pragma once

#include <set>
#include <vector>

#include "cvec/dynkin.hpp"
#include "cvec/seed.hpp"

namespace cvec {

/// Root in simple-root coordinates, labeled per DynkinType.
using RootVector = IntVector;

IntMatrix cartan_matrix(const DynkinType& t);

/// Positive roots by closure of the simple roots under simple reflections,
/// keeping only nonnegative vectors. Memoized per type; safe to call from
/// several threads. Sorted lexicographically.
const std::vector<RootVector>& positive_roots(const DynkinType& t);

/// Same closure, but reflections are applied in the order given by `order`
/// (a permutation of the vertices, cycled). Not memoized; used to check
/// order independence.
std::vector<RootVector> positive_roots_with_order(const DynkinType& t, const std::vector<int>& order);

struct MaxCoefficient {
  std::int64_t value = 0;
  std::set<int> vertices;  // 0-based labels where value is attained
};

MaxCoefficient max_coefficient(const DynkinType& t);
MaxCoefficient max_coefficient(const std::vector<RootVector>& roots);

/// The unique positive root that dominates every other coordinate-wise.
RootVector highest_root(const DynkinType& t);

/// Whether the support of `root` is connected in the diagram of `t`.
bool has_connected_support(const DynkinType& t, const RootVector& root);

}  // namespace cvec
