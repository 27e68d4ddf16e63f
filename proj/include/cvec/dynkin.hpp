#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cvec {

/// Simply-laced Dynkin diagram type.
///
/// Vertex labels (1-based in prose, 0-based in code):
///   A_n: the path 1 - 2 - ... - n.
///   D_n: the path 1 - ... - (n-2), with n-1 and n both attached to n-2.
///   E_n: the path 1 - 3 - 4 - ... - n, with 2 attached to 4 (trivalent 4).
struct DynkinType {
  enum class Family { A, D, E };

  Family family = Family::A;
  int rank = 1;

  /// Throws std::invalid_argument for illegal family/rank pairs.
  DynkinType(Family f, int r);
  DynkinType() = default;

  /// Parses "A3", "D4", "E8" (case-insensitive family letter).
  static DynkinType parse(std::string_view text);

  std::string name() const;

  /// Undirected edges of the diagram in 0-based labels, sorted.
  std::vector<std::pair<int, int>> edges() const;

  /// 0-based label of the trivalent vertex; -1 for type A.
  int branch_vertex() const;

  friend bool operator==(const DynkinType& a, const DynkinType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

/// Every legal Dynkin type of rank <= max_rank, in the order A1..An, D4..Dn, E6..E8.
std::vector<DynkinType> dynkin_types_up_to(int max_rank);

}  // namespace cvec
