#pragma once

// Exact dense linear algebra over a field scalar.
//
// Every routine here assumes exact arithmetic: a pivot is any entry that
// compares unequal to Scalar(0). Instantiate with cvec::Rational; floating
// point scalars would compile but give meaningless results.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Core>

namespace cvec::linalg {

using Eigen::Index;

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

/// Reduced row echelon form together with the invertible row transform.
/// `transform * input == reduced`; `inverse_transform` is its inverse.
template <typename Scalar>
struct RowEchelon {
  Mat<Scalar> reduced;
  Mat<Scalar> transform;
  Mat<Scalar> inverse_transform;
  std::vector<Index> pivots;  // pivot column of row r, for r < rank()

  Index rank() const { return static_cast<Index>(pivots.size()); }
};

template <typename Scalar>
RowEchelon<Scalar> row_echelon(const Mat<Scalar>& a, bool with_transform = true) {
  const Index m = a.rows();
  const Index n = a.cols();
  RowEchelon<Scalar> out;
  out.reduced = a;
  if (with_transform) {
    out.transform = Mat<Scalar>::Identity(m, m);
    out.inverse_transform = Mat<Scalar>::Identity(m, m);
  }
  auto& r = out.reduced;
  const Scalar zero(0);
  Index row = 0;
  for (Index col = 0; col < n && row < m; ++col) {
    Index piv = -1;
    for (Index i = row; i < m; ++i) {
      if (r(i, col) != zero) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    if (piv != row) {
      r.row(piv).swap(r.row(row));
      if (with_transform) {
        out.transform.row(piv).swap(out.transform.row(row));
        out.inverse_transform.col(piv).swap(out.inverse_transform.col(row));
      }
    }
    const Scalar p = r(row, col);
    if (p != Scalar(1)) {
      const Scalar inv = Scalar(1) / p;
      for (Index j = col; j < n; ++j)
        if (r(row, j) != zero) r(row, j) *= inv;
      if (with_transform) {
        for (Index j = 0; j < m; ++j)
          if (out.transform(row, j) != zero) out.transform(row, j) *= inv;
        for (Index i = 0; i < m; ++i)
          if (out.inverse_transform(i, row) != zero) out.inverse_transform(i, row) *= p;
      }
    }
    for (Index i = 0; i < m; ++i) {
      if (i == row) continue;
      const Scalar f = r(i, col);
      if (f == zero) continue;
      for (Index j = col; j < n; ++j)
        if (r(row, j) != zero) r(i, j) -= f * r(row, j);
      if (with_transform) {
        for (Index j = 0; j < m; ++j)
          if (out.transform(row, j) != zero) out.transform(i, j) -= f * out.transform(row, j);
        // row_i -= f row_row  =>  inverse gains col_row += f col_i
        for (Index k = 0; k < m; ++k)
          if (out.inverse_transform(k, i) != zero)
            out.inverse_transform(k, row) += f * out.inverse_transform(k, i);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

template <typename Scalar>
Index rank(const Mat<Scalar>& a) {
  if (a.size() == 0) return 0;
  return row_echelon(a, false).rank();
}

/// Sparse row as (column, value) pairs sorted by column, without zeros.
template <typename Scalar>
using SparseRow = std::vector<std::pair<Index, Scalar>>;

/// x - f y.
template <typename Scalar>
SparseRow<Scalar> sparse_axpy(const SparseRow<Scalar>& x, const Scalar& f, const SparseRow<Scalar>& y) {
  SparseRow<Scalar> out;
  out.reserve(x.size() + y.size());
  auto a = x.begin();
  auto b = y.begin();
  while (a != x.end() || b != y.end()) {
    if (b == y.end() || (a != x.end() && a->first < b->first)) {
      out.push_back(*a++);
    } else if (a == x.end() || b->first < a->first) {
      out.emplace_back(b->first, -(f * b->second));
      ++b;
    } else {
      Scalar v = a->second - f * b->second;
      if (v != Scalar(0)) out.emplace_back(a->first, std::move(v));
      ++a, ++b;
    }
  }
  return out;
}

template <typename Scalar>
std::vector<SparseRow<Scalar>> sparse_rows(const Mat<Scalar>& a) {
  std::vector<SparseRow<Scalar>> rows(static_cast<std::size_t>(a.rows()));
  for (Index i = 0; i < a.rows(); ++i)
    for (Index j = 0; j < a.cols(); ++j)
      if (a(i, j) != Scalar(0)) rows[static_cast<std::size_t>(i)].emplace_back(j, a(i, j));
  return rows;
}

template <typename Scalar>
std::vector<SparseRow<Scalar>> sparse_transpose(const std::vector<SparseRow<Scalar>>& rows, Index cols) {
  std::vector<SparseRow<Scalar>> out(static_cast<std::size_t>(cols));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) out[static_cast<std::size_t>(j)].emplace_back(static_cast<Index>(i), v);
  return out;
}

/// Reduced echelon form of a sparse matrix; rows[r] has leading entry 1 in
/// column pivots[r] and zeros in every other pivot column.
template <typename Scalar>
struct SparseEchelon {
  std::vector<SparseRow<Scalar>> rows;
  std::vector<Index> pivots;
  Index rank() const { return static_cast<Index>(pivots.size()); }
};

namespace detail {

// Reduces `row` against the echelon rows in `by_lead`; stores the remainder
// as a new echelon row if nonzero.
template <typename Scalar>
bool insert_row(SparseRow<Scalar> row, std::vector<SparseRow<Scalar>>& by_lead) {
  while (!row.empty()) {
    auto& p = by_lead[static_cast<std::size_t>(row.front().first)];
    if (p.empty()) {
      const Scalar inv = Scalar(1) / row.front().second;
      for (auto& e : row) e.second *= inv;
      p = std::move(row);
      return true;
    }
    const Scalar f = row.front().second;
    row = sparse_axpy(row, f, p);
  }
  return false;
}

}  // namespace detail

/// Rank by inserting each row into an echelon basis keyed on its leading
/// column. Short rows are cheapest to insert first.
template <typename Scalar>
Index sparse_rank(std::vector<SparseRow<Scalar>> rows, Index cols) {
  std::vector<SparseRow<Scalar>> by_lead(static_cast<std::size_t>(cols));
  Index r = 0;
  for (auto& row : rows) r += detail::insert_row(std::move(row), by_lead);
  return r;
}

template <typename Scalar>
SparseEchelon<Scalar> sparse_rref(std::vector<SparseRow<Scalar>> rows, Index cols) {
  std::vector<SparseRow<Scalar>> by_lead(static_cast<std::size_t>(cols));
  for (auto& row : rows) detail::insert_row(std::move(row), by_lead);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c = 0; c < cols; ++c) is_pivot[static_cast<std::size_t>(c)] = !by_lead[static_cast<std::size_t>(c)].empty();
  for (Index c = cols - 1; c >= 0; --c) {
    auto& row = by_lead[static_cast<std::size_t>(c)];
    if (row.empty()) continue;
    for (;;) {
      auto it = std::find_if(row.begin() + 1, row.end(),
                             [&](const auto& e) { return is_pivot[static_cast<std::size_t>(e.first)]; });
      if (it == row.end()) break;
      const Scalar f = it->second;
      row = sparse_axpy(row, f, by_lead[static_cast<std::size_t>(it->first)]);
    }
  }
  SparseEchelon<Scalar> out;
  for (Index c = 0; c < cols; ++c) {
    if (!is_pivot[static_cast<std::size_t>(c)]) continue;
    out.pivots.push_back(c);
    out.rows.push_back(std::move(by_lead[static_cast<std::size_t>(c)]));
  }
  return out;
}

/// Basis of the right null space of the sparse matrix `rows` (with `cols`
/// columns), one vector per column. The basis is the canonical one read
/// off the reduced echelon form (free variable = 1), so the coordinates of
/// a kernel vector are its entries at `free_columns`.
template <typename Scalar>
Mat<Scalar> kernel(std::vector<SparseRow<Scalar>> rows, Index cols, std::vector<Index>* free_columns = nullptr) {
  const auto ech = sparse_rref(std::move(rows), cols);
  std::vector<Index> index_of(static_cast<std::size_t>(cols), -1);
  std::vector<Index> free;
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  for (Index c = 0; c < cols; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      index_of[static_cast<std::size_t>(c)] = static_cast<Index>(free.size());
      free.push_back(c);
    }
  Mat<Scalar> basis = Mat<Scalar>::Zero(cols, static_cast<Index>(free.size()));
  for (std::size_t k = 0; k < free.size(); ++k) basis(free[k], static_cast<Index>(k)) = Scalar(1);
  for (std::size_t r = 0; r < ech.rows.size(); ++r)
    for (const auto& [c, v] : ech.rows[r])
      if (c != ech.pivots[r]) basis(ech.pivots[r], index_of[static_cast<std::size_t>(c)]) = -v;
  if (free_columns) *free_columns = std::move(free);
  return basis;
}

template <typename Scalar>
Mat<Scalar> kernel(const Mat<Scalar>& a, std::vector<Index>* free_columns = nullptr) {
  return kernel(sparse_rows(a), a.cols(), free_columns);
}

/// Explicit presentation of coker(a) = W / im(a), W = Scalar^{a.rows()}.
/// `projection` maps W onto coordinates of the quotient; `lift` is a
/// section, so projection * lift = identity. The quotient basis is the
/// classes of the unit vectors outside the pivot set of im(a).
template <typename Scalar>
struct Cokernel {
  Mat<Scalar> projection;
  Mat<Scalar> lift;
  Index dim() const { return projection.rows(); }
};

/// Cokernel of the map whose columns are the given sparse vectors in
/// Scalar^m.
template <typename Scalar>
Cokernel<Scalar> cokernel_of_columns(std::vector<SparseRow<Scalar>> columns, Index m) {
  const auto ech = sparse_rref(std::move(columns), m);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m), false);
  for (Index c : ech.pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Index> index_of(static_cast<std::size_t>(m), -1);
  std::vector<Index> free;
  for (Index c = 0; c < m; ++c)
    if (!is_pivot[static_cast<std::size_t>(c)]) {
      index_of[static_cast<std::size_t>(c)] = static_cast<Index>(free.size());
      free.push_back(c);
    }
  const Index d = static_cast<Index>(free.size());
  Cokernel<Scalar> out;
  out.projection = Mat<Scalar>::Zero(d, m);
  out.lift = Mat<Scalar>::Zero(m, d);
  for (Index k = 0; k < d; ++k) {
    out.projection(k, free[k]) = Scalar(1);
    out.lift(free[k], k) = Scalar(1);
  }
  // A pivot unit vector is congruent to minus the free part of its row.
  for (std::size_t r = 0; r < ech.rows.size(); ++r)
    for (const auto& [c, v] : ech.rows[r])
      if (c != ech.pivots[r]) out.projection(index_of[static_cast<std::size_t>(c)], ech.pivots[r]) = -v;
  return out;
}

template <typename Scalar>
Cokernel<Scalar> cokernel(const Mat<Scalar>& a) {
  return cokernel_of_columns(sparse_transpose(sparse_rows(a), a.cols()), a.rows());
}

/// Left inverse of a full-column-rank matrix: coordinates of any vector in
/// its column span. `contains` tests span membership.
template <typename Scalar>
struct SpanCoordinates {
  Mat<Scalar> left_inverse;   // d x m
  Mat<Scalar> annihilator;    // (m - d) x m, zero exactly on the span

  explicit SpanCoordinates(const Mat<Scalar>& basis) {
    const Index m = basis.rows();
    const Index d = basis.cols();
    if (d == 0) {
      left_inverse = Mat<Scalar>::Zero(0, m);
      annihilator = Mat<Scalar>::Identity(m, m);
      return;
    }
    const auto ech = row_echelon(basis, true);
    left_inverse = ech.transform.topRows(ech.rank());
    annihilator = ech.transform.bottomRows(m - ech.rank());
    if (ech.rank() != d) throw std::invalid_argument("SpanCoordinates: basis is not linearly independent");
  }

  template <typename Vec>
  Mat<Scalar> coordinates(const Vec& v) const {
    return left_inverse * v;
  }

  template <typename Vec>
  bool contains(const Vec& v) const {
    Mat<Scalar> res = annihilator * v;
    for (Index i = 0; i < res.size(); ++i)
      if (res(i) != Scalar(0)) return false;
    return true;
  }
};

template <typename Scalar>
bool is_zero(const Mat<Scalar>& a) {
  for (Index i = 0; i < a.size(); ++i)
    if (a(i) != Scalar(0)) return false;
  return true;
}

/// Greedy selection of columns of `candidates` that extend the span of
/// `base` (processed left to right). Returns the indices picked.
template <typename Scalar>
std::vector<Index> extend_span(const Mat<Scalar>& base, const Mat<Scalar>& candidates) {
  std::vector<Index> picked;
  Mat<Scalar> current = base;
  Index r = rank(current);
  for (Index c = 0; c < candidates.cols(); ++c) {
    Mat<Scalar> trial(candidates.rows(), current.cols() + 1);
    trial << current, candidates.col(c);
    const Index tr = rank(trial);
    if (tr > r) {
      current = std::move(trial);
      r = tr;
      picked.push_back(c);
    }
  }
  return picked;
}

template <typename Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& a) {
  const auto ech = row_echelon(a, true);
  if (a.rows() != a.cols() || ech.rank() != a.rows()) throw std::invalid_argument("inverse: singular matrix");
  return ech.transform;
}

}  // namespace cvec::linalg
