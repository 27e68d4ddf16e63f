#include "cvec/representation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "cvec/root_system.hpp"

namespace cvec {

using linalg::Index;

// ---------------------------------------------------------------- Quiver

Quiver::Quiver(int n, std::vector<Arrow> arrows) : n_(n), arrows_(std::move(arrows)) {
  if (n < 0) throw std::invalid_argument("quiver: negative vertex count");
  for (const auto& a : arrows_) {
    if (a.source < 0 || a.target < 0 || a.source >= n || a.target >= n)
      throw std::invalid_argument("quiver: arrow endpoint out of range");
    if (a.source == a.target) throw std::invalid_argument("quiver: loops are not supported");
  }
  // Topological order, then paths by dynamic programming in that order.
  std::vector<int> indeg(n, 0);
  for (const auto& a : arrows_) ++indeg[a.target];
  std::vector<int> order, stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (const auto& a : arrows_)
      if (a.source == v && --indeg[a.target] == 0) stack.push_back(a.target);
  }
  if (static_cast<int>(order.size()) != n) throw std::invalid_argument("quiver: oriented cycle");

  paths_.assign(static_cast<std::size_t>(n) * n, {});
  path_lookup_.assign(static_cast<std::size_t>(n) * n, {});
  for (int from = 0; from < n; ++from) {
    paths_[from * n + from].push_back({});
    for (int v : order) {
      // Extend every path from -> v by each arrow leaving v.
      for (std::size_t ai = 0; ai < arrows_.size(); ++ai) {
        const auto& a = arrows_[ai];
        if (a.source != v) continue;
        for (const Path& p : paths_[from * n + v]) {
          Path q = p;
          q.push_back(static_cast<int>(ai));
          paths_[from * n + a.target].push_back(std::move(q));
        }
      }
    }
  }
  for (std::size_t k = 0; k < paths_.size(); ++k) {
    std::sort(paths_[k].begin(), paths_[k].end(),
              [](const Path& x, const Path& y) { return x.size() != y.size() ? x.size() < y.size() : x < y; });
    for (std::size_t idx = 0; idx < paths_[k].size(); ++idx) path_lookup_[k][paths_[k][idx]] = static_cast<int>(idx);
  }
}

QuiverPtr Quiver::from_exchange_matrix(const ExchangeMatrix& b) {
  std::vector<Arrow> arrows;
  for (auto [i, j] : b.arrows()) arrows.push_back({i, j});
  return std::make_shared<const Quiver>(b.size(), std::move(arrows));
}

QuiverPtr Quiver::opposite() const {
  std::vector<Arrow> rev;
  for (const auto& a : arrows_) rev.push_back({a.target, a.source});
  return std::make_shared<const Quiver>(n_, std::move(rev));
}

ExchangeMatrix Quiver::exchange_matrix() const {
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : arrows_) arrows.emplace_back(a.source, a.target);
  return ExchangeMatrix::from_arrows(n_, arrows);
}

int Quiver::path_index(int from, int to, const Path& p) const {
  const auto& lookup = path_lookup_[from * n_ + to];
  auto it = lookup.find(p);
  return it == lookup.end() ? -1 : it->second;
}

std::vector<int> Quiver::valencies() const {
  std::vector<int> v(n_, 0);
  for (const auto& a : arrows_) {
    ++v[a.source];
    ++v[a.target];
  }
  return v;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.n_ != b.n_ || a.arrows_.size() != b.arrows_.size()) return false;
  for (std::size_t i = 0; i < a.arrows_.size(); ++i)
    if (a.arrows_[i].source != b.arrows_[i].source || a.arrows_[i].target != b.arrows_[i].target) return false;
  return true;
}

// -------------------------------------------------------- Representation

Representation::Representation(QuiverPtr q, std::vector<int> dims, std::vector<QMatrix> maps)
    : quiver_(std::move(q)), dims_(std::move(dims)), maps_(std::move(maps)) {
  if (!quiver_) throw std::invalid_argument("representation: null quiver");
  if (static_cast<int>(dims_.size()) != quiver_->size()) throw std::invalid_argument("representation: dims size");
  if (maps_.size() != quiver_->arrows().size()) throw std::invalid_argument("representation: maps size");
  for (int d : dims_)
    if (d < 0) throw std::invalid_argument("representation: negative dimension");
  for (std::size_t a = 0; a < maps_.size(); ++a) {
    const auto& ar = quiver_->arrows()[a];
    if (maps_[a].rows() != dims_[ar.target] || maps_[a].cols() != dims_[ar.source])
      throw std::invalid_argument("representation: arrow matrix has the wrong shape");
  }
}

Representation Representation::zero(QuiverPtr q) {
  const int n = q->size();
  std::vector<QMatrix> maps(q->arrows().size(), QMatrix(0, 0));
  return Representation(std::move(q), std::vector<int>(n, 0), std::move(maps));
}

Representation Representation::simple(QuiverPtr q, int i) {
  std::vector<int> dims(q->size(), 0);
  dims.at(i) = 1;
  std::vector<QMatrix> maps;
  for (const auto& a : q->arrows()) maps.push_back(QMatrix::Zero(dims[a.target], dims[a.source]));
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

Representation Representation::projective(QuiverPtr q, int i) {
  const int n = q->size();
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) dims[x] = static_cast<int>(q->paths(i, x).size());
  std::vector<QMatrix> maps;
  for (std::size_t ai = 0; ai < q->arrows().size(); ++ai) {
    const auto& a = q->arrows()[ai];
    QMatrix m = QMatrix::Zero(dims[a.target], dims[a.source]);
    const auto& from = q->paths(i, a.source);
    for (std::size_t p = 0; p < from.size(); ++p) {
      Path ext = from[p];
      ext.push_back(static_cast<int>(ai));
      m(q->path_index(i, a.target, ext), static_cast<Index>(p)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

Representation Representation::injective(QuiverPtr q, int i) {
  const int n = q->size();
  std::vector<int> dims(n);
  for (int x = 0; x < n; ++x) dims[x] = static_cast<int>(q->paths(x, i).size());
  std::vector<QMatrix> maps;
  for (std::size_t ai = 0; ai < q->arrows().size(); ++ai) {
    const auto& a = q->arrows()[ai];
    // Dual of paths(target ~> i) -> paths(source ~> i), r |-> r after a.
    QMatrix m = QMatrix::Zero(dims[a.target], dims[a.source]);
    const auto& from_target = q->paths(a.target, i);
    for (std::size_t r = 0; r < from_target.size(); ++r) {
      Path ext{static_cast<int>(ai)};
      ext.insert(ext.end(), from_target[r].begin(), from_target[r].end());
      m(static_cast<Index>(r), q->path_index(a.source, i, ext)) = 1;
    }
    maps.push_back(std::move(m));
  }
  return Representation(std::move(q), std::move(dims), std::move(maps));
}

IntVector Representation::dim_vector() const { return IntVector(dims_.begin(), dims_.end()); }

int Representation::total_dim() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

QMatrix Representation::path_map(int from, const Path& p) const {
  QMatrix m = QMatrix::Identity(dims_[from], dims_[from]);
  for (int a : p) m = (maps_[a] * m).eval();
  return m;
}

Representation direct_sum(const std::vector<Representation>& parts) {
  if (parts.empty()) throw std::invalid_argument("direct_sum of nothing");
  const auto& q = parts.front().quiver_ptr();
  const int n = q->size();
  std::vector<int> dims(n, 0);
  for (const auto& p : parts)
    for (int i = 0; i < n; ++i) dims[i] += p.dim(i);
  std::vector<QMatrix> maps;
  for (std::size_t ai = 0; ai < q->arrows().size(); ++ai) {
    const auto& a = q->arrows()[ai];
    QMatrix m = QMatrix::Zero(dims[a.target], dims[a.source]);
    Index r = 0, c = 0;
    for (const auto& p : parts) {
      m.block(r, c, p.dim(a.target), p.dim(a.source)) = p.map(static_cast<int>(ai));
      r += p.dim(a.target);
      c += p.dim(a.source);
    }
    maps.push_back(std::move(m));
  }
  return Representation(q, std::move(dims), std::move(maps));
}

// ---------------------------------------------------------------- LinMap

bool LinMap::is_zero() const {
  return std::all_of(blocks.begin(), blocks.end(), [](const QMatrix& b) { return linalg::is_zero(b); });
}

LinMap compose(const LinMap& g, const LinMap& f) {
  if (g.blocks.size() != f.blocks.size()) throw std::invalid_argument("compose: vertex count mismatch");
  LinMap out;
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    if (g.blocks[i].cols() != f.blocks[i].rows()) throw std::invalid_argument("compose: shape mismatch");
    out.blocks.push_back(g.blocks[i] * f.blocks[i]);
  }
  return out;
}

LinMap identity_map(const Representation& m) {
  LinMap out;
  for (int d : m.dims()) out.blocks.push_back(QMatrix::Identity(d, d));
  return out;
}

LinMap zero_map(const Representation& m, const Representation& n) {
  LinMap out;
  for (int i = 0; i < m.quiver().size(); ++i) out.blocks.push_back(QMatrix::Zero(n.dim(i), m.dim(i)));
  return out;
}

LinMap operator+(const LinMap& a, const LinMap& b) {
  LinMap out;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) out.blocks.push_back(a.blocks[i] + b.blocks[i]);
  return out;
}

LinMap operator*(const Rational& s, const LinMap& f) {
  LinMap out;
  for (const auto& b : f.blocks) out.blocks.push_back(s * b);
  return out;
}

bool is_morphism(const Representation& m, const Representation& n, const LinMap& f) {
  const auto& q = m.quiver();
  if (static_cast<int>(f.blocks.size()) != q.size()) return false;
  for (int i = 0; i < q.size(); ++i)
    if (f.blocks[i].rows() != n.dim(i) || f.blocks[i].cols() != m.dim(i)) return false;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    QMatrix lhs = f.blocks[a.target] * m.map(static_cast<int>(ai));
    QMatrix rhs = n.map(static_cast<int>(ai)) * f.blocks[a.source];
    if (lhs != rhs) return false;
  }
  return true;
}

// ------------------------------------------------------- Hom and Ext^1

namespace {

// Offsets of vec(phi_i) (N_i x M_i, column-major) in the vertex space.
std::vector<Index> vertex_offsets(const std::vector<int>& src, const std::vector<int>& dst) {
  std::vector<Index> off(src.size() + 1, 0);
  for (std::size_t i = 0; i < src.size(); ++i) off[i + 1] = off[i] + Index(src[i]) * dst[i];
  return off;
}

// Offsets of vec(psi_a) (N_target x M_source) in the arrow space.
std::vector<Index> arrow_offsets(const Quiver& q, const std::vector<int>& src, const std::vector<int>& dst) {
  std::vector<Index> off(q.arrows().size() + 1, 0);
  for (std::size_t a = 0; a < q.arrows().size(); ++a)
    off[a + 1] = off[a] + Index(src[q.arrows()[a].source]) * dst[q.arrows()[a].target];
  return off;
}

void check_same_quiver(const Representation& m, const Representation& n) {
  if (m.quiver_ptr() != n.quiver_ptr() && !(m.quiver() == n.quiver()))
    throw std::invalid_argument("representations of different quivers");
}

}  // namespace

QMatrix hom_ext_operator(const Representation& m, const Representation& n) {
  check_same_quiver(m, n);
  const auto& q = m.quiver();
  const auto voff = vertex_offsets(m.dims(), n.dims());
  const auto aoff = arrow_offsets(q, m.dims(), n.dims());
  QMatrix delta = QMatrix::Zero(aoff.back(), voff.back());
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    const int i = a.source, j = a.target;
    const QMatrix& ma = m.map(static_cast<int>(ai));  // M_j x M_i
    const QMatrix& na = n.map(static_cast<int>(ai));  // N_j x N_i
    const int nj = n.dim(j), mi = m.dim(i), ni = n.dim(i), mj = m.dim(j);
    for (int r = 0; r < nj; ++r)
      for (int c = 0; c < mi; ++c) {
        const Index row = aoff[ai] + Index(c) * nj + r;
        // + sum_s phi_j(r, s) M_a(s, c)
        for (int s = 0; s < mj; ++s)
          if (!ma(s, c).is_zero()) delta(row, voff[j] + Index(s) * nj + r) += ma(s, c);
        // - sum_s N_a(r, s) phi_i(s, c)
        for (int s = 0; s < ni; ++s)
          if (!na(r, s).is_zero()) delta(row, voff[i] + Index(c) * ni + s) -= na(r, s);
      }
  }
  return delta;
}

namespace {

// Rows of hom_ext_operator(m, n) in sparse form.
std::vector<linalg::SparseRow<Rational>> hom_ext_rows(const Representation& m, const Representation& n) {
  check_same_quiver(m, n);
  const auto& q = m.quiver();
  const auto voff = vertex_offsets(m.dims(), n.dims());
  const auto aoff = arrow_offsets(q, m.dims(), n.dims());
  std::vector<linalg::SparseRow<Rational>> rows(static_cast<std::size_t>(aoff.back()));
  std::map<Index, Rational> row;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    const int i = a.source, j = a.target;
    const QMatrix& ma = m.map(static_cast<int>(ai));
    const QMatrix& na = n.map(static_cast<int>(ai));
    const int nj = n.dim(j), mi = m.dim(i), ni = n.dim(i), mj = m.dim(j);
    for (int r = 0; r < nj; ++r)
      for (int c = 0; c < mi; ++c) {
        row.clear();
        for (int s = 0; s < mj; ++s)
          if (!ma(s, c).is_zero()) row[voff[j] + Index(s) * nj + r] += ma(s, c);
        for (int s = 0; s < ni; ++s)
          if (!na(r, s).is_zero()) row[voff[i] + Index(c) * ni + s] -= na(r, s);
        auto& sparse = rows[static_cast<std::size_t>(aoff[ai] + Index(c) * nj + r)];
        for (auto& [col, v] : row)
          if (!v.is_zero()) sparse.emplace_back(col, v);
      }
  }
  return rows;
}

Index hom_unknowns(const Representation& m, const Representation& n) {
  return vertex_offsets(m.dims(), n.dims()).back();
}

}  // namespace

int hom_dimension(const Representation& m, const Representation& n) {
  auto rows = hom_ext_rows(m, n);
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const Index unknowns = hom_unknowns(m, n);
  return static_cast<int>(unknowns - linalg::sparse_rank(std::move(rows), unknowns));
}

HomSpace::HomSpace(const Representation& m, const Representation& n) : src_dims_(m.dims()), dst_dims_(n.dims()) {
  const QMatrix ker = linalg::kernel(hom_ext_rows(m, n), hom_unknowns(m, n), &free_);
  const auto voff = vertex_offsets(src_dims_, dst_dims_);
  for (Index k = 0; k < ker.cols(); ++k) {
    LinMap f;
    for (std::size_t i = 0; i < src_dims_.size(); ++i) {
      QMatrix b(dst_dims_[i], src_dims_[i]);
      for (int c = 0; c < src_dims_[i]; ++c)
        for (int r = 0; r < dst_dims_[i]; ++r) b(r, c) = ker(voff[i] + Index(c) * dst_dims_[i] + r, k);
      f.blocks.push_back(std::move(b));
    }
    basis_.push_back(std::move(f));
  }
}

QVector HomSpace::coordinates(const LinMap& f) const {
  const auto voff = vertex_offsets(src_dims_, dst_dims_);
  QVector v(voff.back());
  for (std::size_t i = 0; i < src_dims_.size(); ++i) {
    if (f.blocks[i].rows() != dst_dims_[i] || f.blocks[i].cols() != src_dims_[i])
      throw std::invalid_argument("HomSpace::coordinates: shape mismatch");
    for (int c = 0; c < src_dims_[i]; ++c)
      for (int r = 0; r < dst_dims_[i]; ++r) v(voff[i] + Index(c) * dst_dims_[i] + r) = f.blocks[i](r, c);
  }
  QVector coords(dim());
  for (int k = 0; k < dim(); ++k) coords(k) = v(free_[k]);
  if (!(element(coords) == f)) throw std::invalid_argument("HomSpace::coordinates: not a morphism");
  return coords;
}

LinMap HomSpace::element(const QVector& coords) const {
  if (coords.size() != dim()) throw std::invalid_argument("HomSpace::element: wrong coordinate count");
  LinMap out;
  for (std::size_t i = 0; i < src_dims_.size(); ++i) out.blocks.push_back(QMatrix::Zero(dst_dims_[i], src_dims_[i]));
  for (int k = 0; k < dim(); ++k) {
    if (coords(k).is_zero()) continue;
    for (std::size_t i = 0; i < src_dims_.size(); ++i) out.blocks[i] += coords(k) * basis_[k].blocks[i];
  }
  return out;
}

ExtSpace::ExtSpace(const Representation& m, const Representation& n)
    : quiver_(m.quiver_ptr()), src_dims_(m.dims()), dst_dims_(n.dims()) {
  auto rows = hom_ext_rows(m, n);
  const auto m_rows = static_cast<Index>(rows.size());
  coker_ = linalg::cokernel_of_columns(linalg::sparse_transpose(rows, hom_unknowns(m, n)), m_rows);
}

QMatrix ExtSpace::tuple_to_vector(const std::vector<QMatrix>& psi) const {
  const auto aoff = arrow_offsets(*quiver_, src_dims_, dst_dims_);
  QMatrix v(aoff.back(), 1);
  for (std::size_t a = 0; a < psi.size(); ++a) {
    const auto& ar = quiver_->arrows()[a];
    const int rows = dst_dims_[ar.target], cols = src_dims_[ar.source];
    if (psi[a].rows() != rows || psi[a].cols() != cols) throw std::invalid_argument("ExtSpace: tuple shape mismatch");
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) v(aoff[a] + Index(c) * rows + r, 0) = psi[a](r, c);
  }
  return v;
}

std::vector<QMatrix> ExtSpace::representative(const QVector& coords) const {
  const QMatrix v = coker_.lift * coords;
  const auto aoff = arrow_offsets(*quiver_, src_dims_, dst_dims_);
  std::vector<QMatrix> psi;
  for (std::size_t a = 0; a < quiver_->arrows().size(); ++a) {
    const auto& ar = quiver_->arrows()[a];
    const int rows = dst_dims_[ar.target], cols = src_dims_[ar.source];
    QMatrix b(rows, cols);
    for (int c = 0; c < cols; ++c)
      for (int r = 0; r < rows; ++r) b(r, c) = v(aoff[a] + Index(c) * rows + r, 0);
    psi.push_back(std::move(b));
  }
  return psi;
}

QVector ExtSpace::classify(const std::vector<QMatrix>& psi) const { return coker_.projection * tuple_to_vector(psi); }

QMatrix ExtSpace::pushforward(const LinMap& h, const ExtSpace& target) const {
  QMatrix out(target.dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    auto psi = representative(QVector::Unit(dim(), k));
    for (std::size_t a = 0; a < psi.size(); ++a) psi[a] = (h.blocks[quiver_->arrows()[a].target] * psi[a]).eval();
    out.col(k) = target.classify(psi);
  }
  return out;
}

QMatrix ExtSpace::pullback(const LinMap& f, const ExtSpace& target) const {
  QMatrix out(target.dim(), dim());
  for (int k = 0; k < dim(); ++k) {
    auto psi = representative(QVector::Unit(dim(), k));
    for (std::size_t a = 0; a < psi.size(); ++a) psi[a] = (psi[a] * f.blocks[quiver_->arrows()[a].source]).eval();
    out.col(k) = target.classify(psi);
  }
  return out;
}

HomSpace hom_basis(const Representation& m, const Representation& n) { return HomSpace(m, n); }
ExtSpace ext_basis(const Representation& m, const Representation& n) { return ExtSpace(m, n); }

std::int64_t euler_form(const Quiver& q, const IntVector& d, const IntVector& e) {
  std::int64_t s = 0;
  for (int i = 0; i < q.size(); ++i) s += d[i] * e[i];
  for (const auto& a : q.arrows()) s -= d[a.source] * e[a.target];
  return s;
}

int ext_dim(const Representation& m, const Representation& n) {
  const int hom = hom_basis(m, n).dim();
  const auto e = hom - euler_form(m.quiver(), m.dim_vector(), n.dim_vector());
  if (e < 0) throw std::logic_error("ext_dim: negative result, representation invariant broken");
  return static_cast<int>(e);
}

// ---------------------------------------------------- canonical morphisms

LinMap projective_arrow_map(const Quiver& q, int arrow) {
  const auto& a = q.arrows().at(arrow);
  const int k = a.source, l = a.target;
  LinMap f;
  for (int x = 0; x < q.size(); ++x) {
    const auto& from_l = q.paths(l, x);
    QMatrix b = QMatrix::Zero(static_cast<Index>(q.paths(k, x).size()), static_cast<Index>(from_l.size()));
    for (std::size_t p = 0; p < from_l.size(); ++p) {
      Path ext{arrow};
      ext.insert(ext.end(), from_l[p].begin(), from_l[p].end());
      b(q.path_index(k, x, ext), static_cast<Index>(p)) = 1;
    }
    f.blocks.push_back(std::move(b));
  }
  return f;
}

LinMap injective_arrow_map(const Quiver& q, int arrow) {
  const auto& a = q.arrows().at(arrow);
  const int k = a.source, l = a.target;
  LinMap f;
  for (int x = 0; x < q.size(); ++x) {
    // Dual of paths(x ~> k) -> paths(x ~> l), r |-> r then a.
    const auto& to_k = q.paths(x, k);
    QMatrix b = QMatrix::Zero(static_cast<Index>(to_k.size()), static_cast<Index>(q.paths(x, l).size()));
    for (std::size_t r = 0; r < to_k.size(); ++r) {
      Path ext = to_k[r];
      ext.push_back(arrow);
      b(static_cast<Index>(r), q.path_index(x, l, ext)) = 1;
    }
    f.blocks.push_back(std::move(b));
  }
  return f;
}

// ------------------------------------------------ projective resolution

ProjectiveResolution projective_resolution(const Representation& m) {
  const QuiverPtr& qp = m.quiver_ptr();
  const Quiver& q = *qp;
  const int n = q.size();
  std::vector<Representation> p0_parts, p1_parts;
  std::vector<int> p0_vertex, p1_vertex;
  // Summand (i, basis index t) of P0 and (arrow a, basis index t of M_source) of P1.
  std::vector<std::pair<int, int>> p0_label, p1_label;
  for (int i = 0; i < n; ++i)
    for (int t = 0; t < m.dim(i); ++t) {
      p0_parts.push_back(Representation::projective(qp, i));
      p0_vertex.push_back(i);
      p0_label.emplace_back(i, t);
    }
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    for (int t = 0; t < m.dim(a.source); ++t) {
      p1_parts.push_back(Representation::projective(qp, a.target));
      p1_vertex.push_back(a.target);
      p1_label.emplace_back(static_cast<int>(ai), t);
    }
  }
  Representation p0 = p0_parts.empty() ? Representation::zero(qp) : direct_sum(p0_parts);
  Representation p1 = p1_parts.empty() ? Representation::zero(qp) : direct_sum(p1_parts);

  // Offsets of summands within each vertex space.
  auto offsets = [&](const std::vector<Representation>& parts) {
    std::vector<std::vector<Index>> off(parts.size(), std::vector<Index>(n, 0));
    std::vector<Index> running(n, 0);
    for (std::size_t s = 0; s < parts.size(); ++s)
      for (int x = 0; x < n; ++x) {
        off[s][x] = running[x];
        running[x] += parts[s].dim(x);
      }
    return off;
  };
  const auto off0 = offsets(p0_parts);
  const auto off1 = offsets(p1_parts);

  // Augmentation: path p : i ~> x in summand (i, t) maps to M_p e_t.
  LinMap eps;
  for (int x = 0; x < n; ++x) eps.blocks.push_back(QMatrix::Zero(m.dim(x), p0.dim(x)));
  for (std::size_t s = 0; s < p0_parts.size(); ++s) {
    auto [i, t] = p0_label[s];
    for (int x = 0; x < n; ++x) {
      const auto& ps = q.paths(i, x);
      for (std::size_t p = 0; p < ps.size(); ++p)
        eps.blocks[x].col(off0[s][x] + static_cast<Index>(p)) = m.path_map(i, ps[p]).col(t);
    }
  }

  // Differential: path r : j ~> x in summand (a : i -> j, t) maps to
  // (r after a) in summand (i, t) minus sum_u M_a(u, t) r in summand (j, u).
  auto p0_index = [&](int vertex, int t) {
    for (std::size_t s = 0; s < p0_label.size(); ++s)
      if (p0_label[s].first == vertex && p0_label[s].second == t) return s;
    throw std::logic_error("projective_resolution: missing summand");
  };
  LinMap d;
  for (int x = 0; x < n; ++x) d.blocks.push_back(QMatrix::Zero(p0.dim(x), p1.dim(x)));
  for (std::size_t s = 0; s < p1_parts.size(); ++s) {
    auto [ai, t] = p1_label[s];
    const auto& a = q.arrows()[ai];
    const std::size_t head = p0_index(a.source, t);
    for (int x = 0; x < n; ++x) {
      const auto& rs = q.paths(a.target, x);
      for (std::size_t r = 0; r < rs.size(); ++r) {
        const Index col = off1[s][x] + static_cast<Index>(r);
        Path ext{ai};
        ext.insert(ext.end(), rs[r].begin(), rs[r].end());
        d.blocks[x](off0[head][x] + q.path_index(a.source, x, ext), col) += 1;
        for (int u = 0; u < m.dim(a.target); ++u) {
          const Rational coef = m.map(ai)(u, t);
          if (coef.is_zero()) continue;
          const std::size_t tail = p0_index(a.target, u);
          d.blocks[x](off0[tail][x] + static_cast<Index>(r), col) -= coef;
        }
      }
    }
  }
  return ProjectiveResolution{std::move(p1), std::move(p0), std::move(d), std::move(eps), std::move(p0_vertex),
                              std::move(p1_vertex)};
}

// ------------------------------------------------------ AR translation

namespace {

// Coxeter transformation -C^T C^{-1}, where C(x, i) = #paths i ~> x.
QMatrix coxeter_matrix(const Quiver& q) {
  const int n = q.size();
  QMatrix c(n, n);
  for (int x = 0; x < n; ++x)
    for (int i = 0; i < n; ++i) c(x, i) = static_cast<std::int64_t>(q.paths(i, x).size());
  return -(c.transpose() * linalg::inverse(c));
}

IntVector apply_matrix(const QMatrix& m, const IntVector& v) {
  IntVector out(v.size(), 0);
  for (Index i = 0; i < m.rows(); ++i) {
    Rational s = 0;
    for (Index j = 0; j < m.cols(); ++j) s += m(i, j) * Rational(v[j]);
    if (!s.is_integer()) throw std::logic_error("Coxeter image is not integral");
    out[i] = s.num();
  }
  return out;
}

}  // namespace

Translate ar_translate(const Representation& m) {
  const QuiverPtr& qp = m.quiver_ptr();
  const Quiver& q = *qp;
  const int n = q.size();
  std::vector<ExtSpace> spaces;
  for (int k = 0; k < n; ++k) spaces.emplace_back(m, Representation::projective(qp, k));
  std::vector<int> dims(n);
  for (int k = 0; k < n; ++k) dims[k] = spaces[k].dim();
  std::vector<QMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    // (tau M)_k -> (tau M)_l is dual to Ext(M, P_l) -> Ext(M, P_k).
    const QMatrix push = spaces[a.target].pushforward(projective_arrow_map(q, static_cast<int>(ai)), spaces[a.source]);
    maps.push_back(push.transpose());
  }
  Representation out(qp, std::move(dims), std::move(maps));
  const bool defined = out.dim_vector() == apply_matrix(coxeter_matrix(q), m.dim_vector());
  return Translate{std::move(out), defined};
}

std::vector<ExtSpace> inverse_translate_spaces(const Representation& m) {
  std::vector<ExtSpace> spaces;
  for (int k = 0; k < m.quiver().size(); ++k) spaces.emplace_back(Representation::injective(m.quiver_ptr(), k), m);
  return spaces;
}

Representation ar_translate_inv(const QuiverPtr& qp, const std::vector<ExtSpace>& spaces) {
  const Quiver& q = *qp;
  std::vector<int> dims(q.size());
  for (int k = 0; k < q.size(); ++k) dims[k] = spaces[k].dim();
  std::vector<QMatrix> maps;
  for (std::size_t ai = 0; ai < q.arrows().size(); ++ai) {
    const auto& a = q.arrows()[ai];
    maps.push_back(spaces[a.source].pullback(injective_arrow_map(q, static_cast<int>(ai)), spaces[a.target]));
  }
  return Representation(qp, std::move(dims), std::move(maps));
}

LinMap ar_translate_inv(const std::vector<ExtSpace>& from, const std::vector<ExtSpace>& to, const LinMap& g) {
  LinMap out;
  for (std::size_t k = 0; k < from.size(); ++k) out.blocks.push_back(from[k].pushforward(g, to[k]));
  return out;
}

Translate ar_translate_inv(const Representation& m) {
  Representation out = ar_translate_inv(m.quiver_ptr(), inverse_translate_spaces(m));
  const QMatrix inv_cox = linalg::inverse(coxeter_matrix(m.quiver()));
  const bool defined = out.dim_vector() == apply_matrix(inv_cox, m.dim_vector());
  return Translate{std::move(out), defined};
}

LinMap ar_translate_inv(const Representation& x, const Representation& y, const LinMap& g) {
  return ar_translate_inv(inverse_translate_spaces(x), inverse_translate_spaces(y), g);
}

// ---------------------------------------------------- indecomposables

std::vector<Representation> indecomposables(const QuiverPtr& q) {
  auto id = identify_dynkin(q->exchange_matrix());
  if (!id || q->arrows().size() + 1 != static_cast<std::size_t>(q->size()))
    throw std::invalid_argument("indecomposables: underlying graph is not a Dynkin diagram");
  std::vector<Representation> out;
  std::set<IntVector> seen;
  std::vector<Representation> queue;
  for (int i = 0; i < q->size(); ++i) queue.push_back(Representation::projective(q, i));
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Representation& m = queue[head];
    if (!seen.insert(m.dim_vector()).second) continue;
    out.push_back(m);
    auto next = ar_translate_inv(m);
    if (!next.module.is_zero()) queue.push_back(std::move(next.module));
  }
  const auto expected = positive_roots(id->first).size();
  if (out.size() != expected)
    throw std::logic_error("indecomposables: knitted " + std::to_string(out.size()) + " modules, expected " +
                           std::to_string(expected));
  return out;
}

bool is_invertible(const LinMap& f) {
  for (const auto& b : f.blocks) {
    if (b.rows() != b.cols()) return false;
    if (b.rows() > 0 && linalg::rank(b) != b.rows()) return false;
  }
  return true;
}

bool is_iso(const Representation& m, const Representation& n) {
  if (m.dims() != n.dims()) return false;
  if (m == n) return true;
  const HomSpace hom(m, n);
  if (hom.dim() == 0) return m.is_zero();
  for (const auto& f : hom.basis())
    if (is_invertible(f)) return true;
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<std::int64_t> coef(-1000, 1000);
  for (int attempt = 0; attempt < 16; ++attempt) {
    QVector c(hom.dim());
    for (int k = 0; k < hom.dim(); ++k) c(k) = coef(rng);
    if (is_invertible(hom.element(c))) return true;
  }
  return false;
}

}  // namespace cvec
