#include "cvec/cluster_category.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <set>
#include <sstream>

namespace cvec {

using linalg::Index;

std::string CObject::str() const {
  if (kind == ObjectKind::ShiftedProjective) return "S P" + std::to_string(vertex + 1);
  return to_string(root);
}

bool CMorphism::is_zero() const { return linalg::is_zero(QMatrix(h)) && linalg::is_zero(QMatrix(f)); }

std::vector<ObjectId> Cluster::sorted() const {
  std::vector<ObjectId> s = summands;
  std::sort(s.begin(), s.end());
  return s;
}

int Cluster::position(ObjectId x) const {
  for (int i = 0; i < size(); ++i)
    if (summands[i] == x) return i;
  return -1;
}

std::vector<int> Approximation::multiplicities(int n) const {
  std::vector<int> m(n, 0);
  for (int p : positions) ++m[p];
  return m;
}

int ClusterCategory::Block::dim() const {
  switch (kind) {
    case Kind::Hom: return hom->dim();
    case Kind::Ext: return ext->dim();
    default: return 0;
  }
}

// ------------------------------------------------------------- domain

ClusterCategory::ClusterCategory(const ExchangeMatrix& b, Options options) : b_(b) {
  if (!b.is_acyclic()) throw std::invalid_argument("cluster category: exchange matrix must be acyclic");
  quiver_ = Quiver::from_exchange_matrix(b)->opposite();
  if (auto id = identify_dynkin(b)) {
    type_ = id->first;
    build_dynkin_domain();
  } else {
    if (options.dimension_bound <= 0)
      throw std::invalid_argument("cluster category: non-Dynkin quiver needs a positive dimension bound");
    bound_limited_ = true;
    build_bounded_domain(options.dimension_bound);
  }
  finish_domain();
}

void ClusterCategory::add_module(Representation m) {
  objects_.push_back(Entry{CObject::module(m.dim_vector()), std::move(m), false});
}

void ClusterCategory::build_dynkin_domain() {
  for (auto& m : indecomposables(quiver_)) add_module(std::move(m));
}

void ClusterCategory::build_bounded_domain(int bound) {
  const int n = quiver_->size();
  std::deque<Representation> queue;
  for (int i = 0; i < n; ++i) {
    queue.push_back(Representation::projective(quiver_, i));
    queue.push_back(Representation::injective(quiver_, i));
    queue.push_back(Representation::simple(quiver_, i));
  }
  std::set<IntVector> seen;
  while (!queue.empty()) {
    Representation m = std::move(queue.front());
    queue.pop_front();
    if (m.is_zero() || m.total_dim() > bound) continue;
    if (!seen.insert(m.dim_vector()).second) continue;
    const int end = hom_dimension(m, m);
    if (end != 1 || end - euler_form(*quiver_, m.dim_vector(), m.dim_vector()) != 0) continue;
    queue.push_back(ar_translate(m).module);
    queue.push_back(ar_translate_inv(m).module);
    add_module(std::move(m));
  }
}

void ClusterCategory::finish_domain() {
  std::sort(objects_.begin(), objects_.end(),
            [](const Entry& a, const Entry& b) { return a.object.root < b.object.root; });
  const int n = quiver_->size();
  for (ObjectId x = 0; x < object_count(); ++x) by_root_[objects_[x].object.root] = x;
  projective_.resize(n);
  injective_.resize(n);
  for (int i = 0; i < n; ++i) {
    auto p = by_root_.find(Representation::projective(quiver_, i).dim_vector());
    auto q = by_root_.find(Representation::injective(quiver_, i).dim_vector());
    if (p == by_root_.end() || q == by_root_.end())
      throw std::invalid_argument("cluster category: dimension bound excludes a projective or injective");
    projective_[i] = p->second;
    injective_[i] = q->second;
    objects_[q->second].injective_module = true;
  }
  for (int i = 0; i < n; ++i) {
    shifted_.push_back(object_count());
    objects_.push_back(Entry{CObject::shifted_projective(i), objects_[projective_[i]].rep, false});
  }
  const auto total = static_cast<std::size_t>(object_count()) * object_count();
  compat_cache_ = std::make_unique<std::atomic<signed char>[]>(total);
  hom_dim_cache_ = std::make_unique<std::atomic<int>[]>(total);
  for (std::size_t k = 0; k < total; ++k) {
    compat_cache_[k].store(-1, std::memory_order_relaxed);
    hom_dim_cache_[k].store(-1, std::memory_order_relaxed);
  }
}

std::optional<ObjectId> ClusterCategory::find(const CObject& o) const {
  if (o.kind == ObjectKind::ShiftedProjective) {
    if (o.vertex < 0 || o.vertex >= rank()) return std::nullopt;
    return shifted_[o.vertex];
  }
  auto it = by_root_.find(o.root);
  if (it == by_root_.end()) return std::nullopt;
  return it->second;
}

ObjectId ClusterCategory::module_id(const IntVector& root) const {
  auto it = by_root_.find(root);
  if (it == by_root_.end()) throw std::out_of_range("no module with dimension vector " + to_string(root));
  return it->second;
}

std::optional<ObjectId> ClusterCategory::shift(ObjectId x) const {
  if (!is_module(x)) return injective_[object(x).vertex];
  for (int i = 0; i < rank(); ++i)
    if (projective_[i] == x) return shifted_[i];
  return find(CObject::module(ar_translate(representation(x)).module.dim_vector()));
}

std::optional<ObjectId> ClusterCategory::unshift(ObjectId x) const {
  if (!is_module(x)) return projective_[object(x).vertex];
  for (int i = 0; i < rank(); ++i)
    if (injective_[i] == x) return shifted_[i];
  return find(CObject::module(tau_inv(x).dim_vector()));
}

// ------------------------------------------------------- cached spaces

const std::vector<ExtSpace>& ClusterCategory::translate_spaces(ObjectId x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = translate_cache_.find(x);
    if (it != translate_cache_.end()) return *it->second;
  }
  auto fresh = std::make_unique<std::vector<ExtSpace>>(inverse_translate_spaces(representation(x)));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = translate_cache_.emplace(x, std::move(fresh));
  return *it->second;
}

const Representation& ClusterCategory::tau_inv(ObjectId x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = tau_inv_cache_.find(x);
    if (it != tau_inv_cache_.end()) return *it->second;
  }
  auto fresh = std::make_unique<Representation>(ar_translate_inv(quiver_, translate_spaces(x)));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = tau_inv_cache_.emplace(x, std::move(fresh));
  return *it->second;
}

LinMap ClusterCategory::tau_inv_map(ObjectId x, ObjectId y, const LinMap& g) const {
  return ar_translate_inv(translate_spaces(x), translate_spaces(y), g);
}

const ClusterCategory::PairSpaces& ClusterCategory::spaces(ObjectId x, ObjectId y) const {
  const std::int64_t key = static_cast<std::int64_t>(x) * object_count() + y;
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = pair_cache_.find(key);
    if (it != pair_cache_.end()) return *it->second;
  }
  auto fresh = std::make_unique<PairSpaces>();
  const auto& rx = representation(x);
  const auto& ry = representation(y);
  auto hom = [](const Representation& a, const Representation& b) {
    Block blk;
    blk.kind = Block::Kind::Hom;
    blk.hom = std::make_shared<HomSpace>(a, b);
    return blk;
  };
  auto ext = [](const Representation& a, const Representation& b) {
    Block blk;
    blk.kind = Block::Kind::Ext;
    blk.ext = std::make_shared<ExtSpace>(a, b);
    return blk;
  };
  const bool mx = is_module(x), my = is_module(y);
  const bool y_injective = my && objects_[y].injective_module;
  if (mx && my) {
    fresh->h = hom(rx, ry);
    if (!y_injective) fresh->f = ext(rx, tau_inv(y));
  } else if (mx) {
    fresh->h = ext(rx, ry);
  } else if (my) {
    if (!y_injective) fresh->f = hom(rx, tau_inv(y));
  } else {
    fresh->h = hom(rx, ry);
  }
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = pair_cache_.emplace(key, std::move(fresh));
  return *it->second;
}

// -------------------------------------------------------- morphisms

HomDim ClusterCategory::hom_dim(ObjectId x, ObjectId y) const {
  const auto& s = spaces(x, y);
  return {s.h.dim(), s.f.dim()};
}

std::vector<CMorphism> ClusterCategory::hom_basis(ObjectId x, ObjectId y) const {
  const auto d = hom_dim(x, y);
  std::vector<CMorphism> out;
  for (int k = 0; k < d.total(); ++k) {
    CMorphism m{x, y, QVector::Zero(d.h), QVector::Zero(d.f)};
    if (k < d.h)
      m.h(k) = 1;
    else
      m.f(k - d.h) = 1;
    out.push_back(std::move(m));
  }
  return out;
}

CMorphism ClusterCategory::identity(ObjectId x) const {
  const auto& s = spaces(x, x);
  CMorphism m{x, x, QVector::Zero(s.h.dim()), QVector::Zero(s.f.dim())};
  m.h = s.h.hom->coordinates(identity_map(representation(x)));
  return m;
}

QMatrix ClusterCategory::postcompose(const CMorphism& g, ObjectId s) const {
  const ObjectId y = g.source, z = g.target;
  const auto& sy = spaces(s, y);
  const auto& sz = spaces(s, z);
  const auto& gy = spaces(y, z);
  if (g.h.size() != gy.h.dim() || g.f.size() != gy.f.dim())
    throw std::invalid_argument("postcompose: coordinates do not match Hom_C(source, target)");
  const int hy = sy.h.dim(), fy = sy.f.dim(), hz = sz.h.dim(), fz = sz.f.dim();
  QMatrix out = QMatrix::Zero(hz + fz, hy + fy);
  const bool ms = is_module(s), my = is_module(y), mz = is_module(z);
  const bool gh = !linalg::is_zero(QMatrix(g.h));
  const bool gf = !linalg::is_zero(QMatrix(g.f));

  // H-part of g after H-part of f.
  if (gh && hy > 0 && hz > 0) {
    if (ms && my && mz) {
      const LinMap gm = gy.h.hom->element(g.h);
      for (int k = 0; k < hy; ++k) out.block(0, k, hz, 1) = sz.h.hom->coordinates(cvec::compose(gm, (*sy.h.hom)[k]));
    } else if (ms && my && !mz) {
      for (int k = 0; k < hy; ++k)
        out.block(0, k, hz, 1) = gy.h.ext->pullback((*sy.h.hom)[k], *sz.h.ext) * g.h;
    } else if (ms && !my && !mz) {
      out.block(0, 0, hz, hy) = sy.h.ext->pushforward(gy.h.hom->element(g.h), *sz.h.ext);
    } else if (!ms && !my && !mz) {
      const LinMap gm = gy.h.hom->element(g.h);
      for (int k = 0; k < hy; ++k) out.block(0, k, hz, 1) = sz.h.hom->coordinates(cvec::compose(gm, (*sy.h.hom)[k]));
    }
  }
  // F-part of g after H-part of f.
  if (gf && hy > 0 && fz > 0) {
    if (ms && my && mz) {
      for (int k = 0; k < hy; ++k)
        out.block(hz, k, fz, 1) = gy.f.ext->pullback((*sy.h.hom)[k], *sz.f.ext) * g.f;
    } else if (ms && !my && mz) {
      out.block(hz, 0, fz, hy) = sy.h.ext->pushforward(gy.f.hom->element(g.f), *sz.f.ext);
    } else if (!ms && !my && mz) {
      const LinMap gm = gy.f.hom->element(g.f);
      for (int k = 0; k < hy; ++k) out.block(hz, k, fz, 1) = sz.f.hom->coordinates(cvec::compose(gm, (*sy.h.hom)[k]));
    }
  }
  // H-part of g after F-part of f, through tau^-1 g.
  if (gh && fy > 0 && fz > 0 && my && mz) {
    const LinMap tg = tau_inv_map(y, z, gy.h.hom->element(g.h));
    if (ms) {
      out.block(hz, hy, fz, fy) = sy.f.ext->pushforward(tg, *sz.f.ext);
    } else {
      for (int k = 0; k < fy; ++k) out.block(hz, hy + k, fz, 1) = sz.f.hom->coordinates(cvec::compose(tg, (*sy.f.hom)[k]));
    }
  }
  return out;
}

CMorphism ClusterCategory::compose(const CMorphism& g, const CMorphism& f) const {
  if (f.target != g.source) throw std::invalid_argument("compose: morphisms are not composable");
  const QMatrix m = postcompose(g, f.source);
  QVector v(f.h.size() + f.f.size());
  v << f.h, f.f;
  const QVector r = m * v;
  const auto d = hom_dim(f.source, g.target);
  return CMorphism{f.source, g.target, r.head(d.h), r.tail(d.f)};
}

// -------------------------------------------------------- compatibility

int ClusterCategory::module_hom_dim(ObjectId x, ObjectId y) const {
  auto& slot = hom_dim_cache_[static_cast<std::size_t>(x) * object_count() + y];
  int d = slot.load(std::memory_order_relaxed);
  if (d < 0) {
    d = hom_dimension(representation(x), representation(y));
    slot.store(d, std::memory_order_relaxed);
  }
  return d;
}

int ClusterCategory::ext_dim(ObjectId x, ObjectId y) const {
  const bool mx = is_module(x), my = is_module(y);
  if (mx && my) {
    const auto& dx = representation(x).dim_vector();
    const auto& dy = representation(y).dim_vector();
    const auto e_xy = module_hom_dim(x, y) - euler_form(*quiver_, dx, dy);
    const auto e_yx = module_hom_dim(y, x) - euler_form(*quiver_, dy, dx);
    return static_cast<int>(e_xy + e_yx);
  }
  // Hom_C(M, Sigma^2 P_j) = Hom(M, I_j) and Hom_C(Sigma P_i, Sigma N) = Hom(P_i, N).
  if (mx) return representation(x).dim(object(y).vertex);
  if (my) return representation(y).dim(object(x).vertex);
  return 0;
}

bool ClusterCategory::compatible(ObjectId x, ObjectId y) const {
  auto& slot = compat_cache_[static_cast<std::size_t>(x) * object_count() + y];
  const signed char cached = slot.load(std::memory_order_relaxed);
  if (cached >= 0) return cached == 1;
  bool ok;
  if (x == y) {
    ok = true;
  } else if (is_module(x) && is_module(y) &&
             (euler_form(*quiver_, representation(x).dim_vector(), representation(y).dim_vector()) < 0 ||
              euler_form(*quiver_, representation(y).dim_vector(), representation(x).dim_vector()) < 0)) {
    ok = false;
  } else {
    ok = ext_dim(x, y) == 0;
  }
  slot.store(ok ? 1 : 0, std::memory_order_relaxed);
  compat_cache_[static_cast<std::size_t>(y) * object_count() + x].store(ok ? 1 : 0, std::memory_order_relaxed);
  return ok;
}

// -------------------------------------------------------------- clusters

Cluster ClusterCategory::initial_cluster() const { return Cluster{projective_, {}}; }

void ClusterCategory::validate_cluster(const Cluster& c) const {
  if (c.size() != rank()) throw ModelError("cluster has the wrong number of summands");
  for (int i = 0; i < c.size(); ++i)
    for (int j = i; j < c.size(); ++j) {
      if (i != j && c[i] == c[j]) throw ModelError("cluster has a repeated summand");
      if (!compatible(c[i], c[j])) throw ModelError("cluster summands are not compatible");
    }
}

std::optional<ObjectId> ClusterCategory::exchange_partner(const Cluster& c, int k) const {
  if (k < 0 || k >= c.size()) throw std::out_of_range("exchange_partner: position out of range");
  std::optional<ObjectId> found;
  for (ObjectId u = 0; u < object_count(); ++u) {
    if (c.position(u) >= 0) continue;
    bool ok = true;
    for (int i = 0; i < c.size() && ok; ++i)
      if (i != k) ok = compatible(u, c[i]);
    if (!ok) continue;
    if (found) throw ModelError("two exchange partners for " + object(c[k]).str());
    found = u;
  }
  if (!found && !bound_limited_) throw ModelError("no exchange partner for " + object(c[k]).str());
  return found;
}

QMatrix ClusterCategory::radical_basis(ObjectId x, ObjectId y) const {
  const auto d = hom_dim(x, y);
  if (x != y) return QMatrix::Identity(d.total(), d.total());
  // End_C(x) = k id (+) F-part, and the F-part is the radical.
  QMatrix r = QMatrix::Zero(d.total(), d.f);
  for (int k = 0; k < d.f; ++k) r(d.h + k, k) = 1;
  return r;
}

QMatrix ClusterCategory::factor_span(const Cluster& c, int i, ObjectId y, int skip, bool radical_target) const {
  const int target_dim = hom_dim(c[i], y).total();
  std::vector<QMatrix> parts;
  Index cols = 0;
  for (int l = 0; l < c.size(); ++l) {
    if (l == skip) continue;
    const QMatrix first = radical_basis(c[i], c[l]);
    if (first.cols() == 0) continue;
    const QMatrix second =
        radical_target ? radical_basis(c[l], y) : QMatrix(QMatrix::Identity(hom_dim(c[l], y).total(), hom_dim(c[l], y).total()));
    const auto dl = hom_dim(c[l], y);
    for (Index g = 0; g < second.cols(); ++g) {
      CMorphism gm{c[l], y, second.col(g).head(dl.h), second.col(g).tail(dl.f)};
      parts.push_back(postcompose(gm, c[i]) * first);
      cols += parts.back().cols();
    }
  }
  QMatrix out(target_dim, cols);
  Index at = 0;
  for (const auto& p : parts) {
    out.middleCols(at, p.cols()) = p;
    at += p.cols();
  }
  return out;
}

Approximation ClusterCategory::right_approximation(const Cluster& c, int skip, ObjectId y) const {
  Approximation out;
  for (int i = 0; i < c.size(); ++i) {
    if (i == skip) continue;
    const auto d = hom_dim(c[i], y);
    if (d.total() == 0) continue;
    const QMatrix span = factor_span(c, i, y, skip, false);
    const auto picked = linalg::extend_span(span, QMatrix(QMatrix::Identity(d.total(), d.total())));
    for (Index p : picked) {
      CMorphism m{c[i], y, QVector::Zero(d.h), QVector::Zero(d.f)};
      if (p < d.h)
        m.h(p) = 1;
      else
        m.f(p - d.h) = 1;
      out.positions.push_back(i);
      out.maps.push_back(std::move(m));
    }
  }
  return out;
}

Exchange ClusterCategory::mutate(const Cluster& c, int k) const {
  const auto partner = exchange_partner(c, k);
  if (!partner) throw ModelError("exchange partner of " + object(c[k]).str() + " lies outside the dimension bound");
  Exchange ex;
  ex.partner = *partner;
  ex.cluster = c;
  ex.cluster.summands[k] = *partner;
  ex.cluster.word.push_back(k);
  ex.old_summand = right_approximation(c, k, c[k]);
  ex.new_summand = right_approximation(c, k, *partner);
  return ex;
}

Cluster ClusterCategory::mutate_cluster(const Cluster& c, int k) const {
  const auto partner = exchange_partner(c, k);
  if (!partner) throw ModelError("exchange partner of " + object(c[k]).str() + " lies outside the dimension bound");
  Cluster out = c;
  out.summands[k] = *partner;
  out.word.push_back(k);
  return out;
}

ExchangeMatrix ClusterCategory::quiver_of(const Cluster& c) const {
  const int n = c.size();
  IntMatrix irr = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      const int d = hom_dim(c[i], c[j]).total();
      if (d == 0) continue;
      irr(i, j) = d - linalg::rank(factor_span(c, i, c[j], -1, true));
    }
  IntMatrix b = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (irr(i, j) > 0 && irr(j, i) > 0) throw ModelError("quiver of a cluster has a 2-cycle");
      b(i, j) = irr(i, j) - irr(j, i);
    }
  return ExchangeMatrix(b);
}

IntVector ClusterCategory::j_dim_vector(const Cluster& t, ObjectId x) const {
  IntVector v(t.size());
  for (int l = 0; l < t.size(); ++l) v[l] = hom_dim(t[l], x).total();
  return v;
}

CModuleDims ClusterCategory::c_module_dims(const Cluster& initial, const Cluster& current, int j) const {
  const auto partner = exchange_partner(current, j);
  if (!partner) throw ModelError("exchange partner lies outside the dimension bound");
  const Approximation to_old = right_approximation(current, j, current[j]);
  const Approximation to_new = right_approximation(current, j, *partner);
  // Hom_C(T_l, Sigma -) is computed as Hom_C(Sigma^-1 T_l, -).
  auto cokernel_dims = [&](const Approximation& a, ObjectId y) {
    IntVector dims(initial.size());
    for (int l = 0; l < initial.size(); ++l) {
      const auto s = unshift(initial[l]);
      if (!s) throw ModelError("Sigma^-1 of an initial summand lies outside the dimension bound");
      const int target = hom_dim(*s, y).total();
      if (target == 0 || a.maps.empty()) {
        dims[l] = target;
        continue;
      }
      std::vector<QMatrix> blocks;
      Index cols = 0;
      for (const auto& m : a.maps) {
        blocks.push_back(postcompose(m, *s));
        cols += blocks.back().cols();
      }
      QMatrix all(target, cols);
      Index at = 0;
      for (const auto& blk : blocks) {
        all.middleCols(at, blk.cols()) = blk;
        at += blk.cols();
      }
      dims[l] = target - linalg::rank(all);
    }
    return dims;
  };
  return CModuleDims{cokernel_dims(to_new, *partner), cokernel_dims(to_old, current[j])};
}

ClusterGraph ClusterCategory::cluster_graph(const Cluster& start, std::size_t budget) const {
  ClusterGraph g;
  std::map<std::vector<ObjectId>, std::size_t> index;
  std::set<std::pair<std::size_t, std::size_t>> edges;
  index[start.sorted()] = 0;
  g.clusters.push_back(start);
  for (std::size_t head = 0; head < g.clusters.size(); ++head) {
    const Cluster cur = g.clusters[head];
    for (int k = 0; k < cur.size(); ++k) {
      const auto partner = exchange_partner(cur, k);
      if (!partner) {
        g.exhaustive = false;
        continue;
      }
      Cluster child = cur;
      child.summands[k] = *partner;
      child.word.push_back(k);
      auto key = child.sorted();
      auto it = index.find(key);
      std::size_t child_index;
      if (it == index.end()) {
        if (g.clusters.size() >= budget) {
          g.exhaustive = false;
          continue;
        }
        child_index = g.clusters.size();
        index.emplace(std::move(key), child_index);
        g.clusters.push_back(std::move(child));
      } else {
        child_index = it->second;
      }
      edges.emplace(std::min(head, child_index), std::max(head, child_index));
    }
  }
  g.edges.assign(edges.begin(), edges.end());
  return g;
}

std::vector<std::vector<ObjectId>> ClusterCategory::maximal_compatible_sets() const {
  const int n = object_count();
  std::vector<std::vector<ObjectId>> out;
  std::vector<ObjectId> r;
  // Bron-Kerbosch with pivoting.
  std::function<void(std::vector<ObjectId>, std::vector<ObjectId>)> expand = [&](std::vector<ObjectId> p,
                                                                                  std::vector<ObjectId> x) {
    if (p.empty() && x.empty()) {
      out.push_back(r);
      std::sort(out.back().begin(), out.back().end());
      return;
    }
    ObjectId pivot = p.empty() ? x.front() : p.front();
    std::size_t best = 0;
    for (const auto& set : {p, x})
      for (ObjectId u : set) {
        std::size_t cnt = 0;
        for (ObjectId v : p) cnt += u != v && compatible(u, v);
        if (cnt > best) best = cnt, pivot = u;
      }
    std::vector<ObjectId> candidates;
    for (ObjectId v : p)
      if (v == pivot || !compatible(pivot, v)) candidates.push_back(v);
    for (ObjectId v : candidates) {
      std::vector<ObjectId> np, nx;
      for (ObjectId w : p)
        if (w != v && compatible(v, w)) np.push_back(w);
      for (ObjectId w : x)
        if (w != v && compatible(v, w)) nx.push_back(w);
      r.push_back(v);
      expand(std::move(np), std::move(nx));
      r.pop_back();
      p.erase(std::find(p.begin(), p.end(), v));
      x.push_back(v);
    }
  };
  std::vector<ObjectId> all(n);
  for (int i = 0; i < n; ++i) all[i] = i;
  expand(all, {});
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cvec
