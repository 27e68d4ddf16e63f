#include "cvec/seed.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "cvec/parallel.hpp"
#include "cvec/rational.hpp"

namespace cvec {
namespace {

std::int64_t pos(std::int64_t x) { return x > 0 ? x : 0; }

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError("seed mutation: integer overflow");
  return r;
}

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("seed mutation: integer overflow");
  return r;
}

std::int64_t neg(std::int64_t a) { return mul(a, -1); }

void check_index(int n, int k) {
  if (k < 0 || k >= n)
    throw std::out_of_range("mutation index " + std::to_string(k) + " out of range for rank " + std::to_string(n));
}

// FNV-1a over the raw entries.
struct MatrixPairKey {
  std::vector<std::int64_t> entries;
  bool operator==(const MatrixPairKey& o) const { return entries == o.entries; }
};

struct MatrixPairHash {
  std::size_t operator()(const MatrixPairKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::int64_t v : k.entries) {
      auto u = static_cast<std::uint64_t>(v);
      for (int byte = 0; byte < 8; ++byte) {
        h ^= (u >> (8 * byte)) & 0xffu;
        h *= 1099511628211ull;
      }
    }
    return static_cast<std::size_t>(h);
  }
};

MatrixPairKey key_of(const IntMatrix& b, const IntMatrix* c) {
  MatrixPairKey k;
  k.entries.assign(b.data(), b.data() + b.size());
  if (c) k.entries.insert(k.entries.end(), c->data(), c->data() + c->size());
  return k;
}

}  // namespace

ExchangeMatrix::ExchangeMatrix(IntMatrix b) : b_(std::move(b)) {
  if (b_.rows() != b_.cols()) throw std::invalid_argument("exchange matrix must be square");
  for (Eigen::Index i = 0; i < b_.rows(); ++i)
    for (Eigen::Index j = 0; j < b_.cols(); ++j)
      if (b_(i, j) != -b_(j, i))
        throw std::invalid_argument("exchange matrix is not skew-symmetric at (" + std::to_string(i + 1) + "," +
                                    std::to_string(j + 1) + ")");
}

ExchangeMatrix ExchangeMatrix::from_arrows(int n, const std::vector<std::pair<int, int>>& arrows) {
  if (n < 0) throw std::invalid_argument("negative vertex count");
  IntMatrix b = IntMatrix::Zero(n, n);
  for (auto [i, j] : arrows) {
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::invalid_argument("arrow endpoint out of range");
    if (i == j) throw std::invalid_argument("loops are not allowed");
    b(i, j) += 1;
    b(j, i) -= 1;
  }
  return ExchangeMatrix(std::move(b));
}

std::vector<std::pair<int, int>> ExchangeMatrix::arrows() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      for (std::int64_t m = 0; m < b_(i, j); ++m) out.emplace_back(i, j);
  return out;
}

bool ExchangeMatrix::is_acyclic() const {
  const int n = size();
  std::vector<int> indeg(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (b_(i, j) > 0) ++indeg[j];
  std::vector<int> stack;
  for (int i = 0; i < n; ++i)
    if (indeg[i] == 0) stack.push_back(i);
  int seen = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++seen;
    for (int j = 0; j < n; ++j)
      if (b_(v, j) > 0 && --indeg[j] == 0) stack.push_back(j);
  }
  return seen == n;
}

IntVector Seed::c_vector(int j) const {
  IntVector v(static_cast<std::size_t>(size()));
  for (int i = 0; i < size(); ++i) v[i] = c(i, j);
  return v;
}

Seed initial_seed(const ExchangeMatrix& b) {
  return Seed{b, IntMatrix::Identity(b.size(), b.size()), {}};
}

ExchangeMatrix mutate_matrix(const ExchangeMatrix& bm, int k) {
  const int n = bm.size();
  check_index(n, k);
  const IntMatrix& b = bm.matrix();
  IntMatrix out(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == k || j == k) {
        out(i, j) = neg(b(i, j));
      } else {
        out(i, j) = add(add(b(i, j), mul(pos(b(i, k)), pos(b(k, j)))), neg(mul(pos(-b(i, k)), pos(-b(k, j)))));
      }
    }
  }
  return ExchangeMatrix(std::move(out));
}

Seed mutate_seed(const Seed& s, int k) {
  const int n = s.size();
  check_index(n, k);
  const IntMatrix& b = s.b.matrix();
  IntMatrix c(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (j == k) {
        c(i, j) = neg(s.c(i, j));
      } else {
        c(i, j) = add(add(s.c(i, j), mul(pos(s.c(i, k)), pos(b(k, j)))), neg(mul(pos(-s.c(i, k)), pos(-b(k, j)))));
      }
    }
  }
  Seed out{mutate_matrix(s.b, k), std::move(c), s.word};
  out.word.push_back(k);
  return out;
}

Seed mutate_along(const Seed& s, const MutationWord& word) {
  Seed cur = s;
  for (int k : word) cur = mutate_seed(cur, k);
  return cur;
}

ExchangeMatrix opposite(const ExchangeMatrix& b) { return ExchangeMatrix(IntMatrix(-b.matrix())); }

std::uint64_t seed_hash(const Seed& s) {
  return static_cast<std::uint64_t>(MatrixPairHash{}(key_of(s.b.matrix(), &s.c)));
}

std::int64_t determinant(const IntMatrix& m) {
  // Bareiss fraction-free elimination.
  const Eigen::Index n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n));
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) a[i][j] = m(i, j);
  int sign = 1;
  __int128 prev = 1;
  for (Eigen::Index k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      Eigen::Index swap = -1;
      for (Eigen::Index i = k + 1; i < n; ++i)
        if (a[i][k] != 0) {
          swap = i;
          break;
        }
      if (swap < 0) return 0;
      std::swap(a[k], a[swap]);
      sign = -sign;
    }
    for (Eigen::Index i = k + 1; i < n; ++i)
      for (Eigen::Index j = k + 1; j < n; ++j) {
        __int128 x, y, z;
        if (__builtin_mul_overflow(a[i][j], a[k][k], &x) || __builtin_mul_overflow(a[i][k], a[k][j], &y) ||
            __builtin_sub_overflow(x, y, &z))
          throw OverflowError("determinant: intermediate value out of range");
        a[i][j] = z / prev;
      }
    prev = a[k][k];
  }
  __int128 d = a[n - 1][n - 1] * sign;
  if (d > INT64_MAX || d < INT64_MIN) throw OverflowError("determinant out of range");
  return static_cast<std::int64_t>(d);
}

bool is_sign_coherent(const IntVector& v) { return vector_sign(v) != 0; }

int vector_sign(const IntVector& v) {
  bool has_pos = false, has_neg = false;
  for (auto x : v) {
    has_pos |= x > 0;
    has_neg |= x < 0;
  }
  if (has_pos == has_neg) return 0;
  return has_pos ? 1 : -1;
}

SeedEnumeration enumerate_seeds(const ExchangeMatrix& b, std::size_t budget, unsigned threads) {
  if (budget == 0) throw std::invalid_argument("enumerate_seeds: budget must be positive");
  SeedEnumeration out;
  std::unordered_map<MatrixPairKey, std::size_t, MatrixPairHash> index;
  Seed root = initial_seed(b);
  index.emplace(key_of(root.b.matrix(), &root.c), 0);
  out.seeds.push_back(std::move(root));
  const int n = b.size();

  std::vector<std::size_t> frontier{0};
  bool truncated = false;
  while (!frontier.empty() && !truncated) {
    // Children are computed independently, then merged in (parent, k) order
    // so the result does not depend on the number of workers.
    std::vector<std::optional<Seed>> children(frontier.size() * static_cast<std::size_t>(n));
    parallel_for(frontier.size(), threads, [&](std::size_t f) {
      const Seed& parent = out.seeds[frontier[f]];
      for (int k = 0; k < n; ++k) {
        if (!parent.word.empty() && parent.word.back() == k) continue;
        children[f * n + k] = mutate_seed(parent, k);
      }
    });
    std::vector<std::size_t> next;
    for (std::size_t f = 0; f < frontier.size() && !truncated; ++f) {
      for (int k = 0; k < n; ++k) {
        auto& child = children[f * n + k];
        if (!child) continue;
        auto key = key_of(child->b.matrix(), &child->c);
        auto it = index.find(key);
        if (it != index.end()) {
          if (it->second > frontier[f]) out.edges.emplace_back(frontier[f], it->second, k);
          continue;
        }
        if (out.seeds.size() >= budget) {
          truncated = true;
          break;
        }
        const std::size_t id = out.seeds.size();
        index.emplace(std::move(key), id);
        out.edges.emplace_back(frontier[f], id, k);
        out.seeds.push_back(std::move(*child));
        next.push_back(id);
      }
    }
    frontier = std::move(next);
  }
  out.exhaustive = !truncated;
  return out;
}

namespace {

CVectorSet collect_c_vectors(const ExchangeMatrix& b, std::size_t budget, unsigned threads, bool positive_only) {
  auto en = enumerate_seeds(b, budget, threads);
  CVectorSet out;
  out.exhaustive = en.exhaustive;
  for (const auto& s : en.seeds) {
    for (int j = 0; j < s.size(); ++j) {
      auto v = s.c_vector(j);
      if (!positive_only || vector_sign(v) > 0) out.vectors.insert(std::move(v));
    }
  }
  return out;
}

}  // namespace

CVectorSet positive_c_vectors(const ExchangeMatrix& b, std::size_t budget, unsigned threads) {
  return collect_c_vectors(b, budget, threads, true);
}

CVectorSet all_c_vectors(const ExchangeMatrix& b, std::size_t budget, unsigned threads) {
  return collect_c_vectors(b, budget, threads, false);
}

ExchangeMatrix dynkin_quiver(const DynkinType& t) {
  std::vector<std::pair<int, int>> arrows;
  for (auto [i, j] : t.edges()) arrows.emplace_back(std::min(i, j), std::max(i, j));
  return ExchangeMatrix::from_arrows(t.rank, arrows);
}

std::optional<std::pair<DynkinType, std::vector<int>>> identify_dynkin(const ExchangeMatrix& b) {
  const int n = b.size();
  if (n == 0) return std::nullopt;
  std::vector<std::vector<int>> adj(n);
  int edge_count = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const auto m = b(i, j) > 0 ? b(i, j) : -b(i, j);
      if (m > 1) return std::nullopt;
      if (m == 1) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        ++edge_count;
      }
    }
  if (edge_count != n - 1) return std::nullopt;
  // Connected?
  std::vector<int> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  if (reached != n) return std::nullopt;

  std::vector<int> label(n, -1);
  // Walks outward from `start` (coming from `from`) along a path arm.
  auto arm = [&](int from, int start) {
    std::vector<int> path;
    int prev = from, cur = start;
    while (true) {
      path.push_back(cur);
      int nxt = -1;
      for (int w : adj[cur])
        if (w != prev) nxt = w;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
    }
    return path;
  };

  std::vector<int> branch;
  for (int v = 0; v < n; ++v) {
    if (adj[v].size() > 3) return std::nullopt;
    if (adj[v].size() == 3) branch.push_back(v);
  }
  if (branch.size() > 1) return std::nullopt;

  if (branch.empty()) {
    int start = 0;
    if (n > 1)
      for (int v = 0; v < n; ++v)
        if (adj[v].size() == 1) {
          start = v;
          break;
        }
    auto path = n == 1 ? std::vector<int>{0} : arm(-1, start);
    for (int i = 0; i < n; ++i) label[path[i]] = i;
    return std::make_pair(DynkinType(DynkinType::Family::A, n), label);
  }

  const int center = branch[0];
  std::vector<std::vector<int>> arms;
  for (int w : adj[center]) arms.push_back(arm(center, w));
  std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) { return x.size() < y.size(); });
  const auto a = arms[0].size(), bsz = arms[1].size(), c = arms[2].size();
  if (a == 1 && bsz == 1) {
    // D_n: long arm labels 0..n-4 from its far end, center n-3, leaves n-2, n-1.
    const auto& longarm = arms[2];
    for (std::size_t i = 0; i < longarm.size(); ++i) label[longarm[longarm.size() - 1 - i]] = static_cast<int>(i);
    label[center] = n - 3;
    label[arms[0][0]] = n - 2;
    label[arms[1][0]] = n - 1;
    return std::make_pair(DynkinType(DynkinType::Family::D, n), label);
  }
  if (a == 1 && bsz == 2 && c >= 2 && c <= 4) {
    // E_n (Bourbaki): center 3, short leaf 1, arm 2 - 0, long arm 4, 5, ...
    label[center] = 3;
    label[arms[0][0]] = 1;
    label[arms[1][0]] = 2;
    label[arms[1][1]] = 0;
    for (std::size_t i = 0; i < c; ++i) label[arms[2][i]] = 4 + static_cast<int>(i);
    return std::make_pair(DynkinType(DynkinType::Family::E, n), label);
  }
  return std::nullopt;
}

namespace {

bool is_connected(const ExchangeMatrix& b) {
  const int n = b.size();
  if (n == 0) return false;
  std::vector<int> seen(n, 0), stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < n; ++w)
      if (b(v, w) != 0 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n;
}

}  // namespace

FiniteTypeResult detect_finite_type(const ExchangeMatrix& b, std::size_t budget) {
  if (budget == 0) throw std::invalid_argument("detect_finite_type: budget must be positive");
  if (!is_connected(b)) throw std::invalid_argument("detect_finite_type: quiver is not connected");
  struct Node {
    ExchangeMatrix b;
    MutationWord word;
  };
  std::unordered_set<MatrixPairKey, MatrixPairHash> seen;
  std::deque<Node> queue;
  seen.insert(key_of(b.matrix(), nullptr));
  queue.push_back({b, {}});
  const int n = b.size();
  while (!queue.empty()) {
    Node cur = std::move(queue.front());
    queue.pop_front();
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (cur.b(i, j) * cur.b(j, i) <= -4) return InfiniteType{cur.b, cur.word};
    // An acyclic quiver is of finite type exactly when its graph is Dynkin.
    if (cur.b.is_acyclic()) {
      auto id = identify_dynkin(cur.b);
      if (!id) return InfiniteType{cur.b, cur.word};
      return FiniteType{id->first, cur.b, cur.word, id->second};
    }
    for (int k = 0; k < n; ++k) {
      auto child = mutate_matrix(cur.b, k);
      auto key = key_of(child.matrix(), nullptr);
      if (seen.count(key)) continue;
      if (seen.size() >= budget) return BudgetExhausted{seen.size()};
      seen.insert(std::move(key));
      MutationWord w = cur.word;
      w.push_back(k);
      queue.push_back({std::move(child), std::move(w)});
    }
  }
  throw ClassificationError("finite mutation class without an acyclic member");
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

}  // namespace cvec
