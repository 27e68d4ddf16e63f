#include "cvec/root_system.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cvec {

IntMatrix cartan_matrix(const DynkinType& t) {
  IntMatrix a = 2 * IntMatrix::Identity(t.rank, t.rank);
  for (auto [i, j] : t.edges()) {
    a(i, j) = -1;
    a(j, i) = -1;
  }
  return a;
}

namespace {

RootVector reflect(const IntMatrix& cartan, const RootVector& beta, int i) {
  // s_i(beta) = beta - <beta, alpha_i^vee> alpha_i; symmetric Cartan matrix.
  std::int64_t pairing = 0;
  for (int j = 0; j < static_cast<int>(beta.size()); ++j) pairing += cartan(i, j) * beta[j];
  RootVector out = beta;
  out[i] -= pairing;
  return out;
}

bool nonnegative(const RootVector& v) {
  return std::all_of(v.begin(), v.end(), [](auto x) { return x >= 0; }) &&
         std::any_of(v.begin(), v.end(), [](auto x) { return x != 0; });
}

std::vector<RootVector> closure(const DynkinType& t, const std::vector<int>& order) {
  const IntMatrix cartan = cartan_matrix(t);
  std::set<RootVector> roots;
  std::deque<RootVector> queue;
  for (int i = 0; i < t.rank; ++i) {
    RootVector e(t.rank, 0);
    e[i] = 1;
    roots.insert(e);
    queue.push_back(e);
  }
  while (!queue.empty()) {
    RootVector beta = std::move(queue.front());
    queue.pop_front();
    for (int i : order) {
      RootVector r = reflect(cartan, beta, i);
      if (!nonnegative(r)) continue;
      if (roots.insert(r).second) queue.push_back(std::move(r));
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace

const std::vector<RootVector>& positive_roots(const DynkinType& t) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::vector<RootVector>> memo;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(static_cast<int>(t.family), t.rank);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::vector<int> order(t.rank);
  std::iota(order.begin(), order.end(), 0);
  return memo.emplace(key, closure(t, order)).first->second;
}

std::vector<RootVector> positive_roots_with_order(const DynkinType& t, const std::vector<int>& order) {
  std::vector<int> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < t.rank; ++i)
    if (sorted.size() != static_cast<std::size_t>(t.rank) || sorted[i] != i)
      throw std::invalid_argument("reflection order must be a permutation of the vertices");
  return closure(t, order);
}

MaxCoefficient max_coefficient(const std::vector<RootVector>& roots) {
  MaxCoefficient out;
  for (const auto& r : roots)
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (r[i] > out.value) {
        out.value = r[i];
        out.vertices.clear();
      }
      if (r[i] == out.value) out.vertices.insert(static_cast<int>(i));
    }
  return out;
}

MaxCoefficient max_coefficient(const DynkinType& t) { return max_coefficient(positive_roots(t)); }

RootVector highest_root(const DynkinType& t) {
  const auto& roots = positive_roots(t);
  for (const auto& r : roots) {
    bool dominates = std::all_of(roots.begin(), roots.end(), [&](const RootVector& o) {
      for (std::size_t i = 0; i < r.size(); ++i)
        if (o[i] > r[i]) return false;
      return true;
    });
    if (dominates) return r;
  }
  throw std::logic_error("root system without a highest root");
}

bool has_connected_support(const DynkinType& t, const RootVector& root) {
  std::vector<int> support;
  for (int i = 0; i < t.rank; ++i)
    if (root[i] != 0) support.push_back(i);
  if (support.empty()) return false;
  std::vector<int> seen(t.rank, 0);
  std::vector<int> stack{support[0]};
  seen[support[0]] = 1;
  std::size_t reached = 1;
  const auto edges = t.edges();
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (auto [a, b] : edges) {
      int w = a == v ? b : b == v ? a : -1;
      if (w >= 0 && root[w] != 0 && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == support.size();
}

}  // namespace cvec
