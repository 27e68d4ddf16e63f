#include "cvec/verify.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cvec/parallel.hpp"

namespace cvec {

namespace {

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

std::vector<std::int64_t> pair_key(const Seed& s) {
  std::vector<std::int64_t> k(s.b.matrix().data(), s.b.matrix().data() + s.b.matrix().size());
  k.insert(k.end(), s.c.data(), s.c.data() + s.c.size());
  return k;
}

bool is_zero_vector(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x == 0; });
}

IntVector negated(IntVector v) {
  for (auto& x : v) x = -x;
  return v;
}

// Random word without immediate repetitions.
MutationWord random_word(std::mt19937_64& rng, int n, int length) {
  MutationWord w;
  std::uniform_int_distribution<int> pick(0, n - 1);
  while (static_cast<int>(w.size()) < length) {
    const int k = pick(rng);
    if (n > 1 && !w.empty() && w.back() == k) continue;
    w.push_back(k);
  }
  return w;
}

// Cokernel sign and dimension check at every position of one lockstep state.
// Returns the number of positions checked and appends violations.
int cokernel_signs_at(const ClusterCategory& cat, const Cluster& initial, const LockstepState& s,
                std::vector<std::string>& violations) {
  const int n = s.seed.size();
  for (int j = 0; j < n; ++j) {
    const IntVector c = s.seed.c_vector(j);
    const auto dims = cat.c_module_dims(initial, s.cluster, j);
    const bool pos = !is_zero_vector(dims.positive);
    const bool neg = !is_zero_vector(dims.negative);
    const int sign = vector_sign(c);
    bool ok = pos != neg && sign != 0;
    if (ok) ok = pos ? (sign > 0 && dims.positive == c) : (sign < 0 && dims.negative == negated(c));
    if (!ok) {
      std::ostringstream os;
      os << "word " << word_string(s.word) << " j=" << j + 1 << ": c=" << to_string(c)
         << " positive=" << to_string(dims.positive) << " negative=" << to_string(dims.negative);
      violations.push_back(os.str());
    }
  }
  return n;
}

VectorSet j_dim_set(const ClusterCategory& cat, const Cluster& t, std::size_t* zero_mismatch) {
  std::set<ObjectId> shifts;
  for (int l = 0; l < t.size(); ++l) shifts.insert(*cat.shift(t[l]));
  VectorSet out;
  for (ObjectId x = 0; x < cat.object_count(); ++x) {
    const IntVector d = cat.j_dim_vector(t, x);
    const bool zero = is_zero_vector(d);
    if (zero != (shifts.count(x) > 0) && zero_mismatch) ++*zero_mismatch;
    if (!zero) out.insert(d);
  }
  return out;
}

VectorSet set_minus(const VectorSet& a, const VectorSet& b) {
  VectorSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::pair<std::int64_t, std::set<int>> max_component(const VectorSet& s) {
  std::int64_t best = 0;
  std::set<int> where;
  for (const auto& v : s)
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] > best) best = v[i], where.clear();
      if (v[i] == best) where.insert(static_cast<int>(i));
    }
  return {best, where};
}

// Absolute values of the c-vectors of a seed: a negative c_j becomes
// positive in the neighbouring seed at j.
void witness_all(const Seed& s, VectorSet& out, std::size_t& incoherent) {
  for (int j = 0; j < s.size(); ++j) {
    const IntVector c = s.c_vector(j);
    const int sign = vector_sign(c);
    if (sign == 0) {
      ++incoherent;
      continue;
    }
    out.insert(sign > 0 ? c : negated(c));
  }
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::PassSampled: return "pass (sampled)";
    case Status::BoundLimited: return "bound-limited";
    default: return "fail";
  }
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["claim"] = claim;
  j["status"] = to_string(status);
  j["details"] = details;
  j["failures"] = failures;
  return j;
}

nlohmann::json to_json(const IntVector& v) { return nlohmann::json(v); }

nlohmann::json to_json(const VectorSet& s) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& v : s) a.push_back(v);
  return a;
}

nlohmann::json to_json(const ExchangeMatrix& b) {
  nlohmann::json a = nlohmann::json::array();
  for (int i = 0; i < b.size(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < b.size(); ++j) row.push_back(b(i, j));
    a.push_back(row);
  }
  return a;
}

nlohmann::json word_json(const MutationWord& w) {
  nlohmann::json a = nlohmann::json::array();
  for (int k : w) a.push_back(k + 1);
  return a;
}

std::string word_string(const MutationWord& w) {
  if (w.empty()) return "()";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i] + 1);
  return s;
}

ExchangeMatrix affine_example_quiver() { return ExchangeMatrix::from_arrows(3, {{0, 1}, {1, 2}, {0, 2}}); }

// ------------------------------------------------------------- lockstep

LockstepState lockstep_start(const ClusterCategory& cat, const Cluster& start) {
  Cluster c = start;
  c.word.clear();
  return LockstepState{initial_seed(cat.seed_matrix(c)), std::move(c), {}};
}

LockstepState lockstep_step(const ClusterCategory& cat, const LockstepState& s, int k) {
  LockstepState out{mutate_seed(s.seed, k), cat.mutate_cluster(s.cluster, k), s.word};
  out.word.push_back(k);
  if (cat.seed_matrix(out.cluster) != out.seed.b)
    throw LockstepError("quiver of the cluster differs from the seed after word " + word_string(out.word));
  return out;
}

FiniteModel finite_model(const ExchangeMatrix& b, std::size_t budget) {
  const auto result = detect_finite_type(b, budget);
  const auto* ft = std::get_if<FiniteType>(&result);
  if (!ft) throw std::invalid_argument("exchange matrix is not of finite type");
  FiniteModel m;
  m.type = ft->type;
  m.word_from_acyclic.assign(ft->word_to_acyclic.rbegin(), ft->word_to_acyclic.rend());
  m.category = std::make_unique<ClusterCategory>(opposite(ft->acyclic_member));
  m.cluster = m.category->initial_cluster();
  for (int k : m.word_from_acyclic) m.cluster = m.category->mutate_cluster(m.cluster, k);
  m.cluster.word.clear();
  if (m.category->seed_matrix(m.cluster) != b) throw LockstepError("finite model does not reproduce the input quiver");
  return m;
}

CFamily c_family(const ClusterCategory& cat, const Cluster& initial, ObjectId u, int depth, unsigned threads) {
  CFamily fam;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<LockstepState> level{lockstep_start(cat, initial)};
  seen.insert(pair_key(level[0].seed));
  const int n = cat.rank();
  for (int d = 0; d <= depth && !level.empty(); ++d) {
    std::vector<std::vector<std::optional<LockstepState>>> children(level.size());
    if (d < depth) {
      parallel_for(level.size(), threads, [&](std::size_t i) {
        children[i].resize(n);
        for (int k = 0; k < n; ++k)
          if (cat.exchange_partner(level[i].cluster, k)) children[i][k] = lockstep_step(cat, level[i], k);
      });
    }
    std::vector<LockstepState> next;
    for (std::size_t i = 0; i < level.size(); ++i) {
      const auto& s = level[i];
      ++fam.states;
      for (int j = 0; j < n; ++j)
        if (vector_sign(s.seed.c_vector(j)) == 0) ++fam.incoherent;
      const int j = s.cluster.position(u);
      if (j >= 0) {
        ++fam.hits;
        const IntVector c = s.seed.c_vector(j);
        fam.vectors.insert(c);
        (vector_sign(c) > 0 ? fam.positive : fam.negative).insert(c);
        fam.hit_words.emplace_back(s.word, j);
      }
      if (d == depth) continue;
      for (int k = 0; k < n; ++k) {
        if (!children[i][k]) {
          ++fam.truncated;
          continue;
        }
        if (seen.insert(pair_key(children[i][k]->seed)).second) next.push_back(std::move(*children[i][k]));
      }
    }
    level = std::move(next);
  }
  return fam;
}

std::optional<MutationWord> find_cluster_word(const ClusterCategory& cat, const Cluster& start, const Cluster& target,
                                              int max_depth) {
  std::set<std::vector<ObjectId>> seen{start.summands};
  std::vector<Cluster> level{start};
  level[0].word.clear();
  for (int d = 0; d <= max_depth; ++d) {
    std::vector<Cluster> next;
    for (const auto& c : level) {
      if (c.summands == target.summands) return c.word;
      if (d == max_depth) continue;
      for (int k = 0; k < c.size(); ++k) {
        if (!cat.exchange_partner(c, k)) continue;
        Cluster child = cat.mutate_cluster(c, k);
        if (seen.insert(child.summands).second) next.push_back(std::move(child));
      }
    }
    level = std::move(next);
  }
  return std::nullopt;
}

std::vector<std::pair<ExchangeMatrix, MutationWord>> non_acyclic_members(const ExchangeMatrix& b, int count,
                                                                         int max_length, std::uint64_t rng_seed) {
  std::vector<std::pair<ExchangeMatrix, MutationWord>> out;
  std::set<std::vector<std::int64_t>> seen;
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> length(1, max_length);
  for (int attempt = 0; attempt < 2000 * count && static_cast<int>(out.size()) < count; ++attempt) {
    const MutationWord w = random_word(rng, b.size(), length(rng));
    ExchangeMatrix m = b;
    for (int k : w) m = mutate_matrix(m, k);
    if (m.is_acyclic()) continue;
    std::vector<std::int64_t> key(m.matrix().data(), m.matrix().data() + m.matrix().size());
    if (seen.insert(key).second) out.emplace_back(m, w);
  }
  return out;
}

// ------------------------------------------------------------- checks

VerificationReport check_cokernel_signs(const ExchangeMatrix& b, const CokernelSignOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = "theorem2";
  r.details["quiver"] = to_json(b);
  r.details["exhaustive_depth"] = opt.exhaustive_depth;
  r.details["random_walks"] = opt.random_walks;
  r.details["walk_length"] = opt.walk_length;
  r.details["rng_seed"] = opt.rng_seed;
  std::size_t states = 0, positions = 0;
  try {
    const FiniteModel model = finite_model(b);
    const auto& cat = *model.category;
    r.details["type"] = model.type.name();
    const int n = b.size();

    // Exhaustive: every state within the given distance, deduplicated on (B, C).
    std::set<std::vector<std::int64_t>> seen;
    std::vector<LockstepState> level{lockstep_start(cat, model.cluster)};
    seen.insert(pair_key(level[0].seed));
    for (int d = 0; d <= opt.exhaustive_depth && !level.empty(); ++d) {
      std::vector<std::vector<std::string>> found(level.size());
      std::vector<std::vector<LockstepState>> children(level.size());
      std::vector<int> checked(level.size(), 0);
      parallel_for(level.size(), opt.threads, [&](std::size_t i) {
        checked[i] = cokernel_signs_at(cat, model.cluster, level[i], found[i]);
        if (d < opt.exhaustive_depth)
          for (int k = 0; k < n; ++k) children[i].push_back(lockstep_step(cat, level[i], k));
      });
      std::vector<LockstepState> next;
      for (std::size_t i = 0; i < level.size(); ++i) {
        ++states;
        positions += checked[i];
        r.failures.insert(r.failures.end(), found[i].begin(), found[i].end());
        for (auto& c : children[i])
          if (seen.insert(pair_key(c.seed)).second) next.push_back(std::move(c));
      }
      level = std::move(next);
    }

    // Random walks from a fixed generator; words are drawn before any work.
    std::mt19937_64 rng(opt.rng_seed);
    std::vector<MutationWord> words;
    for (int w = 0; w < opt.random_walks; ++w) words.push_back(random_word(rng, n, opt.walk_length));
    std::vector<std::vector<std::string>> found(words.size());
    std::vector<int> checked(words.size(), 0);
    parallel_for(words.size(), opt.threads, [&](std::size_t i) {
      LockstepState s = lockstep_start(cat, model.cluster);
      for (int k : words[i]) {
        s = lockstep_step(cat, s, k);
        checked[i] += cokernel_signs_at(cat, model.cluster, s, found[i]);
      }
    });
    for (std::size_t i = 0; i < words.size(); ++i) {
      states += words[i].size();
      positions += checked[i];
      r.failures.insert(r.failures.end(), found[i].begin(), found[i].end());
    }
  } catch (const LockstepError& e) {
    r.failures.push_back(e.what());
  }
  r.details["states_checked"] = states;
  r.details["positions_checked"] = positions;
  r.details["violations"] = r.failures.size();
  r.status = r.failures.empty() ? Status::Pass : Status::Fail;
  r.seconds = since(t0);
  return r;
}

VerificationReport check_root_sets(const ExchangeMatrix& b, const RootSetOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = "theorem6";
  r.details["quiver"] = to_json(b);
  const FiniteModel model = finite_model(b);
  const auto& cat = *model.category;
  r.details["type"] = model.type.name();
  r.details["word_from_acyclic"] = word_json(model.word_from_acyclic);
  std::size_t zero_mismatch = 0;
  const VectorSet rhs = j_dim_set(cat, model.cluster, &zero_mismatch);
  r.details["category_side_size"] = rhs.size();
  r.details["zero_vector_mismatches"] = zero_mismatch;
  if (zero_mismatch) r.failures.push_back("j-dimension vector zero off the shifts of the cluster");

  if (b.size() <= opt.exhaustive_rank) {
    const auto lhs = positive_c_vectors(b, opt.budget, opt.threads);
    r.details["mode"] = "exhaustive";
    r.details["seed_side_size"] = lhs.vectors.size();
    r.details["seed_side"] = to_json(lhs.vectors);
    r.details["category_side"] = to_json(rhs);
    const auto missing = set_minus(rhs, lhs.vectors), extra = set_minus(lhs.vectors, rhs);
    r.details["missing_from_seed_side"] = to_json(missing);
    r.details["missing_from_category_side"] = to_json(extra);
    if (!lhs.exhaustive) {
      r.status = Status::BoundLimited;
    } else if (!missing.empty() || !extra.empty()) {
      r.failures.push_back("positive c-vectors differ from the category-side set");
    }
  } else {
    r.details["mode"] = "sampled";
    r.details["sampled_walks"] = opt.sampled_walks;
    r.details["walk_length"] = opt.walk_length;
    r.details["rng_seed"] = opt.rng_seed;
    std::mt19937_64 rng(opt.rng_seed);
    std::vector<MutationWord> words;
    for (int w = 0; w < opt.sampled_walks; ++w) words.push_back(random_word(rng, b.size(), opt.walk_length));
    std::vector<VectorSet> per_walk(words.size());
    std::vector<std::size_t> incoherent(words.size(), 0);
    parallel_for(words.size(), opt.threads, [&](std::size_t i) {
      Seed s = initial_seed(b);
      witness_all(s, per_walk[i], incoherent[i]);
      for (int k : words[i]) {
        s = mutate_seed(s, k);
        witness_all(s, per_walk[i], incoherent[i]);
      }
    });
    VectorSet witnessed;
    std::size_t bad_sign = 0;
    for (std::size_t i = 0; i < words.size(); ++i) {
      witnessed.insert(per_walk[i].begin(), per_walk[i].end());
      bad_sign += incoherent[i];
    }
    r.details["sampled_vectors"] = witnessed.size();
    r.details["coverage_after_sampling"] = set_minus(rhs, set_minus(rhs, witnessed)).size();

    // Directed search: for an uncovered d, take X with Hom_C(T, X) of
    // dimension d and visit clusters containing Sigma^-1 X.
    nlohmann::json directed = nlohmann::json::array();
    std::size_t visited_total = 0;
    for (const auto& d : rhs) {
      if (witnessed.count(d)) continue;
      ObjectId x = -1;
      for (ObjectId y = 0; y < cat.object_count() && x < 0; ++y)
        if (cat.j_dim_vector(model.cluster, y) == d) x = y;
      const ObjectId u = *cat.unshift(x);
      std::set<std::vector<ObjectId>> seen{model.cluster.sorted()};
      std::deque<LockstepState> queue{lockstep_start(cat, model.cluster)};
      std::size_t visited = 0;
      while (!queue.empty() && visited < opt.directed_budget && !witnessed.count(d)) {
        LockstepState s = std::move(queue.front());
        queue.pop_front();
        ++visited;
        if (s.cluster.position(u) >= 0) {
          witness_all(s.seed, witnessed, bad_sign);
          if (witnessed.count(d)) {
            nlohmann::json w;
            w["vector"] = d;
            w["word"] = word_json(s.word);
            w["position"] = s.cluster.position(u) + 1;
            directed.push_back(w);
          }
        }
        for (int k = 0; k < b.size(); ++k) {
          Cluster next = cat.mutate_cluster(s.cluster, k);
          if (seen.insert(next.sorted()).second) queue.push_back(lockstep_step(cat, s, k));
        }
      }
      visited_total += visited;
    }
    r.details["directed_witnesses"] = directed;
    r.details["directed_clusters_visited"] = visited_total;
    const auto outside = set_minus(witnessed, rhs);
    const std::size_t coverage = rhs.size() - set_minus(rhs, witnessed).size();
    r.details["coverage"] = std::to_string(coverage) + "/" + std::to_string(rhs.size());
    r.details["outside_category_side"] = to_json(outside);
    r.details["sign_incoherent"] = bad_sign;
    if (!outside.empty()) r.failures.push_back("c-vector outside the category-side set");
    if (coverage != rhs.size()) r.failures.push_back("directed search left roots uncovered");
    if (bad_sign) r.failures.push_back("sign-incoherent c-vector");
    if (r.failures.empty()) r.status = Status::PassSampled;
  }
  if (!r.failures.empty()) r.status = Status::Fail;
  r.seconds = since(t0);
  return r;
}

VerificationReport check_opposite(const ExchangeMatrix& b, std::size_t budget, unsigned threads) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = "remark7";
  r.details["quiver"] = to_json(b);
  const auto a = all_c_vectors(b, budget, threads);
  const auto o = all_c_vectors(opposite(b), budget, threads);
  r.details["size"] = a.vectors.size();
  r.details["opposite_size"] = o.vectors.size();
  r.details["only_in_quiver"] = to_json(set_minus(a.vectors, o.vectors));
  r.details["only_in_opposite"] = to_json(set_minus(o.vectors, a.vectors));
  if (!a.exhaustive || !o.exhaustive) {
    r.status = Status::BoundLimited;
  } else if (a.vectors != o.vectors) {
    r.failures.push_back("c-vector sets of the quiver and its opposite differ");
    r.status = Status::Fail;
  }
  r.seconds = since(t0);
  return r;
}

VerificationReport check_bound(const BoundOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = "bound";
  nlohmann::json types = nlohmann::json::array();
  for (const auto& t : dynkin_types_up_to(opt.rank_cap)) {
    const auto b = dynkin_quiver(t);
    const FiniteModel model = finite_model(b);
    const VectorSet category_side = j_dim_set(*model.category, model.cluster, nullptr);
    VectorSet seed_side;
    bool exhaustive = false;
    if (t.rank <= opt.exhaustive_rank) {
      auto s = positive_c_vectors(b, opt.budget, opt.threads);
      seed_side = std::move(s.vectors);
      exhaustive = s.exhaustive;
    } else {
      std::mt19937_64 rng(opt.rng_seed);
      std::vector<MutationWord> words;
      for (int w = 0; w < opt.sampled_walks; ++w) words.push_back(random_word(rng, t.rank, opt.walk_length));
      std::vector<VectorSet> per(words.size());
      parallel_for(words.size(), opt.threads, [&](std::size_t i) {
        Seed s = initial_seed(b);
        for (int k : words[i]) {
          s = mutate_seed(s, k);
          for (int j = 0; j < t.rank; ++j)
            if (vector_sign(s.c_vector(j)) > 0) per[i].insert(s.c_vector(j));
        }
      });
      for (auto& p : per) seed_side.insert(p.begin(), p.end());
    }
    const auto [cat_max, cat_where] = max_component(category_side);
    const auto [seed_max, seed_where] = max_component(seed_side);
    std::int64_t expected = 1;
    if (t.family == DynkinType::Family::D) expected = 2;
    if (t.family == DynkinType::Family::E) expected = t.rank == 6 ? 3 : t.rank == 7 ? 4 : 6;
    std::vector<int> degree(t.rank, 0);
    for (auto [x, y] : t.edges()) ++degree[x], ++degree[y];
    nlohmann::json entry;
    entry["type"] = t.name();
    entry["category_max"] = cat_max;
    entry["category_max_vertices"] = word_json(std::vector<int>(cat_where.begin(), cat_where.end()));
    entry["seed_max"] = seed_max;
    entry["seed_max_vertices"] = word_json(std::vector<int>(seed_where.begin(), seed_where.end()));
    entry["seed_side"] = exhaustive ? "exhaustive" : "sampled";
    entry["seed_vectors"] = seed_side.size();
    types.push_back(entry);
    auto fail = [&](const std::string& what) { r.failures.push_back(t.name() + ": " + what); };
    if (cat_max != expected) fail("category-side maximum " + std::to_string(cat_max));
    if (seed_max > cat_max) fail("c-vector component above the category-side maximum");
    if (!set_minus(seed_side, category_side).empty()) fail("c-vector outside the root set");
    if (exhaustive && seed_max != cat_max) fail("exhaustive seed side misses the maximum");
    for (const auto* where : {&cat_where, &seed_where})
      if ((where == &cat_where ? cat_max : seed_max) == 6)
        for (int v : *where)
          if (degree[v] != 3) fail("component 6 away from the trivalent vertex");
  }
  r.details["types"] = types;
  r.status = r.failures.empty() ? Status::Pass : Status::Fail;
  r.seconds = since(t0);
  return r;
}

VerificationReport check_affine_example(const AffineExampleOptions& opt) {
  const auto t0 = Clock::now();
  VerificationReport r;
  r.claim = "example10";
  const int far = opt.double_depth ? 2 * opt.depth : opt.depth;
  const int bound = opt.dimension_bound > 0 ? opt.dimension_bound : opt.family ? 3 * far + 20 : 8;
  r.details["depth"] = opt.depth;
  r.details["dimension_bound"] = bound;
  ClusterCategory cat(affine_example_quiver(), {bound});
  const IntVector s2_root{0, 1, 0};
  const ObjectId s2 = cat.module_id(s2_root);

  // (a) T' = Sigma^-1 T1 + S2 + Sigma^-1 T3 and position 3.
  {
    const Cluster t = cat.initial_cluster();
    Cluster target{{*cat.unshift(t[0]), s2, *cat.unshift(t[2])}, {}};
    cat.validate_cluster(target);
    const auto word = find_cluster_word(cat, t, target, 8);
    nlohmann::json a;
    a["quiver_of_target"] = to_json(cat.quiver_of(target));
    if (!word) {
      r.failures.push_back("target cluster not reached");
    } else {
      LockstepState s = lockstep_start(cat, t);
      for (int k : *word) s = lockstep_step(cat, s, k);
      const auto dims = cat.c_module_dims(t, s.cluster, 2);
      const IntVector c = s.seed.c_vector(2);
      a["word"] = word_json(*word);
      a["cokernel"] = dims.negative;
      a["other_candidate"] = dims.positive;
      a["c_vector"] = c;
      if (dims.negative != IntVector{0, 1, 1} || !is_zero_vector(dims.positive))
        r.failures.push_back("cokernel " + to_string(dims.negative) + " at word " + word_string(*word));
      if (c != IntVector{0, -1, -1}) r.failures.push_back("c-vector " + to_string(c) + " at word " + word_string(*word));
    }
    r.details["cokernel"] = a;
  }

  // (b) c_{S2} from P1 + tau S2 + P3.
  if (opt.family) {
    const Cluster init{{cat.projective(0), *cat.shift(s2), cat.projective(2)}, {}};
    cat.validate_cluster(init);
    const VectorSet expected{{-1, -1, -1}, {0, -1, -1}, {0, -1, 0}};
    const CFamily near = c_family(cat, init, s2, opt.depth, opt.threads);
    nlohmann::json b;
    b["initial_seed_matrix"] = to_json(cat.seed_matrix(init));
    b["family"] = to_json(near.vectors);
    b["states"] = near.states;
    b["hits"] = near.hits;
    b["truncated"] = near.truncated;
    std::size_t truncated = near.truncated, incoherent = near.incoherent;
    if (near.vectors != expected) r.failures.push_back("family at depth " + std::to_string(opt.depth) + " differs");
    // Cokernel check at every hit, relative to the same initial cluster.
    std::vector<std::string> violations;
    for (const auto& [word, j] : near.hit_words) {
      LockstepState s = lockstep_start(cat, init);
      for (int k : word) s = lockstep_step(cat, s, k);
      const auto dims = cat.c_module_dims(init, s.cluster, j);
      const IntVector c = s.seed.c_vector(j);
      const bool ok = is_zero_vector(dims.positive) ? dims.negative == negated(c) : dims.positive == c;
      if (!ok) violations.push_back("word " + word_string(word) + ": c=" + to_string(c));
    }
    b["cokernel_mismatches"] = violations.size();
    r.failures.insert(r.failures.end(), violations.begin(), violations.end());
    if (opt.double_depth) {
      const CFamily deep = c_family(cat, init, s2, far, opt.threads);
      b["family_doubled"] = to_json(deep.vectors);
      b["states_doubled"] = deep.states;
      b["stable"] = deep.vectors == near.vectors;
      truncated += deep.truncated;
      incoherent += deep.incoherent;
      if (deep.vectors != near.vectors) r.failures.push_back("family grows between depth " + std::to_string(opt.depth) +
                                                             " and " + std::to_string(far));
    }
    b["sign_incoherent"] = incoherent;
    if (incoherent) r.failures.push_back("sign-incoherent c-vector");
    r.details["family"] = b;
    if (r.failures.empty() && truncated) r.status = Status::BoundLimited;
  }
  if (!r.failures.empty()) r.status = Status::Fail;
  r.seconds = since(t0);
  return r;
}

}  // namespace cvec
