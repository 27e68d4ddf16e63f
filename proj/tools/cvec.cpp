// cvec: c-vectors by seed mutation and by cluster categories.

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "json.hpp"

#include "cvec/cluster_category.hpp"
#include "cvec/io.hpp"
#include "cvec/root_system.hpp"
#include "cvec/seed.hpp"
#include "cvec/verify.hpp"

using namespace cvec;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kCheckFailed = 1, kBadInput = 2, kInternal = 3 };

struct Args {
  std::string json_path;
  std::string dot_path;
  unsigned threads = 1;
  std::size_t budget = 200000;
  int depth = -1;
  std::uint64_t rng_seed = 1;
  std::string quiver;
  std::string word;
  int j = 0;
  int bound = 0;
  bool max = false;
  std::string type;
  std::string action;
  std::string file;
  std::string root_a, root_b;
  int walks = -1;
  int walk_length = -1;
  int rank_cap = 8;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError(path, "cannot write file");
  out << text;
}

void emit(const Args& a, const json& j) {
  const std::string text = j.dump(2) + "\n";
  if (a.json_path.empty())
    std::cout << text;
  else
    write_text(a.json_path, text);
}

void emit_dot(const Args& a, const std::string& dot) {
  if (!a.dot_path.empty()) write_text(a.dot_path, dot);
}

json error_json(const std::string& kind, const std::string& message) {
  return {{"error", {{"kind", kind}, {"message", message}}}};
}

QuiverFile load_quiver(const Args& a) {
  const std::string& path = a.quiver.empty() ? a.file : a.quiver;
  if (path.empty()) throw UsageError("a quiver file is required (--quiver FILE)");
  return read_quiver_file(path);
}

json cluster_json(const ClusterCategory& cat, const Cluster& c) {
  json out = json::array();
  for (int p = 0; p < c.size(); ++p) out.push_back(cat.object(c[p]).str());
  return out;
}

/// Category and cluster whose seed matrix is `b`.
struct Model {
  std::unique_ptr<ClusterCategory> category;
  Cluster cluster;
};

Model model_for(const ExchangeMatrix& b, const Args& a) {
  Model m;
  if (a.bound > 0) {
    if (!b.is_acyclic()) throw UsageError("--bound needs an acyclic quiver");
    m.category = std::make_unique<ClusterCategory>(opposite(b), ClusterCategory::Options{a.bound});
    m.cluster = m.category->initial_cluster();
    return m;
  }
  const auto result = detect_finite_type(b, a.budget);
  if (!std::holds_alternative<FiniteType>(result))
    throw UsageError("quiver is not of finite type; pass --bound N with an acyclic quiver");
  auto f = finite_model(b, a.budget);
  m.category = std::move(f.category);
  m.cluster = f.cluster;
  return m;
}

int run_mutate(const Args& a) {
  const auto q = load_quiver(a);
  const auto b = q.resolved();
  const Seed s = mutate_along(initial_seed(b), parse_word(a.word, b.size()));
  std::cerr << "mutated along " << (a.word.empty() ? "the empty word" : a.word) << "\n";
  emit(a, seed_json(s));
  return kOk;
}

int run_seeds(const Args& a) {
  const auto q = load_quiver(a);
  const auto e = enumerate_seeds(q.resolved(), a.budget, a.threads);
  std::cerr << e.seeds.size() << " seeds" << (e.exhaustive ? "" : " (budget reached, not exhaustive)") << "\n";
  emit(a, seeds_json(e.seeds));
  emit_dot(a, exchange_graph_dot(e));
  return kOk;
}

int run_classify(const Args& a) {
  const auto q = load_quiver(a);
  const auto r = detect_finite_type(q.resolved(), a.budget);
  json out;
  if (const auto* f = std::get_if<FiniteType>(&r)) {
    out = {{"finite", true}, {"type", f->type.name()}, {"word_to_acyclic", word_json(f->word_to_acyclic)}};
  } else if (const auto* i = std::get_if<InfiniteType>(&r)) {
    out = {{"finite", false}, {"witness", to_json(i->witness)}, {"word", word_json(i->word)}};
  } else {
    out = {{"finite", nullptr}, {"visited", std::get<BudgetExhausted>(r).visited}};
  }
  std::cerr << out.dump() << "\n";
  emit(a, out);
  return kOk;
}

int run_roots(const Args& a) {
  DynkinType t;
  try {
    t = DynkinType::parse(a.type);
  } catch (const std::invalid_argument& e) {
    throw InputError("<type>", e.what());
  }
  if (a.max) {
    const auto m = max_coefficient(t);
    json vertices = json::array();
    for (int v : m.vertices) vertices.push_back(v + 1);
    std::cerr << t.name() << ": largest coefficient " << m.value << "\n";
    emit(a, {{"value", m.value}, {"vertices", vertices}});
  } else {
    const auto& roots = positive_roots(t);
    std::cerr << t.name() << ": " << roots.size() << " positive roots\n";
    emit(a, json(roots));
  }
  return kOk;
}

int run_rep(const Args& a) {
  const auto q = load_quiver(a);
  const auto b = q.resolved();
  if (!b.is_acyclic()) throw InputError("/", "representations need an acyclic quiver");
  if (!identify_dynkin(b)) throw InputError("/", "representations need a Dynkin quiver");
  const auto quiver = Quiver::from_exchange_matrix(b);
  const auto ind = indecomposables(quiver);
  if (a.action == "indecomposables") {
    json dims = json::array();
    for (const auto& m : ind) dims.push_back(m.dim_vector());
    std::cerr << ind.size() << " indecomposables\n";
    emit(a, dims);
    return kOk;
  }
  auto find = [&](const std::string& text, const char* which) -> const Representation& {
    const auto v = parse_vector(text);
    for (const auto& m : ind)
      if (m.dim_vector() == v) return m;
    throw InputError(which, "no indecomposable with dimension vector " + to_string(v));
  };
  if (a.root_a.empty() || a.root_b.empty()) throw UsageError("rep hom needs two dimension vectors");
  const auto& m = find(a.root_a, "<rootA>");
  const auto& n = find(a.root_b, "<rootB>");
  const json out{{"hom", hom_dimension(m, n)}, {"ext", ext_dim(m, n)}};
  std::cerr << out.dump() << "\n";
  emit(a, out);
  return kOk;
}

int run_cat(const Args& a) {
  const auto q = load_quiver(a);
  const auto b = q.resolved();
  Model m = model_for(b, a);
  const auto& cat = *m.category;
  if (a.action == "clusters") {
    const auto g = cat.cluster_graph(m.cluster, a.budget);
    json clusters = json::array();
    for (const auto& c : g.clusters) clusters.push_back(cluster_json(cat, c));
    std::cerr << g.clusters.size() << " clusters, " << g.edges.size() << " exchanges"
              << (g.exhaustive ? "" : " (budget reached)") << "\n";
    emit(a, {{"count", g.clusters.size()}, {"exhaustive", g.exhaustive}, {"clusters", clusters}});
    emit_dot(a, cluster_graph_dot(cat, g));
    return kOk;
  }
  if (a.j < 1 || a.j > b.size()) throw InputError("--j", "position out of range 1.." + std::to_string(b.size()));
  const int j = a.j - 1;
  LockstepState s = lockstep_start(cat, m.cluster);
  for (int k : parse_word(a.word, b.size())) s = lockstep_step(cat, s, k);
  const auto d = cat.c_module_dims(m.cluster, s.cluster, j);
  const auto c = s.seed.c_vector(j);
  const bool pos = std::any_of(d.positive.begin(), d.positive.end(), [](auto v) { return v != 0; });
  const bool neg = std::any_of(d.negative.begin(), d.negative.end(), [](auto v) { return v != 0; });
  IntVector predicted(c.size(), 0);
  for (std::size_t l = 0; l < c.size(); ++l) predicted[l] = pos ? d.positive[l] : -d.negative[l];
  const bool agrees = pos != neg && predicted == c;
  json out{{"cluster", cluster_json(cat, s.cluster)},
           {"word", word_json(s.word)},
           {"j", a.j},
           {"positive", d.positive},
           {"negative", d.negative},
           {"sign", pos && !neg ? 1 : (neg && !pos ? -1 : 0)},
           {"c_vector", c},
           {"agrees", agrees}};
  std::cerr << "c_" << a.j << " = " << to_string(c) << (agrees ? ", matches the cokernel" : ", MISMATCH") << "\n";
  emit(a, out);
  return agrees ? kOk : kCheckFailed;
}

int run_verify(const Args& a) {
  VerificationReport r;
  const auto t0 = std::chrono::steady_clock::now();
  if (a.action == "bound") {
    BoundOptions o;
    o.rank_cap = a.rank_cap;
    o.budget = a.budget;
    o.rng_seed = a.rng_seed;
    o.threads = a.threads;
    if (a.walks >= 0) o.sampled_walks = a.walks;
    if (a.walk_length >= 0) o.walk_length = a.walk_length;
    r = check_bound(o);
  } else if (a.action == "example10") {
    AffineExampleOptions o;
    if (a.depth >= 0) o.depth = a.depth;
    o.dimension_bound = a.bound;
    o.threads = a.threads;
    r = check_affine_example(o);
  } else {
    const auto b = load_quiver(a).resolved();
    if (a.action == "theorem2") {
      CokernelSignOptions o;
      if (a.depth >= 0) o.exhaustive_depth = a.depth;
      if (a.walks >= 0) o.random_walks = a.walks;
      if (a.walk_length >= 0) o.walk_length = a.walk_length;
      o.rng_seed = a.rng_seed;
      o.threads = a.threads;
      r = check_cokernel_signs(b, o);
    } else if (a.action == "theorem6") {
      RootSetOptions o;
      o.budget = a.budget;
      o.rng_seed = a.rng_seed;
      o.threads = a.threads;
      if (a.walks >= 0) o.sampled_walks = a.walks;
      if (a.walk_length >= 0) o.walk_length = a.walk_length;
      r = check_root_sets(b, o);
    } else {
      r = check_opposite(b, a.budget, a.threads);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::cerr << r.claim << ": " << to_string(r.status) << " (" << secs << " s)\n";
  for (const auto& f : r.failures) std::cerr << "  " << f << "\n";
  emit(a, r.to_json());
  return r.passed() ? kOk : kCheckFailed;
}

json claims() {
  return json::array({
      {{"id", "theorem2"},
       {"statement", "each c-vector c_j(t) is, up to sign, the dimension vector of exactly one of two cokernels "
                     "built from the exchange triangles at j"}},
      {{"id", "theorem6"},
       {"statement", "the positive c-vectors of a finite-type quiver are the dimension vectors of "
                     "Hom(T, X) over indecomposables X that are not shifts of summands of T"}},
      {{"id", "remark7"}, {"statement", "a quiver and its opposite have the same c-vectors"}},
      {{"id", "bound"},
       {"statement", "c-vector entries of finite-type quivers are at most 6, and 6 occurs only at the "
                     "trivalent vertex of E8"}},
      {{"id", "example10"},
       {"statement", "on the affine quiver 1->2, 2->3, 1->3 the cokernel at the third summand is (0,1,1) and "
                     "the c-vectors at clusters containing S2 are (-1,-1,-1), (0,-1,-1), (0,-1,0)"}},
  });
}

}  // namespace

int main(int argc, char** argv) {
  Args a;
  CLI::App app{"c-vectors of quivers by seed mutation and cluster categories", "cvec"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  app.set_version_flag("--version", std::string("cvec ") + kVersion);
  bool list_claims = false;
  app.add_flag("--list-claims", list_claims, "List the claims that verify can check");
  app.add_option("--json", a.json_path, "Write JSON here instead of stdout");
  app.add_option("--dot", a.dot_path, "Write a DOT graph here");
  app.add_option("--threads", a.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_option("--budget", a.budget, "Node budget for searches")->check(CLI::PositiveNumber);
  app.add_option("--rng-seed", a.rng_seed, "Seed for random walks");

  auto* mutate = app.add_subcommand("mutate", "Mutate the initial seed along a word");
  mutate->add_option("--quiver", a.quiver, "Quiver file")->required();
  mutate->add_option("--word", a.word, "1-based mutation word, e.g. 1,3,2");

  auto* seeds = app.add_subcommand("seeds", "Enumerate seeds with principal coefficients");
  seeds->add_option("--quiver", a.quiver, "Quiver file")->required();

  auto* classify = app.add_subcommand("classify", "Decide whether the mutation class is of finite type");
  classify->add_option("--quiver", a.quiver, "Quiver file")->required();

  auto* roots = app.add_subcommand("roots", "Positive roots of a Dynkin type");
  roots->add_option("type", a.type, "A1.., D4.., E6, E7, E8")->required();
  roots->add_flag("--max", a.max, "Largest coefficient and where it occurs");

  auto* rep = app.add_subcommand("rep", "Representations of a Dynkin quiver");
  rep->add_option("action", a.action, "indecomposables | hom")
      ->required()
      ->check(CLI::IsMember({"indecomposables", "hom"}));
  rep->add_option("file", a.file, "Quiver file");
  rep->add_option("rootA", a.root_a, "Dimension vector, e.g. 1,1,0");
  rep->add_option("rootB", a.root_b, "Dimension vector");
  rep->add_option("--quiver", a.quiver, "Quiver file");

  auto* cat = app.add_subcommand("cat", "Cluster category of the quiver");
  cat->add_option("action", a.action, "clusters | cmodule")->required()->check(CLI::IsMember({"clusters", "cmodule"}));
  cat->add_option("file", a.file, "Quiver file");
  cat->add_option("--quiver", a.quiver, "Quiver file");
  cat->add_option("--word", a.word, "1-based mutation word");
  cat->add_option("--j", a.j, "1-based position");
  cat->add_option("--bound", a.bound, "Module dimension bound for non-Dynkin acyclic quivers");

  auto* verify = app.add_subcommand("verify", "Check a claim and emit a report");
  verify->add_option("claim", a.action, "theorem2 | theorem6 | remark7 | bound | example10")
      ->required()
      ->check(CLI::IsMember({"theorem2", "theorem6", "remark7", "bound", "example10"}));
  verify->add_option("--quiver", a.quiver, "Quiver file");
  verify->add_option("--depth", a.depth, "Exhaustive walk depth (theorem2) or family depth (example10)");
  verify->add_option("--walks", a.walks, "Random or sampled walks");
  verify->add_option("--walk-length", a.walk_length, "Length of random walks");
  verify->add_option("--rank-cap", a.rank_cap, "Largest rank for bound")->check(CLI::Range(1, 8));
  verify->add_option("--bound", a.bound, "Module dimension bound for example10 (0 picks one)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    if (code == 0) return 0;
    std::cout << error_json("usage", e.what()).dump() << "\n";
    return kBadInput;
  }

  try {
    if (list_claims) {
      emit(a, claims());
      return kOk;
    }
    if (*mutate) return run_mutate(a);
    if (*seeds) return run_seeds(a);
    if (*classify) return run_classify(a);
    if (*roots) return run_roots(a);
    if (*rep) return run_rep(a);
    if (*cat) return run_cat(a);
    if (*verify) return run_verify(a);
    std::cerr << app.help();
    std::cout << error_json("usage", "a subcommand is required").dump() << "\n";
    return kBadInput;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << error_json("input", e.what()).dump() << "\n";
    return kBadInput;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << error_json("usage", e.what()).dump() << "\n";
    return kBadInput;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << error_json("input", e.what()).dump() << "\n";
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cout << error_json("internal", e.what()).dump() << "\n";
    return kInternal;
  }
}
