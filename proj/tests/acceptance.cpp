// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all pass.
//
// Usage: acceptance [--threads N] [--report FILE]

#include <chrono>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cvec/cluster_category.hpp"
#include "cvec/representation.hpp"
#include "cvec/root_system.hpp"
#include "cvec/verify.hpp"

using namespace cvec;
using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::uint64_t kRngSeed = 20240611;

ExchangeMatrix dynkin(const std::string& name) { return dynkin_quiver(DynkinType::parse(name)); }

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back(what);
    }
  }
};

/// Every quiver whose seeds the run touches, for the sign-coherence sweep.
std::vector<ExchangeMatrix> touched;

void touch(const ExchangeMatrix& b) {
  for (const auto& t : touched)
    if (t == b) return;
  touched.push_back(b);
}

std::size_t sign_incoherent_in(const json& details) {
  std::size_t n = 0;
  if (details.is_object()) {
    for (const auto& [key, value] : details.items()) {
      if (key == "sign_incoherent" && value.is_number_unsigned()) n += value.get<std::size_t>();
      n += sign_incoherent_in(value);
    }
  }
  return n;
}
std::size_t reported_incoherent = 0;

void note_report(const VerificationReport& r) { reported_incoherent += sign_incoherent_in(r.details); }

// ------------------------------------------------------------ 1, 2

Outcome affine_cokernel(unsigned threads) {
  Outcome o;
  AffineExampleOptions opt;
  opt.family = false;
  opt.threads = threads;
  const auto t0 = Clock::now();
  const auto r = check_affine_example(opt);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  note_report(r);
  o.require(r.status == Status::Pass, "report status " + to_string(r.status));
  o.require(r.details["cokernel"]["cokernel"] == json::parse("[0,1,1]"), "cokernel " + r.details["cokernel"].dump());
  o.require(r.details["cokernel"]["c_vector"] == json::parse("[0,-1,-1]"), "c-vector differs");
  o.require(secs < 1.0, "runtime " + std::to_string(secs) + " s");
  o.notes.push_back("word " + r.details["cokernel"]["word"].dump());
  return o;
}

Outcome affine_family(unsigned threads) {
  Outcome o;
  AffineExampleOptions opt;
  opt.depth = 12;
  opt.double_depth = true;
  opt.threads = threads;
  const auto t0 = Clock::now();
  const auto r = check_affine_example(opt);
  const double secs = std::chrono::duration<double>(Clock::now() - t0).count();
  note_report(r);
  const auto& f = r.details["family"];
  o.require(r.status == Status::Pass, "report status " + to_string(r.status));
  o.require(f["family"] == json::parse("[[-1,-1,-1],[0,-1,-1],[0,-1,0]]"), "family " + f["family"].dump());
  o.require(f["stable"] == true, "not stable under depth doubling");
  o.require(f["truncated"] == 0, "mutations cut by the dimension bound");
  o.require(secs < 30.0, "runtime " + std::to_string(secs) + " s");
  o.notes.push_back(std::to_string(f["states"].get<std::size_t>()) + " states at depth 12, " +
                    std::to_string(f["states_doubled"].get<std::size_t>()) + " at depth 24");
  return o;
}

// ------------------------------------------------------------ 3, 4, 5

json root_sets_small(unsigned threads, Outcome& o) {
  json reports = json::array();
  for (const auto& t : dynkin_types_up_to(5)) {
    const auto b = dynkin_quiver(t);
    std::vector<std::pair<ExchangeMatrix, MutationWord>> members{{b, {}}};
    const auto extra = non_acyclic_members(b, 5, 8, kRngSeed);
    members.insert(members.end(), extra.begin(), extra.end());
    if (extra.size() < 5)
      o.notes.push_back(t.name() + ": " + std::to_string(extra.size()) + " non-acyclic member(s)");
    for (const auto& [m, w] : members) {
      touch(m);
      RootSetOptions opt;
      opt.threads = threads;
      const auto r = check_root_sets(m, opt);
      note_report(r);
      o.require(r.status == Status::Pass && r.details["mode"] == "exhaustive",
                t.name() + " word " + word_string(w) + ": " + to_string(r.status));
      json entry = r.to_json();
      entry["word"] = word_json(w);
      reports.push_back(entry);
    }
  }
  return reports;
}

json root_sets_large(unsigned threads, Outcome& o) {
  json reports = json::array();
  const std::vector<std::pair<std::string, int>> sizes{{"E6", 36}, {"E7", 63}, {"E8", 120}};
  for (const auto& [name, size] : sizes) {
    RootSetOptions opt;
    opt.threads = threads;
    const auto r = check_root_sets(dynkin(name), opt);
    note_report(r);
    const std::string full = std::to_string(size) + "/" + std::to_string(size);
    o.require(r.details["category_side_size"] == size, name + " category side " + r.details["category_side_size"].dump());
    o.require(r.details["outside_category_side"].empty(), name + " sampled c-vector outside the root set");
    o.require(r.details["coverage"] == full, name + " coverage " + r.details["coverage"].dump());
    o.require(r.passed(), name + ": " + to_string(r.status));
    reports.push_back(r.to_json());
  }
  return reports;
}

json cokernel_walks(unsigned threads, Outcome& o) {
  json reports = json::array();
  for (const char* name : {"A2", "A3", "D4"}) {
    CokernelSignOptions opt;
    opt.exhaustive_depth = 6;
    opt.threads = threads;
    touch(dynkin(name));
    const auto r = check_cokernel_signs(dynkin(name), opt);
    note_report(r);
    o.require(r.status == Status::Pass, std::string(name) + ": " + r.details["violations"].dump() + " violations");
    reports.push_back(r.to_json());
  }
  CokernelSignOptions opt;
  opt.exhaustive_depth = 0;
  opt.random_walks = 200;
  opt.walk_length = 20;
  opt.rng_seed = kRngSeed;
  opt.threads = threads;
  touch(dynkin("A4"));
  const auto r = check_cokernel_signs(dynkin("A4"), opt);
  note_report(r);
  o.require(r.status == Status::Pass, "A4: " + r.details["violations"].dump() + " violations");
  reports.push_back(r.to_json());
  return reports;
}

// ------------------------------------------------------------ 6, 7

Outcome bound(unsigned threads) {
  Outcome o;
  BoundOptions opt;
  opt.rank_cap = 8;
  opt.threads = threads;
  const auto r = check_bound(opt);
  note_report(r);
  o.require(r.status == Status::Pass, r.failures.empty() ? to_string(r.status) : r.failures.front());
  for (const auto& t : r.details["types"])
    if (t["type"] == "E8") o.notes.push_back("E8 maximum at vertex " + t["category_max_vertices"].dump());
  return o;
}

/// Up to `count` members of the mutation class other than `b`, non-acyclic
/// ones first, then the rest in breadth-first order.
std::vector<ExchangeMatrix> mutated_members(const ExchangeMatrix& b, int count) {
  std::vector<ExchangeMatrix> out;
  for (const auto& [m, w] : non_acyclic_members(b, count, 8, kRngSeed)) out.push_back(m);
  std::vector<ExchangeMatrix> frontier{b}, seen{b};
  auto known = [&](const ExchangeMatrix& m) { return std::find(seen.begin(), seen.end(), m) != seen.end(); };
  while (!frontier.empty() && static_cast<int>(out.size()) < count) {
    std::vector<ExchangeMatrix> next;
    for (const auto& m : frontier)
      for (int k = 0; k < m.size(); ++k) {
        auto n = mutate_matrix(m, k);
        if (known(n)) continue;
        seen.push_back(n);
        next.push_back(n);
        if (static_cast<int>(out.size()) < count && std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
      }
    frontier = std::move(next);
  }
  return out;
}

Outcome remark7(unsigned threads) {
  Outcome o;
  for (const auto& t : dynkin_types_up_to(4)) {
    const auto b = dynkin_quiver(t);
    auto members = mutated_members(b, 3);
    if (members.size() < 3) o.notes.push_back(t.name() + ": " + std::to_string(members.size()) + " other member(s)");
    members.insert(members.begin(), b);
    for (const auto& m : members) {
      touch(m);
      touch(opposite(m));
      const auto r = check_opposite(m, 200000, threads);
      note_report(r);
      o.require(r.status == Status::Pass, t.name() + ": " + to_string(r.status));
    }
  }
  return o;
}

// ------------------------------------------------------------ 8

ExchangeMatrix random_matrix(std::mt19937_64& rng, int n) {
  std::uniform_int_distribution<int> entry(-2, 2);
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      m(i, j) = entry(rng);
      m(j, i) = -m(i, j);
    }
  return ExchangeMatrix(m);
}

Outcome sign_coherence(unsigned threads) {
  Outcome o;
  std::size_t seeds = 0, bad = 0;
  for (const auto& b : touched) {
    const auto e = enumerate_seeds(b, 200000, threads);
    o.require(e.exhaustive, "seed enumeration not exhaustive");
    for (const auto& s : e.seeds)
      for (int j = 0; j < s.size(); ++j) bad += vector_sign(s.c_vector(j)) == 0;
    seeds += e.seeds.size();
  }
  o.require(reported_incoherent == 0, std::to_string(reported_incoherent) + " incoherent in reports");

  std::mt19937_64 rng(kRngSeed);
  std::uniform_int_distribution<int> rank(1, 5);
  std::size_t walked = 0, overflow = 0;
  while (walked < 10000) {
    const int n = rank(rng);
    Seed s = initial_seed(random_matrix(rng, n));
    for (int step = 0; step < 10 && walked < 10000; ++step) {
      int k = static_cast<int>(rng() % n);
      if (n > 1 && !s.word.empty() && k == s.word.back()) k = (k + 1) % n;
      try {
        s = mutate_seed(s, k);
      } catch (const OverflowError&) {
        ++overflow;
        break;
      }
      ++walked;
      for (int j = 0; j < n; ++j) bad += vector_sign(s.c_vector(j)) == 0;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " sign-incoherent c-vectors");
  o.notes.push_back(std::to_string(seeds) + " enumerated seeds over " + std::to_string(touched.size()) +
                    " quivers, " + std::to_string(walked) + " random-walk seeds");
  if (overflow) o.notes.push_back(std::to_string(overflow) + " walks stopped at int64 overflow");
  return o;
}

// ------------------------------------------------------------ 9

Outcome structural() {
  Outcome o;
  std::mt19937_64 rng(kRngSeed + 1);
  std::uniform_int_distribution<int> rank(1, 6), length(0, 10);
  int involution_bad = 0, det_bad = 0, cases = 0, overflow = 0;
  while (cases < 10000) {
    const int n = rank(rng);
    Seed s = initial_seed(random_matrix(rng, n));
    const int len = length(rng);
    try {
      for (int step = 0; step < len; ++step) s = mutate_seed(s, static_cast<int>(rng() % n));
      const int k = static_cast<int>(rng() % n);
      const Seed back = mutate_seed(mutate_seed(s, k), k);
      involution_bad += !back.same_pair(s);
      det_bad += std::llabs(determinant(s.c)) != 1;
      ++cases;
    } catch (const OverflowError&) {
      ++overflow;
    }
  }
  o.require(involution_bad == 0, std::to_string(involution_bad) + " involution failures");
  o.require(det_bad == 0, std::to_string(det_bad) + " C-matrices with |det| != 1");
  if (overflow) o.notes.push_back(std::to_string(overflow) + " random cases redrawn after int64 overflow");

  int euler_bad = 0;
  for (const auto& t : dynkin_types_up_to(6)) {
    const auto q = Quiver::from_exchange_matrix(dynkin_quiver(t));
    const auto ind = indecomposables(q);
    for (const auto& m : ind)
      for (const auto& n : ind)
        euler_bad += euler_form(*q, m.dim_vector(), n.dim_vector()) != hom_dimension(m, n) - ext_dim(m, n);
  }
  o.require(euler_bad == 0, std::to_string(euler_bad) + " Euler form mismatches");

  for (const auto& t : dynkin_types_up_to(8)) {
    const auto q = Quiver::from_exchange_matrix(dynkin_quiver(t));
    std::set<IntVector> dims;
    for (const auto& m : indecomposables(q)) dims.insert(m.dim_vector());
    const auto& roots = positive_roots(t);
    o.require(dims == std::set<IntVector>(roots.begin(), roots.end()) && dims.size() == roots.size(),
              t.name() + " Gabriel bijection");
  }

  const std::vector<std::pair<std::string, std::size_t>> counts{{"A2", 5}, {"A3", 14}, {"A4", 42}, {"D4", 50}};
  for (const auto& [name, count] : counts) {
    ClusterCategory cat(dynkin(name));
    const auto cliques = cat.maximal_compatible_sets();
    const auto g = cat.cluster_graph(cat.initial_cluster(), 100000);
    o.require(cliques.size() == count && g.clusters.size() == count,
              name + " has " + std::to_string(cliques.size()) + " maximal compatible sets");
  }
  return o;
}

// ------------------------------------------------------------ driver

struct Runner {
  int failed = 0;
  json summary = json::array();

  void line(int id, const std::string& title, const Outcome& o, double secs) {
    std::ostringstream t;
    t.precision(2);
    t << std::fixed << secs;
    std::cout << (o.pass ? "PASS" : "FAIL") << "  " << id << "  " << title << "  (" << t.str() << " s)";
    for (const auto& n : o.notes) std::cout << "; " << n;
    std::cout << std::endl;
    if (!o.pass) ++failed;
    summary.push_back({{"criterion", id}, {"title", title}, {"pass", o.pass}, {"notes", o.notes}});
  }

  template <class F>
  void run(int id, const std::string& title, F&& f) {
    const auto t0 = Clock::now();
    Outcome o;
    try {
      o = f();
    } catch (const std::exception& e) {
      o.pass = false;
      o.notes.push_back(std::string("exception: ") + e.what());
    }
    line(id, title, o, std::chrono::duration<double>(Clock::now() - t0).count());
  }
};

}  // namespace

int main(int argc, char** argv) {
  unsigned threads = 8;
  std::string report_path;
  for (int i = 1; i < argc; ++i) {
    if (!std::strcmp(argv[i], "--threads") && i + 1 < argc) {
      threads = static_cast<unsigned>(std::atoi(argv[++i]));
    } else if (!std::strcmp(argv[i], "--report") && i + 1 < argc) {
      report_path = argv[++i];
    } else {
      std::cerr << "usage: acceptance [--threads N] [--report FILE]\n";
      return 2;
    }
  }

  Runner run;
  json c3, c4, c5;
  run.run(1, "affine example cokernel (0,1,1) and c-vector (0,-1,-1)", [&] { return affine_cokernel(threads); });
  run.run(2, "affine example c-vector family at depth 12, stable at 24", [&] { return affine_family(threads); });
  run.run(3, "positive c-vectors = Hom(T,X) dimension vectors, ADE rank <= 5", [&] {
    Outcome o;
    c3 = root_sets_small(1, o);
    return o;
  });
  run.run(4, "E6, E7, E8 root sets covered by witnessed c-vectors", [&] {
    Outcome o;
    c4 = root_sets_large(1, o);
    return o;
  });
  run.run(5, "cokernel trichotomy and equality along walks", [&] {
    Outcome o;
    c5 = cokernel_walks(1, o);
    return o;
  });
  run.run(6, "c-vector components bounded by 1/2/3/4/6, 6 only at the E8 branch vertex",
          [&] { return bound(threads); });
  run.run(7, "c-vectors of Q and Q^op agree, rank <= 4", [&] { return remark7(threads); });
  run.run(8, "sign coherence", [&] { return sign_coherence(threads); });
  run.run(9, "structural suites", [] { return structural(); });
  run.run(10, "criteria 3-5 byte-identical with 1 and 8 threads", [&] {
    Outcome o, scratch;
    const auto a3 = root_sets_small(8, scratch);
    const auto a4 = root_sets_large(8, scratch);
    const auto a5 = cokernel_walks(8, scratch);
    o.require(!c3.is_null() && c3.dump() == a3.dump(), "criterion 3 reports differ");
    o.require(!c4.is_null() && c4.dump() == a4.dump(), "criterion 4 reports differ");
    o.require(!c5.is_null() && c5.dump() == a5.dump(), "criterion 5 reports differ");
    return o;
  });

  if (!report_path.empty()) {
    json out{{"criteria", run.summary}, {"root_sets_small", c3}, {"root_sets_large", c4}, {"theorem2", c5}};
    std::ofstream(report_path) << out.dump(2) << "\n";
  }
  std::cout << (run.failed ? "FAILED " + std::to_string(run.failed) + " of 10" : "ALL 10 PASSED") << std::endl;
  return run.failed ? 1 : 0;
}
