#include "cvec/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "cvec/verify.hpp"

namespace cvec {

namespace {

using nlohmann::json;

std::string line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  const std::size_t end = std::min(byte > 0 ? byte - 1 : 0, text.size());
  for (std::size_t i = 0; i < end; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

std::int64_t as_int(const json& j, const std::string& where) {
  if (!j.is_number_integer()) throw InputError(where, "expected an integer");
  return j.get<std::int64_t>();
}

const json& as_array(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where, "expected an array");
  return j;
}

ExchangeMatrix from_arrow_list(const json& doc) {
  const std::int64_t n = as_int(doc.at("n"), "/n");
  if (n < 1) throw InputError("/n", "expected a positive vertex count");
  std::vector<std::pair<int, int>> arrows;
  std::set<std::pair<int, int>> seen;
  if (doc.contains("arrows")) {
    const auto& list = as_array(doc["arrows"], "/arrows");
    for (std::size_t a = 0; a < list.size(); ++a) {
      const std::string where = "/arrows/" + std::to_string(a);
      const auto& pair = as_array(list[a], where);
      if (pair.size() != 2) throw InputError(where, "expected a pair [i, j]");
      const auto i = as_int(pair[0], where + "/0"), j = as_int(pair[1], where + "/1");
      if (i < 1 || i > n) throw InputError(where + "/0", "vertex out of range 1.." + std::to_string(n));
      if (j < 1 || j > n) throw InputError(where + "/1", "vertex out of range 1.." + std::to_string(n));
      if (i == j) throw InputError(where, "loops are not allowed");
      if (seen.count({static_cast<int>(j), static_cast<int>(i)}))
        throw InputError(where, "2-cycles are not allowed");
      seen.insert({static_cast<int>(i), static_cast<int>(j)});
      arrows.emplace_back(static_cast<int>(i - 1), static_cast<int>(j - 1));
    }
  }
  return ExchangeMatrix::from_arrows(static_cast<int>(n), arrows);
}

ExchangeMatrix from_rows(const json& doc) {
  const auto& rows = as_array(doc.at("b"), "/b");
  const auto n = static_cast<Eigen::Index>(rows.size());
  if (n == 0) throw InputError("/b", "expected a nonempty matrix");
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const std::string where = "/b/" + std::to_string(i);
    const auto& row = as_array(rows[i], where);
    if (static_cast<Eigen::Index>(row.size()) != n)
      throw InputError(where, "expected " + std::to_string(n) + " entries");
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = as_int(row[j], where + "/" + std::to_string(j));
  }
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (m(i, j) != -m(j, i))
        throw InputError("/b/" + std::to_string(i) + "/" + std::to_string(j), "matrix is not skew-symmetric");
  return ExchangeMatrix(m);
}

}  // namespace

ExchangeMatrix QuiverFile::resolved() const {
  ExchangeMatrix r = b;
  for (int k : word) r = mutate_matrix(r, k);
  return r;
}

QuiverFile parse_quiver(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::string msg = e.what();
    if (auto p = msg.find("syntax error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(line_column(text, e.byte), msg);
  }
  if (!doc.is_object()) throw InputError("/", "expected an object");
  for (const auto& [key, value] : doc.items())
    if (key != "n" && key != "arrows" && key != "b" && key != "name" && key != "word")
      throw InputError("/" + key, "unknown key");

  QuiverFile q;
  const bool has_arrows = doc.contains("n"), has_b = doc.contains("b");
  if (!has_arrows && !has_b) throw InputError("/", "expected \"n\" and \"arrows\", or \"b\"");
  if (doc.contains("arrows") && !has_arrows) throw InputError("/arrows", "\"arrows\" needs \"n\"");
  if (has_b) q.b = from_rows(doc);
  if (has_arrows) {
    auto a = from_arrow_list(doc);
    if (has_b && a != q.b) throw InputError("/b", "disagrees with \"arrows\"");
    q.b = a;
  }
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw InputError("/name", "expected a string");
    q.name = doc["name"].get<std::string>();
  }
  if (doc.contains("word")) {
    const auto& w = as_array(doc["word"], "/word");
    for (std::size_t p = 0; p < w.size(); ++p) {
      const std::string where = "/word/" + std::to_string(p);
      const auto k = as_int(w[p], where);
      if (k < 1 || k > q.b.size()) throw InputError(where, "vertex out of range 1.." + std::to_string(q.b.size()));
      q.word.push_back(static_cast<int>(k - 1));
    }
  }
  return q;
}

QuiverFile read_quiver_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(path, "cannot open file");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_quiver(buf.str());
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.location(), std::string(e.what()).substr(e.location().size() + 2));
  }
}

MutationWord parse_word(std::string_view text, int n) {
  MutationWord w;
  if (text.empty()) return w;
  for (const auto& v : parse_vector(text)) {
    if (v < 1 || v > n) throw InputError("--word", "index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    w.push_back(static_cast<int>(v - 1));
  }
  return w;
}

IntVector parse_vector(std::string_view text) {
  IntVector out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find(',', pos), text.size());
    std::int64_t v = 0;
    const char* first = text.data() + pos;
    const char* last = text.data() + end;
    while (first < last && *first == ' ') ++first;
    if (first < last && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last || first == last)
      throw InputError("column " + std::to_string(pos + 1), "expected an integer in \"" + std::string(text) + "\"");
    out.push_back(v);
    pos = end + 1;
  }
  return out;
}

nlohmann::json quiver_json(const ExchangeMatrix& b) {
  json arrows = json::array();
  for (auto [i, j] : b.arrows()) arrows.push_back({i + 1, j + 1});
  return {{"n", b.size()}, {"arrows", arrows}, {"b", to_json(b)}};
}

nlohmann::json seed_json(const Seed& s) {
  json c = json::array();
  for (Eigen::Index i = 0; i < s.c.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < s.c.cols(); ++j) row.push_back(s.c(i, j));
    c.push_back(row);
  }
  return {{"b", to_json(s.b)}, {"c", c}, {"word", word_json(s.word)}};
}

nlohmann::json seeds_json(const std::vector<Seed>& seeds) {
  json out = json::array();
  for (const auto& s : seeds) out.push_back(seed_json(s));
  return out;
}

std::string hex_hash(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string exchange_graph_dot(const SeedEnumeration& e) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (const auto& s : e.seeds) out << "  \"" << hex_hash(seed_hash(s)) << "\";\n";
  for (const auto& [a, b, k] : e.edges)
    out << "  \"" << hex_hash(seed_hash(e.seeds[a])) << "\" -- \"" << hex_hash(seed_hash(e.seeds[b]))
        << "\" [label=\"" << k + 1 << "\"];\n";
  out << "}\n";
  return out.str();
}

std::string cluster_graph_dot(const ClusterCategory& cat, const ClusterGraph& g) {
  std::ostringstream out;
  out << "graph clusters {\n";
  for (std::size_t i = 0; i < g.clusters.size(); ++i) {
    out << "  c" << i << " [label=\"";
    const auto& c = g.clusters[i];
    for (int p = 0; p < c.size(); ++p) out << (p ? " + " : "") << cat.object(c[p]).str();
    out << "\"];\n";
  }
  for (auto [a, b] : g.edges) {
    const auto& ca = g.clusters[a];
    const auto sb = g.clusters[b].sorted();
    int label = 0;
    for (int p = 0; p < ca.size(); ++p)
      if (!std::binary_search(sb.begin(), sb.end(), ca[p])) label = p + 1;
    out << "  c" << a << " -- c" << b << " [label=\"" << label << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace cvec
