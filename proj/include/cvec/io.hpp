#pragma once

// Quiver files, seed JSON and DOT export.
//
// A quiver file holds either {"n": 3, "arrows": [[1, 2], [2, 3]]} with
// 1-based vertices (repeat a pair for multiple arrows) or {"b": [[...]]}.
// Optional keys: "name" and "word", a 1-based mutation word applied before
// use.

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "cvec/cluster_category.hpp"
#include "cvec/seed.hpp"

namespace cvec {

/// Malformed input. what() starts with the location: "line 3, column 7" for
/// syntax errors, a JSON pointer such as "/arrows/2" otherwise.
class InputError : public std::runtime_error {
 public:
  InputError(std::string location, const std::string& message)
      : std::runtime_error(location + ": " + message), location_(std::move(location)) {}
  const std::string& location() const { return location_; }

 private:
  std::string location_;
};

struct QuiverFile {
  std::optional<std::string> name;
  ExchangeMatrix b;   // as written
  MutationWord word;  // 0-based

  /// b mutated along word.
  ExchangeMatrix resolved() const;
};

QuiverFile parse_quiver(std::string_view text);
/// Throws InputError with location "<path>" if the file cannot be read.
QuiverFile read_quiver_file(const std::string& path);

/// "1,3,2" -> {0, 2, 1}; every index must lie in 1..n.
MutationWord parse_word(std::string_view text, int n);
/// "1,0,1" -> {1, 0, 1}.
IntVector parse_vector(std::string_view text);

/// {"n": .., "arrows": [..], "b": [..]}, arrows 1-based.
nlohmann::json quiver_json(const ExchangeMatrix& b);
/// {"b": .., "c": .., "word": [..]}, word 1-based.
nlohmann::json seed_json(const Seed& s);
nlohmann::json seeds_json(const std::vector<Seed>& seeds);

/// Nodes are seed hashes in hex; edges carry the 1-based mutation index.
std::string exchange_graph_dot(const SeedEnumeration& e);
/// Nodes are clusters labeled by their summands; edges carry the 1-based
/// position exchanged, read from the first endpoint.
std::string cluster_graph_dot(const ClusterCategory& cat, const ClusterGraph& g);

std::string hex_hash(std::uint64_t h);

}  // namespace cvec
