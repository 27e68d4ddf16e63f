#include "cvec/dynkin.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cvec {

DynkinType::DynkinType(Family f, int r) : family(f), rank(r) {
  bool ok = false;
  switch (f) {
    case Family::A: ok = r >= 1; break;
    case Family::D: ok = r >= 4; break;
    case Family::E: ok = r >= 6 && r <= 8; break;
  }
  if (!ok) throw std::invalid_argument("illegal Dynkin type " + name());
}

DynkinType DynkinType::parse(std::string_view text) {
  if (text.size() < 2) throw std::invalid_argument("cannot parse Dynkin type '" + std::string(text) + "'");
  Family f;
  switch (std::toupper(static_cast<unsigned char>(text[0]))) {
    case 'A': f = Family::A; break;
    case 'D': f = Family::D; break;
    case 'E': f = Family::E; break;
    default: throw std::invalid_argument("unknown Dynkin family in '" + std::string(text) + "'");
  }
  int r = 0;
  for (char ch : text.substr(1)) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw std::invalid_argument("cannot parse Dynkin rank in '" + std::string(text) + "'");
    r = r * 10 + (ch - '0');
    if (r > 1000) throw std::invalid_argument("Dynkin rank too large");
  }
  return DynkinType(f, r);
}

std::string DynkinType::name() const {
  const char* letter = family == Family::A ? "A" : family == Family::D ? "D" : "E";
  return letter + std::to_string(rank);
}

std::vector<std::pair<int, int>> DynkinType::edges() const {
  std::vector<std::pair<int, int>> e;
  const int n = rank;
  switch (family) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 2; ++i) e.emplace_back(i, i + 1);
      e.emplace_back(n - 3, n - 2);
      e.emplace_back(n - 3, n - 1);
      break;
    case Family::E:
      e.emplace_back(0, 2);
      e.emplace_back(1, 3);
      for (int i = 2; i + 1 < n; ++i) e.emplace_back(i, i + 1);
      break;
  }
  std::sort(e.begin(), e.end());
  return e;
}

int DynkinType::branch_vertex() const {
  switch (family) {
    case Family::A: return -1;
    case Family::D: return rank - 3;
    case Family::E: return 3;
  }
  return -1;
}

std::vector<DynkinType> dynkin_types_up_to(int max_rank) {
  std::vector<DynkinType> out;
  for (int r = 1; r <= max_rank; ++r) out.emplace_back(DynkinType::Family::A, r);
  for (int r = 4; r <= max_rank; ++r) out.emplace_back(DynkinType::Family::D, r);
  for (int r = 6; r <= std::min(max_rank, 8); ++r) out.emplace_back(DynkinType::Family::E, r);
  return out;
}

}  // namespace cvec
