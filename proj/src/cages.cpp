#include <stdexcept>

#include "spectra/graph.hpp"

namespace spectra {

Graph lcf_graph(int n, const std::vector<int>& pattern) {
  if (n < 3 || pattern.empty() || n % static_cast<int>(pattern.size()) != 0) {
    throw std::invalid_argument("lcf_graph: pattern must divide the cycle length");
  }
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i) edges.emplace_back(i, (i + 1) % n);
  for (int i = 0; i < n; ++i) {
    const int off = pattern[i % pattern.size()];
    const int j = ((i + off) % n + n) % n;
    if (i < j) edges.emplace_back(i, j);
  }
  return Graph(n, std::move(edges));
}

const std::vector<CageInfo>& cage_table() {
  static const std::vector<CageInfo> table = {
      {CageKind::k4, "k4", 4, 3, 1},
      {CageKind::petersen, "petersen", 10, 5, 2},
      {CageKind::heawood, "heawood", 14, 6, 3},
      {CageKind::mcgee, "mcgee", 24, 7, 4},
      {CageKind::tutte_coxeter, "tutte-coxeter", 30, 8, 4},
  };
  return table;
}

Graph cage_graph(CageKind kind) {
  switch (kind) {
    case CageKind::k4: {
      return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    case CageKind::petersen: {
      std::vector<Edge> edges;
      for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);          // outer pentagon
        edges.emplace_back(i, i + 5);                // spokes
        edges.emplace_back(i + 5, 5 + (i + 2) % 5);  // inner pentagram
      }
      return Graph(10, std::move(edges));
    }
    case CageKind::heawood:
      return lcf_graph(14, {5, -5});
    case CageKind::mcgee:
      return lcf_graph(24, {12, 7, -7});
    case CageKind::tutte_coxeter:
      return lcf_graph(30, {-13, -9, 7, -7, 9, 13});
  }
  throw std::invalid_argument("cage_graph: unknown kind");
}

std::optional<CageKind> cage_by_name(const std::string& name) {
  for (const auto& info : cage_table()) {
    if (info.name == name) return info.kind;
  }
  return std::nullopt;
}

}  // namespace spectra
