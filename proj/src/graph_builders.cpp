#include <algorithm>
#include <set>
#include <stdexcept>

#include "spectra/graph.hpp"
#include "spectra/rng.hpp"

namespace spectra {

Graph build_half_line(int m) {
  if (m < 1) throw std::invalid_argument("build_half_line: need at least one vertex");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < m; ++i) edges.emplace_back(i, i + 1);
  return Graph(m, std::move(edges));
}

Graph build_line_segment(int m) { return build_half_line(m); }

namespace {

std::vector<std::int64_t> tree_level_sizes(int d, int depth) {
  std::vector<std::int64_t> sizes{1};
  for (int l = 1; l <= depth; ++l) {
    const std::int64_t prev = sizes.back();
    sizes.push_back(l == 1 ? static_cast<std::int64_t>(d)
                           : prev * (d - 1));
  }
  return sizes;
}

}  // namespace

std::int64_t regular_tree_size(int d, int depth) {
  if (d < 1 || depth < 0) throw std::invalid_argument("regular_tree_size: bad parameters");
  std::int64_t total = 0;
  for (auto s : tree_level_sizes(d, depth)) total += s;
  return total;
}

Graph build_regular_tree(int d, int depth) {
  if (d < 1 || depth < 0) throw std::invalid_argument("build_regular_tree: bad parameters");
  const std::int64_t size = regular_tree_size(d, depth);
  if (size > (1 << 24)) throw std::invalid_argument("build_regular_tree: tree too large");
  std::vector<Edge> edges;
  int next = 1;
  std::vector<int> frontier{0};
  for (int l = 0; l < depth; ++l) {
    std::vector<int> nxt;
    for (int v : frontier) {
      const int kids = (l == 0) ? d : d - 1;
      for (int c = 0; c < kids; ++c) {
        edges.emplace_back(v, next);
        nxt.push_back(next++);
      }
    }
    frontier = std::move(nxt);
  }
  return Graph(next, std::move(edges));
}

std::vector<int> tree_levels(int d, int depth) {
  const auto sizes = tree_level_sizes(d, depth);
  std::vector<int> levels;
  for (int l = 0; l <= depth; ++l) {
    levels.insert(levels.end(), static_cast<std::size_t>(sizes[l]), l);
  }
  return levels;
}

Graph build_glued_tree(int d, int depth, int tail) {
  if (tail < 0) throw std::invalid_argument("build_glued_tree: negative tail");
  Graph tree = build_regular_tree(d, depth);
  const int t0 = tree.num_vertices();
  std::vector<Edge> edges = tree.edges();
  if (tail > 0) {
    edges.emplace_back(0, t0);
    for (int i = 1; i < tail; ++i) edges.emplace_back(t0 + i - 1, t0 + i);
  }
  return Graph(t0 + tail, std::move(edges));
}

namespace {

// One configuration-model attempt; empty optional when it produced a
// self-loop or a duplicate edge.
std::optional<std::vector<Edge>> pairing_attempt(int n, int d, Rng& rng) {
  std::vector<int> stubs;
  stubs.reserve(static_cast<std::size_t>(n) * d);
  for (int v = 0; v < n; ++v) {
    for (int k = 0; k < d; ++k) stubs.push_back(v);
  }
  rng.shuffle(stubs);
  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (std::size_t i = 0; i < stubs.size(); i += 2) {
    int u = stubs[i], v = stubs[i + 1];
    if (u == v) return std::nullopt;
    if (u > v) std::swap(u, v);
    if (!seen.emplace(u, v).second) return std::nullopt;
    edges.emplace_back(u, v);
  }
  return edges;
}

}  // namespace

Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts) {
  if (n <= d || d < 1 || (static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw std::invalid_argument("random_regular: need n > d >= 1 and n*d even");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    if (auto edges = pairing_attempt(n, d, rng)) {
      return Graph(n, std::move(*edges));
    }
  }
  throw std::runtime_error("random_regular: attempt budget exhausted");
}

Graph random_regular_with_girth(int n, int d, int girth_min, std::uint64_t seed,
                                int max_attempts) {
  if (n <= d || d < 1 || (static_cast<std::int64_t>(n) * d) % 2 != 0) {
    throw std::invalid_argument("random_regular_with_girth: need n > d >= 1 and n*d even");
  }
  Rng rng(seed);
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    auto edges = pairing_attempt(n, d, rng);
    if (!edges) continue;
    Graph g(n, std::move(*edges));
    if (!is_connected(g)) continue;
    const auto gi = girth(g);
    if (gi && *gi < girth_min) continue;
    return g;
  }
  throw std::runtime_error(
      "random_regular_with_girth: attempt budget exhausted; relax girth_min or raise "
      "max_attempts");
}

CounterexampleGraph build_counterexample(const GluingPlan& plan) {
  const int m = plan.halfline_len;
  const int d = plan.degree;
  if (m < 3) throw std::invalid_argument("build_counterexample: half-line too short");
  if (plan.anchors.size() != plan.blocks.size() || plan.anchors.empty()) {
    throw std::invalid_argument("build_counterexample: need one block per anchor");
  }
  for (std::size_t i = 0; i < plan.anchors.size(); ++i) {
    const int k = plan.anchors[i];
    if (k < 1 || k + 1 >= m) throw std::invalid_argument("build_counterexample: anchor out of range");
    if (i > 0 && k <= plan.anchors[i - 1] + 1) {
      throw std::invalid_argument("build_counterexample: anchors must be separated");
    }
    const auto& blk = plan.blocks[i];
    const int bn = blk.g.num_vertices();
    if (blk.u1 < 0 || blk.u1 >= bn || blk.u2 < 0 || blk.u2 >= bn || blk.u1 == blk.u2) {
      throw std::invalid_argument("build_counterexample: bad marked vertices");
    }
    if (!is_connected(blk.g)) throw std::invalid_argument("build_counterexample: block disconnected");
    for (int v = 0; v < bn; ++v) {
      if (blk.g.degree(v) != d) {
        throw std::invalid_argument("build_counterexample: block is not degree-regular");
      }
    }
  }

  std::vector<Edge> edges;
  std::set<int> cut(plan.anchors.begin(), plan.anchors.end());
  for (int t = 0; t + 1 < m; ++t) {
    if (!cut.count(t)) edges.emplace_back(t, t + 1);
  }

  CounterexampleGraph out;
  out.degree = d;
  out.halfline_len = m;
  out.anchors = plan.anchors;
  out.frontier = m - 1;

  int offset = m;
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    const auto& blk = plan.blocks[i];
    const int k = plan.anchors[i];
    for (const auto& [a, b] : blk.g.edges()) edges.emplace_back(offset + a, offset + b);
    edges.emplace_back(k, offset + blk.u1);
    edges.emplace_back(k + 1, offset + blk.u2);
    out.blocks.push_back({blk.name, offset, blk.g.num_vertices(), offset + blk.u1,
                          offset + blk.u2, k});
    offset += blk.g.num_vertices();
  }
  out.g = Graph(offset, std::move(edges));

  // Canonical path: half-line segments bridged by the lexicographically
  // smallest geodesic of each block.
  std::vector<int>& path = out.canonical_path;
  int cursor = 0;
  for (std::size_t i = 0; i < plan.blocks.size(); ++i) {
    const int k = plan.anchors[i];
    for (int t = cursor; t <= k; ++t) path.push_back(t);
    const auto local = shortest_path(plan.blocks[i].g, plan.blocks[i].u1, plan.blocks[i].u2);
    for (int v : local) path.push_back(out.blocks[i].offset + v);
    cursor = k + 1;
  }
  for (int t = cursor; t < m; ++t) path.push_back(t);
  return out;
}

namespace {

// Incidence graph of the projective plane of order 3, built from the perfect
// difference set {0,1,3,9} mod 13. 4-regular, girth 6, 26 vertices.
Graph pg23_incidence() {
  std::vector<Edge> edges;
  const int base[4] = {0, 1, 3, 9};
  for (int line = 0; line < 13; ++line) {
    for (int b : base) edges.emplace_back((line + b) % 13, 13 + line);
  }
  return Graph(26, std::move(edges));
}

BlockSpec make_block(Graph g, const std::string& name) {
  const auto dp = diameter_pair(g);
  BlockSpec blk;
  blk.u1 = dp.u;
  blk.u2 = dp.v;
  blk.name = name;
  blk.g = std::move(g);
  return blk;
}

}  // namespace

GluingPlan default_gluing_plan(int degree, int num_blocks, int spacing) {
  if (num_blocks < 1) throw std::invalid_argument("default_gluing_plan: need at least one block");
  if (spacing < 2) throw std::invalid_argument("default_gluing_plan: spacing too small");
  GluingPlan plan;
  plan.degree = degree;
  if (degree == 3) {
    const CageKind kinds[4] = {CageKind::petersen, CageKind::heawood, CageKind::mcgee,
                               CageKind::tutte_coxeter};
    if (num_blocks > 4) {
      throw std::invalid_argument("default_gluing_plan: at most 4 cubic blocks available");
    }
    for (int i = 0; i < num_blocks; ++i) {
      const auto& info = cage_table()[static_cast<int>(kinds[i]) ];
      plan.blocks.push_back(make_block(cage_graph(kinds[i]), info.name));
    }
  } else if (degree == 4) {
    for (int i = 0; i < num_blocks; ++i) {
      plan.blocks.push_back(make_block(pg23_incidence(), "pg23-incidence"));
    }
  } else {
    for (int i = 0; i < num_blocks; ++i) {
      const int n = 2 * (degree + 3 + 2 * i);
      Graph g = random_regular_with_girth(n, degree, 4, 0xC0FFEEull + i);
      plan.blocks.push_back(make_block(std::move(g), "random-regular"));
    }
  }
  int k = spacing;
  for (int i = 0; i < num_blocks; ++i) {
    plan.anchors.push_back(k);
    k += spacing << (i + 1);
  }
  plan.halfline_len = plan.anchors.back() + spacing + 2;
  return plan;
}

}  // namespace spectra
