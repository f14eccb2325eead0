#include "spectra/canonical.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace spectra {

namespace {

bool contains_boundary(const std::vector<int>& ball, const std::vector<int>& boundary) {
  for (int b : boundary) {
    if (std::binary_search(ball.begin(), ball.end(), b)) return true;
  }
  return false;
}

// Stable 1-dimensional refinement on the induced subgraph `sub`, seeded by
// seed colors. Color ids are densely renumbered by sorted signature each
// round, so equal-structure vertices end with equal colors and the numbering
// is label-invariant.
std::vector<int> refine_colors(const Graph& sub, std::vector<int> color) {
  const int n = sub.num_vertices();
  for (int round = 0; round <= n; ++round) {
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
      std::vector<int> s{color[v]};
      for (int u : sub.neighbors(v)) s.push_back(color[u] + (n + 1));
      std::sort(s.begin() + 1, s.end());
      sig[v] = {std::move(s), v};
    }
    std::map<std::vector<int>, int> ids;
    for (const auto& [s, v] : sig) ids.emplace(s, 0);
    int next = 0;
    for (auto& [s, id] : ids) id = next++;
    std::vector<int> fresh(n);
    for (const auto& [s, v] : sig) fresh[v] = ids[s];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

}  // namespace

RootedBall coherent_enumeration(const Graph& g, int center, int radius,
                                const std::vector<int>& boundary) {
  if (center < 0 || center >= g.num_vertices()) {
    throw std::invalid_argument("coherent_enumeration: center out of range");
  }
  if (radius < 0) throw std::invalid_argument("coherent_enumeration: negative radius");
  const auto b = bfs_limited(g, center, radius);

  RootedBall out;
  out.center = center;
  out.radius = radius;
  out.order.push_back(center);
  out.layer.push_back(0);
  out.layer_offsets = {0, 1};

  std::vector<int> position(g.num_vertices(), -1);
  position[center] = 0;

  std::vector<int> members{center};  // sorted ids of B_l as it grows
  for (int l = 1; l <= radius && l < static_cast<int>(b.layers.size()); ++l) {
    const auto& fresh = b.layers[l];
    members.insert(members.end(), fresh.begin(), fresh.end());
    std::sort(members.begin(), members.end());
    std::vector<int> to_local;
    const Graph sub = induced_subgraph(g, members, &to_local);
    std::vector<int> seed(sub.num_vertices());
    for (std::size_t i = 0; i < members.size(); ++i) seed[i] = b.dist[members[i]];
    const auto color = refine_colors(sub, std::move(seed));

    struct Key {
      int color;
      std::vector<int> parents;
      int id;
    };
    std::vector<Key> keys;
    for (int v : fresh) {
      Key k{color[to_local[v]], {}, v};
      for (int u : g.neighbors(v)) {
        if (position[u] >= 0 && b.dist[u] == l - 1) k.parents.push_back(position[u]);
      }
      std::sort(k.parents.begin(), k.parents.end());
      keys.push_back(std::move(k));
    }
    std::sort(keys.begin(), keys.end(), [](const Key& a, const Key& b2) {
      if (a.color != b2.color) return a.color < b2.color;
      if (a.parents != b2.parents) return a.parents < b2.parents;
      return a.id < b2.id;
    });
    for (const auto& k : keys) {
      position[k.id] = static_cast<int>(out.order.size());
      out.order.push_back(k.id);
      out.layer.push_back(l);
    }
    out.layer_offsets.push_back(static_cast<int>(out.order.size()));
  }
  while (static_cast<int>(out.layer_offsets.size()) < radius + 2) {
    out.layer_offsets.push_back(static_cast<int>(out.order.size()));
  }
  out.shape = induced_subgraph(g, out.order, nullptr);
  std::vector<int> sorted = out.order;
  std::sort(sorted.begin(), sorted.end());
  out.clipped = contains_boundary(sorted, boundary);
  return out;
}

namespace {

struct LocalBall {
  std::vector<int> ids;   // sorted graph ids
  std::vector<int> dist;  // per local vertex
  Graph sub;
};

LocalBall local_ball(const Graph& g, int center, int radius) {
  const auto b = bfs_limited(g, center, radius);
  LocalBall lb;
  for (int v = 0; v < g.num_vertices(); ++v) {
    if (b.dist[v] >= 0) lb.ids.push_back(v);
  }
  std::vector<int> to_local;
  lb.sub = induced_subgraph(g, lb.ids, &to_local);
  lb.dist.resize(lb.ids.size());
  for (std::size_t i = 0; i < lb.ids.size(); ++i) lb.dist[i] = b.dist[lb.ids[i]];
  return lb;
}

// ---- rooted tree canonicalization ----

void subtree_code(const Graph& t, int v, int parent, std::vector<std::string>& code) {
  std::vector<std::string> kids;
  for (int u : t.neighbors(v)) {
    if (u == parent) continue;
    subtree_code(t, u, v, code);
    kids.push_back(code[u]);
  }
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  s += ")";
  code[v] = std::move(s);
}

// Canonical layer-major emission: children of each placed vertex in
// (subtree code, local id) order. Equal codes mean automorphic subtrees, so
// the resulting position adjacency is independent of the id tie-break.
std::vector<int> tree_canonical_order(const Graph& t, int root,
                                      const std::vector<std::string>& code) {
  std::vector<int> order{root};
  std::vector<int> parent(t.num_vertices(), -1);
  parent[root] = root;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const int v = order[head];
    std::vector<std::pair<std::string, int>> kids;
    for (int u : t.neighbors(v)) {
      if (parent[u] >= 0) continue;
      kids.emplace_back(code[u], u);
    }
    std::sort(kids.begin(), kids.end());
    for (const auto& [c, u] : kids) {
      parent[u] = v;
      order.push_back(u);
    }
  }
  return order;
}

// ---- cyclic balls: individualization-refinement ----

std::string serialize(const Graph& sub, const std::vector<int>& dist,
                      const std::vector<int>& order) {
  const int n = sub.num_vertices();
  std::vector<int> pos(n);
  for (int p = 0; p < n; ++p) pos[order[p]] = p;
  std::string s = "G" + std::to_string(n);
  for (int p = 0; p < n; ++p) {
    const int v = order[p];
    s += "|" + std::to_string(dist[v]) + ":";
    std::vector<int> nb;
    for (int u : sub.neighbors(v)) nb.push_back(pos[u]);
    std::sort(nb.begin(), nb.end());
    for (int q : nb) s += std::to_string(q) + ",";
  }
  return s;
}

struct IrSearch {
  const Graph& sub;
  const std::vector<int>& dist;
  std::string best_cert;
  std::vector<int> best_order;
  bool have_best = false;

  void visit(std::vector<int> color) {
    color = refine_colors(sub, std::move(color));
    const int n = sub.num_vertices();
    std::vector<std::vector<int>> cells(n);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    int split = -1;
    for (int c = 0; c < n; ++c) {
      if (cells[c].size() > 1) {
        split = c;
        break;
      }
    }
    if (split < 0) {
      std::vector<int> order(n);
      for (int v = 0; v < n; ++v) order[color[v]] = v;
      std::string cert = serialize(sub, dist, order);
      if (!have_best || cert < best_cert) {
        best_cert = std::move(cert);
        best_order = std::move(order);
        have_best = true;
      }
      return;
    }
    for (int u : cells[split]) {
      std::vector<int> next(n);
      for (int v = 0; v < n; ++v) {
        next[v] = 2 * color[v] + ((color[v] == split && v != u) ? 1 : 0);
      }
      visit(std::move(next));
    }
  }
};

}  // namespace

BallCode ball_code(const Graph& g, int center, int radius,
                   const std::vector<int>& boundary) {
  if (center < 0 || center >= g.num_vertices()) {
    throw std::invalid_argument("ball_code: center out of range");
  }
  if (radius < 0) throw std::invalid_argument("ball_code: negative radius");
  const LocalBall lb = local_ball(g, center, radius);
  const int n = lb.sub.num_vertices();
  const int local_root =
      static_cast<int>(std::lower_bound(lb.ids.begin(), lb.ids.end(), center) - lb.ids.begin());

  std::vector<int> local_order;
  std::string cert;
  if (lb.sub.num_edges() == n - 1) {
    std::vector<std::string> code(n);
    subtree_code(lb.sub, local_root, -1, code);
    local_order = tree_canonical_order(lb.sub, local_root, code);
    cert = "T" + code[local_root];
  } else {
    IrSearch search{lb.sub, lb.dist, {}, {}, false};
    std::vector<int> seed = lb.dist;
    search.visit(std::move(seed));
    local_order = std::move(search.best_order);
    cert = std::move(search.best_cert);
  }

  BallCode out;
  out.code = std::move(cert);
  RootedBall& ball = out.ball;
  ball.center = center;
  ball.radius = radius;
  for (int v : local_order) {
    ball.order.push_back(lb.ids[v]);
    ball.layer.push_back(lb.dist[v]);
  }
  ball.layer_offsets.assign(1, 0);
  for (int r = 0; r <= radius; ++r) {
    int count = 0;
    for (int l : ball.layer) {
      if (l <= r) ++count;
    }
    ball.layer_offsets.push_back(count);
  }
  ball.shape = induced_subgraph(g, ball.order, nullptr);
  ball.clipped = contains_boundary(lb.ids, boundary);
  return out;
}

}  // namespace spectra
