#include "spectra/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace spectra {

Graph::Graph(int n, std::vector<Edge> edge_list) : n_(n) {
  if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
  for (auto& [u, v] : edge_list) {
    if (u < 0 || v < 0 || u >= n || v >= n) {
      throw std::invalid_argument("Graph: edge endpoint out of range");
    }
    if (u == v) throw std::invalid_argument("Graph: self-loop");
    if (u > v) std::swap(u, v);
  }
  std::sort(edge_list.begin(), edge_list.end());
  if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end()) {
    throw std::invalid_argument("Graph: duplicate edge");
  }
  edges_ = std::move(edge_list);

  off_.assign(n_ + 1, 0);
  for (const auto& [u, v] : edges_) {
    ++off_[u + 1];
    ++off_[v + 1];
  }
  for (int i = 0; i < n_; ++i) off_[i + 1] += off_[i];
  adj_.resize(edges_.size() * 2);
  adj_edge_.resize(edges_.size() * 2);
  std::vector<int> cur(off_.begin(), off_.end() - 1);
  for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
    const auto [u, v] = edges_[e];
    adj_[cur[u]] = v;
    adj_edge_[cur[u]++] = e;
    adj_[cur[v]] = u;
    adj_edge_[cur[v]++] = e;
  }
  // Neighbor lists come out sorted because edges are sorted and, for a fixed
  // vertex, its partners appear in increasing order across the edge list.
  for (int v = 0; v < n_; ++v) {
    const auto nb = neighbors(v);
    if (!std::is_sorted(nb.begin(), nb.end())) {
      std::vector<std::pair<int, int>> tmp;
      for (std::size_t i = 0; i < nb.size(); ++i) {
        tmp.emplace_back(adj_[off_[v] + i], adj_edge_[off_[v] + i]);
      }
      std::sort(tmp.begin(), tmp.end());
      for (std::size_t i = 0; i < nb.size(); ++i) {
        adj_[off_[v] + i] = tmp[i].first;
        adj_edge_[off_[v] + i] = tmp[i].second;
      }
    }
  }
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

int Graph::edge_index(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) return -1;
  if (u > v) std::swap(u, v);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
  if (it != edges_.end() && *it == Edge{u, v}) {
    return static_cast<int>(it - edges_.begin());
  }
  return -1;
}

BfsResult bfs_limited(const Graph& g, int root, int max_dist) {
  const int n = g.num_vertices();
  if (root < 0 || root >= n) throw std::invalid_argument("bfs: root out of range");
  BfsResult r;
  r.dist.assign(n, -1);
  r.parent.assign(n, -1);
  r.dist[root] = 0;
  r.layers.push_back({root});
  std::deque<int> q{root};
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    if (max_dist >= 0 && r.dist[v] >= max_dist) continue;
    for (int u : g.neighbors(v)) {
      if (r.dist[u] >= 0) continue;
      r.dist[u] = r.dist[v] + 1;
      r.parent[u] = v;
      if (static_cast<int>(r.layers.size()) <= r.dist[u]) r.layers.emplace_back();
      r.layers[r.dist[u]].push_back(u);
      q.push_back(u);
    }
  }
  // BFS visits each layer in ascending order already (queue order follows
  // sorted adjacency), but keep the invariant explicit.
  for (auto& layer : r.layers) std::sort(layer.begin(), layer.end());
  return r;
}

BfsResult bfs(const Graph& g, int root) { return bfs_limited(g, root, -1); }

std::vector<int> ball_vertices(const Graph& g, int v, int r) {
  auto b = bfs_limited(g, v, r);
  std::vector<int> out;
  for (const auto& layer : b.layers) out.insert(out.end(), layer.begin(), layer.end());
  return out;
}

std::vector<std::vector<int>> connected_components(const Graph& g) {
  const int n = g.num_vertices();
  std::vector<char> seen(n, 0);
  std::vector<std::vector<int>> comps;
  for (int s = 0; s < n; ++s) {
    if (seen[s]) continue;
    std::vector<int> comp{s};
    seen[s] = 1;
    std::deque<int> q{s};
    while (!q.empty()) {
      const int v = q.front();
      q.pop_front();
      for (int u : g.neighbors(v)) {
        if (!seen[u]) {
          seen[u] = 1;
          comp.push_back(u);
          q.push_back(u);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;
}

bool is_connected(const Graph& g) {
  if (g.num_vertices() == 0) return true;
  return connected_components(g).size() == 1;
}

namespace {

// BFS distance from `from` to `to` with one edge id excluded.
int dist_avoiding_edge(const Graph& g, int from, int to, int banned_edge) {
  const int n = g.num_vertices();
  std::vector<int> dist(n, -1);
  dist[from] = 0;
  std::deque<int> q{from};
  while (!q.empty()) {
    const int v = q.front();
    q.pop_front();
    if (v == to) return dist[v];
    const auto nb = g.neighbors(v);
    const auto ne = g.incident_edges(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      if (ne[i] == banned_edge) continue;
      if (dist[nb[i]] < 0) {
        dist[nb[i]] = dist[v] + 1;
        q.push_back(nb[i]);
      }
    }
  }
  return -1;
}

}  // namespace

std::optional<int> girth(const Graph& g) {
  // Shortest cycle through edge e = (u,v) is dist(u,v) in G - e, plus one.
  std::optional<int> best;
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edges()[e];
    const int d = dist_avoiding_edge(g, u, v, e);
    if (d >= 0 && (!best || d + 1 < *best)) best = d + 1;
  }
  return best;
}

DiameterResult diameter_pair(const Graph& g) {
  const int n = g.num_vertices();
  if (n == 0) throw std::invalid_argument("diameter_pair: empty graph");
  DiameterResult res;
  res.diameter = -1;
  for (int s = 0; s < n; ++s) {
    const auto b = bfs(g, s);
    for (int t = 0; t < n; ++t) {
      if (b.dist[t] < 0) throw std::invalid_argument("diameter_pair: graph is disconnected");
      if (s < t && b.dist[t] > res.diameter) {
        res.diameter = b.dist[t];
        res.u = s;
        res.v = t;
      }
    }
  }
  if (res.diameter < 0) {
    res = {0, 0, 0};  // single vertex
  }
  return res;
}

std::vector<int> shortest_path(const Graph& g, int u, int v) {
  const auto from_u = bfs(g, u);
  if (v < 0 || v >= g.num_vertices() || from_u.dist[v] < 0) {
    throw std::invalid_argument("shortest_path: target unreachable");
  }
  const auto from_v = bfs(g, v);
  const int d = from_u.dist[v];
  std::vector<int> path{u};
  int cur = u;
  for (int step = 1; step <= d; ++step) {
    int next = -1;
    for (int w : g.neighbors(cur)) {
      if (from_u.dist[w] == step && from_v.dist[w] == d - step) {
        next = w;  // neighbors are sorted ascending, first hit is smallest
        break;
      }
    }
    path.push_back(next);
    cur = next;
  }
  return path;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* to_local) {
  std::vector<int> local(g.num_vertices(), -1);
  for (int i = 0; i < static_cast<int>(vertices.size()); ++i) {
    const int v = vertices[i];
    if (v < 0 || v >= g.num_vertices()) {
      throw std::invalid_argument("induced_subgraph: vertex out of range");
    }
    if (local[v] >= 0) throw std::invalid_argument("induced_subgraph: duplicate vertex");
    local[v] = i;
  }
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (local[a] >= 0 && local[b] >= 0) edges.emplace_back(local[a], local[b]);
  }
  if (to_local) *to_local = std::move(local);
  return Graph(static_cast<int>(vertices.size()), std::move(edges));
}

}  // namespace spectra
