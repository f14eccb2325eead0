#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace spectra {

using Edge = std::pair<int, int>;

// Simple undirected graph, immutable after construction. Edges are stored
// with u < v in lexicographic order; self-loops and duplicates are rejected.
class Graph {
 public:
  Graph() = default;
  Graph(int n, std::vector<Edge> edge_list);

  int num_vertices() const { return n_; }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }

  std::span<const int> neighbors(int v) const {
    return {adj_.data() + off_[v], adj_.data() + off_[v + 1]};
  }
  // Edge ids parallel to neighbors(v).
  std::span<const int> incident_edges(int v) const {
    return {adj_edge_.data() + off_[v], adj_edge_.data() + off_[v + 1]};
  }
  int degree(int v) const { return off_[v + 1] - off_[v]; }
  int max_degree() const;
  bool has_edge(int u, int v) const { return edge_index(u, v) >= 0; }
  int edge_index(int u, int v) const;  // -1 when absent

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<int> off_, adj_, adj_edge_;
};

struct BfsResult {
  std::vector<int> dist;                 // -1 for unreachable vertices
  std::vector<int> parent;               // -1 for the root and unreachable
  std::vector<std::vector<int>> layers;  // layers[r]: vertices at distance r, ascending
};

BfsResult bfs(const Graph& g, int root);
BfsResult bfs_limited(const Graph& g, int root, int max_dist);

// Vertices of the closed ball B_r(v), ordered by (distance, id).
std::vector<int> ball_vertices(const Graph& g, int v, int r);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

struct DiameterResult {
  int u = -1, v = -1;
  int diameter = 0;
};
// Throws on disconnected input. Returns the lexicographically smallest pair
// among those realizing the diameter.
DiameterResult diameter_pair(const Graph& g);

// Lexicographically smallest geodesic from u to v (inclusive). Throws when v
// is unreachable.
std::vector<int> shortest_path(const Graph& g, int u, int v);

// Induced subgraph on the given vertices (need not be sorted; duplicates are
// rejected). Vertex i of the result corresponds to vertices[i]; if to_local
// is non-null it receives the inverse map (-1 for vertices outside).
Graph induced_subgraph(const Graph& g, const std::vector<int>& vertices,
                       std::vector<int>* to_local = nullptr);

// ---- builders ----

Graph build_half_line(int m);     // path on 0..m-1
Graph build_line_segment(int m);  // same shape; separate name for intent

// Rooted (d-1)-ary tree with root degree d, vertices in breadth-first order,
// root 0, levels 0..depth.
Graph build_regular_tree(int d, int depth);

// Level of each vertex of build_regular_tree(d, depth).
std::vector<int> tree_levels(int d, int depth);

// Number of vertices of build_regular_tree(d, depth).
std::int64_t regular_tree_size(int d, int depth);

// Tree as above with a pendant half-line of `tail` vertices attached to the
// root, making the root degree d+1. Tree vertices keep their ids; tail
// vertices follow in order of distance from the root.
Graph build_glued_tree(int d, int depth, int tail);

// Random d-regular graph via the configuration model with restarts.
Graph random_regular(int n, int d, std::uint64_t seed, int max_attempts = 50000);
Graph random_regular_with_girth(int n, int d, int girth_min, std::uint64_t seed,
                                int max_attempts = 50000);

// ---- cages ----

enum class CageKind { k4, petersen, heawood, mcgee, tutte_coxeter };

struct CageInfo {
  CageKind kind;
  std::string name;
  int n;
  int girth;
  int diameter;
};

const std::vector<CageInfo>& cage_table();
Graph cage_graph(CageKind kind);
std::optional<CageKind> cage_by_name(const std::string& name);

// Cycle 0..n-1 plus chords i -- (i + pattern[i % pattern.size()]) mod n.
Graph lcf_graph(int n, const std::vector<int>& pattern);

// ---- counterexample construction ----

struct BlockSpec {
  Graph g;
  int u1 = 0, u2 = 0;  // marked vertices used for gluing
  std::string name;
};

struct GluingPlan {
  int degree = 3;
  int halfline_len = 0;
  std::vector<int> anchors;      // strictly increasing, anchors[i]+1 < halfline_len
  std::vector<BlockSpec> blocks;  // one per anchor
};

struct PlacedBlock {
  std::string name;
  int offset = 0;  // first vertex id of the block in the glued graph
  int size = 0;
  int u1 = 0, u2 = 0;  // global ids of the marked vertices
  int anchor = 0;      // k_i; the block bridges k_i and k_i+1
};

// Half-line 0..m-1 with the edge (k_i, k_i+1) removed for each anchor and a
// block bridged in its place: u1 ~ k_i, u2 ~ k_i+1.
struct CounterexampleGraph {
  Graph g;
  int degree = 3;
  int halfline_len = 0;
  std::vector<int> anchors;
  std::vector<PlacedBlock> blocks;
  std::vector<int> canonical_path;  // geodesic 0 .. m-1 through every block
  int frontier = 0;                 // last half-line vertex, m-1
};

CounterexampleGraph build_counterexample(const GluingPlan& plan);

// Default plan: blocks from the cage table starting at the Petersen graph
// for degree 3 (num_blocks <= 4); repeated incidence-cage blocks for degree
// 4; random regular blocks otherwise. Anchor gaps double: k_1 = spacing,
// k_{i+1} - k_i = 2^i * spacing.
GluingPlan default_gluing_plan(int degree, int num_blocks, int spacing = 8);

}  // namespace spectra
