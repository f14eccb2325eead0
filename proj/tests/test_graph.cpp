#include <doctest.h>

#include <algorithm>
#include <set>

#include "spectra/graph.hpp"

using namespace spectra;

namespace {

// Independent girth oracle: BFS from every root; each non-tree edge (u,v)
// closes a walk of length dist[u]+dist[v]+1, which never undershoots the
// girth and achieves it for roots on a shortest cycle.
std::optional<int> girth_oracle(const Graph& g) {
  std::optional<int> best;
  for (int root = 0; root < g.num_vertices(); ++root) {
    const auto b = bfs(g, root);
    for (const auto& [u, v] : g.edges()) {
      if (b.dist[u] < 0 || b.dist[v] < 0) continue;
      if (b.parent[u] == v || b.parent[v] == u) continue;
      const int len = b.dist[u] + b.dist[v] + 1;
      if (!best || len < *best) best = len;
    }
  }
  return best;
}

}  // namespace

TEST_CASE("graph construction validates input") {
  CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
  Graph g(4, {{2, 1}, {0, 1}});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}});
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 0);
  CHECK(g.edge_index(2, 1) == 1);
  CHECK(g.edge_index(0, 2) == -1);
}

TEST_CASE("bfs layers and limits") {
  Graph g = build_half_line(6);
  const auto b = bfs(g, 2);
  CHECK(b.dist == std::vector<int>{2, 1, 0, 1, 2, 3});
  CHECK(b.layers[1] == std::vector<int>{1, 3});
  const auto lim = bfs_limited(g, 2, 1);
  CHECK(lim.dist[4] == -1);
  CHECK(ball_vertices(g, 2, 1) == std::vector<int>{2, 1, 3});
}

TEST_CASE("components and connectivity") {
  Graph g(5, {{0, 1}, {3, 4}});
  const auto comps = connected_components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2});
  CHECK(!is_connected(g));
  CHECK(is_connected(build_half_line(4)));
}

TEST_CASE("girth matches the BFS oracle") {
  CHECK(!girth(build_half_line(8)).has_value());
  for (const auto& info : cage_table()) {
    const Graph g = cage_graph(info.kind);
    CHECK(girth(g) == girth_oracle(g));
  }
  const Graph rr = random_regular(24, 3, 42);
  CHECK(girth(rr) == girth_oracle(rr));
  const Graph cyc = lcf_graph(12, {0 + 6});  // C12 with long chords
  CHECK(girth(cyc) == girth_oracle(cyc));
}

TEST_CASE("cage invariants: order, regularity, girth, diameter") {
  for (const auto& info : cage_table()) {
    const Graph g = cage_graph(info.kind);
    CHECK(g.num_vertices() == info.n);
    CHECK(is_connected(g));
    for (int v = 0; v < g.num_vertices(); ++v) CHECK(g.degree(v) == 3);
    CHECK(girth(g) == std::optional<int>(info.girth));
    CHECK(diameter_pair(g).diameter == info.diameter);
  }
}

TEST_CASE("lcf chord spot checks") {
  const Graph h = cage_graph(CageKind::heawood);
  for (Edge e : {Edge{0, 5}, Edge{1, 10}, Edge{2, 7}, Edge{3, 12}}) {
    CHECK(h.has_edge(e.first, e.second));
  }
  const Graph m = cage_graph(CageKind::mcgee);
  for (Edge e : {Edge{0, 12}, Edge{1, 8}, Edge{2, 19}, Edge{5, 22}}) {
    CHECK(m.has_edge(e.first, e.second));
  }
  const Graph t = cage_graph(CageKind::tutte_coxeter);
  for (Edge e : {Edge{0, 17}, Edge{2, 9}, Edge{5, 18}, Edge{4, 13}}) {
    CHECK(t.has_edge(e.first, e.second));
  }
}

TEST_CASE("regular tree structure") {
  CHECK(regular_tree_size(3, 2) == 10);
  CHECK(regular_tree_size(4, 8) == 13121);
  const Graph t = build_regular_tree(3, 3);
  CHECK(t.num_vertices() == 22);
  CHECK(t.degree(0) == 3);
  const auto levels = tree_levels(3, 3);
  REQUIRE(static_cast<int>(levels.size()) == t.num_vertices());
  const auto b = bfs(t, 0);
  for (int v = 0; v < t.num_vertices(); ++v) {
    CHECK(b.dist[v] == levels[v]);
    if (levels[v] < 3) {
      CHECK(t.degree(v) == 3);
    } else {
      CHECK(t.degree(v) == 1);
    }
  }
}

TEST_CASE("glued tree adds a pendant half-line at the root") {
  const Graph g = build_glued_tree(3, 2, 5);
  CHECK(g.num_vertices() == 10 + 5);
  CHECK(g.degree(0) == 4);
  CHECK(g.degree(10) == 2);
  CHECK(g.degree(14) == 1);
  const auto b = bfs(g, 0);
  CHECK(b.dist[14] == 5);
}

TEST_CASE("random regular graphs are regular and reproducible") {
  const Graph a = random_regular(20, 3, 7);
  const Graph b = random_regular(20, 3, 7);
  CHECK(a == b);
  for (int v = 0; v < a.num_vertices(); ++v) CHECK(a.degree(v) == 3);
  const Graph c = random_regular_with_girth(30, 3, 6, 11);
  CHECK(is_connected(c));
  REQUIRE(girth(c).has_value());
  CHECK(*girth(c) >= 6);
  CHECK_THROWS_AS(random_regular(4, 5, 1), std::invalid_argument);
}

TEST_CASE("shortest path is the lexicographically smallest geodesic") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(shortest_path(c4, 0, 2) == std::vector<int>{0, 1, 2});
  Graph p = cage_graph(CageKind::petersen);
  const auto sp = shortest_path(p, 0, 7);
  CHECK(static_cast<int>(sp.size()) == bfs(p, 0).dist[7] + 1);
  for (std::size_t i = 0; i + 1 < sp.size(); ++i) CHECK(p.has_edge(sp[i], sp[i + 1]));
}

TEST_CASE("diameter pair on a path") {
  const auto dp = diameter_pair(build_half_line(5));
  CHECK(dp.diameter == 4);
  CHECK(dp.u == 0);
  CHECK(dp.v == 4);
  Graph g(4, {{0, 1}, {2, 3}});
  CHECK_THROWS_AS(diameter_pair(g), std::invalid_argument);
}

TEST_CASE("induced subgraph keeps declared vertex order") {
  Graph g = cage_graph(CageKind::petersen);
  std::vector<int> verts{0, 1, 5, 6};
  std::vector<int> to_local;
  const Graph s = induced_subgraph(g, verts, &to_local);
  CHECK(s.num_vertices() == 4);
  CHECK(s.has_edge(0, 1));  // 0 -- 1
  CHECK(s.has_edge(0, 2));  // 0 -- 5
  CHECK(!s.has_edge(1, 2));
  CHECK(to_local[5] == 2);
  CHECK(to_local[9] == -1);
}

TEST_CASE("counterexample graph: structure and distance law") {
  const auto plan = default_gluing_plan(3, 4, 8);
  const auto cx = build_counterexample(plan);
  const Graph& g = cx.g;

  CHECK(cx.anchors == std::vector<int>{8, 24, 56, 120});
  CHECK(cx.halfline_len == 130);
  CHECK(g.num_vertices() == 130 + 10 + 14 + 24 + 30);

  // Cut edges are gone; blocks bridge them through the marked vertices.
  for (const auto& blk : cx.blocks) {
    CHECK(!g.has_edge(blk.anchor, blk.anchor + 1));
    CHECK(g.has_edge(blk.anchor, blk.u1));
    CHECK(g.has_edge(blk.anchor + 1, blk.u2));
    CHECK(g.degree(blk.u1) == 4);
    CHECK(g.degree(blk.u2) == 4);
    CHECK(g.degree(blk.anchor) == 2);
    CHECK(g.degree(blk.anchor + 1) == 2);
    for (int v = blk.offset; v < blk.offset + blk.size; ++v) {
      if (v != blk.u1 && v != blk.u2) CHECK(g.degree(v) == 3);
    }
  }
  CHECK(g.degree(0) == 1);
  CHECK(g.degree(cx.frontier) == 1);

  // The canonical path is a geodesic from 0: dist(0, path[t]) == t.
  const auto b = bfs(g, 0);
  for (int t = 0; t < static_cast<int>(cx.canonical_path.size()); ++t) {
    CHECK(b.dist[cx.canonical_path[t]] == t);
  }
  for (std::size_t i = 0; i + 1 < cx.canonical_path.size(); ++i) {
    CHECK(g.has_edge(cx.canonical_path[i], cx.canonical_path[i + 1]));
  }
  CHECK(cx.canonical_path.front() == 0);
  CHECK(cx.canonical_path.back() == cx.frontier);

  // Every block vertex is reached through its first marked vertex.
  for (const auto& blk : cx.blocks) {
    const int base = b.dist[blk.anchor];
    for (int v = blk.offset; v < blk.offset + blk.size; ++v) {
      int local_u1 = blk.u1 - blk.offset;
      const Graph& bg = plan.blocks[&blk - cx.blocks.data()].g;
      const auto bb = bfs(bg, local_u1);
      CHECK(b.dist[v] == base + 1 + bb.dist[v - blk.offset]);
    }
  }
}

TEST_CASE("counterexample validation") {
  GluingPlan plan = default_gluing_plan(3, 2, 8);
  plan.anchors[1] = plan.anchors[0] + 1;
  CHECK_THROWS_AS(build_counterexample(plan), std::invalid_argument);
  CHECK_THROWS_AS(default_gluing_plan(3, 5, 8), std::invalid_argument);
}

TEST_CASE("degree-4 plan uses the incidence blocks") {
  const auto plan = default_gluing_plan(4, 2, 8);
  const auto cx = build_counterexample(plan);
  for (const auto& blk : cx.blocks) {
    CHECK(blk.size == 26);
    CHECK(cx.g.degree(blk.u1) == 5);
  }
  const auto gi = girth(plan.blocks[0].g);
  REQUIRE(gi.has_value());
  CHECK(*gi == 6);
}
