#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spectra/eigen_sym.hpp"
#include "spectra/graph.hpp"
#include "spectra/halfline.hpp"
#include "spectra/operators.hpp"
#include "spectra/rng.hpp"
#include "spectra/tree_spherical.hpp"

using namespace spectra;

namespace {

SphericalSymbol random_symbol(int d, int levels, std::uint64_t seed) {
  Rng rng(seed);
  SphericalSymbol s;
  s.d = d;
  s.A.resize(levels);
  s.B.resize(levels + 1);
  for (double& x : s.A) x = rng.uniform(0.5, 1.5);
  for (double& x : s.B) x = rng.uniform(-1.0, 1.0);
  return s;
}

std::vector<double> sorted_block_union(const TreeExtensionDecomposition& dec) {
  std::vector<double> values;
  const auto comb = symmetric_eigen(dec.comb, dec.comb_size, false);
  values.insert(values.end(), comb.values.begin(), comb.values.end());
  for (const auto& blk : dec.tails) {
    const auto eig = tridiagonal_eigen(blk.diag, blk.off, false);
    for (std::int64_t c = 0; c < blk.multiplicity; ++c) {
      values.insert(values.end(), eig.values.begin(), eig.values.end());
    }
  }
  std::sort(values.begin(), values.end());
  return values;
}

// || (J - lambda) psi || with psi given on sites 1..len, rows taken up to
// one site past the support.
double halfline_residual(const HalfLineJacobi& j, double lambda, const std::vector<double>& psi) {
  const int len = static_cast<int>(psi.size());
  const auto val = [&](int site) { return site >= 1 && site <= len ? psi[site - 1] : 0.0; };
  double acc = 0.0;
  for (int n = 1; n <= len + 1; ++n) {
    double row = (j.b(n) - lambda) * val(n) + j.a(n) * val(n + 1);
    if (n > 1) row += j.a(n - 1) * val(n - 1);
    acc += row * row;
  }
  return std::sqrt(acc);
}

}  // namespace

TEST_CASE("sector multiplicities and the dimension identity") {
  CHECK(spherical_multiplicity(3, 1) == 1);
  CHECK(spherical_multiplicity(3, 2) == 2);
  CHECK(spherical_multiplicity(3, 3) == 3);
  CHECK(spherical_multiplicity(3, 4) == 6);  // d(d-2)(d-1)
  CHECK(spherical_multiplicity(4, 3) == 8);
  CHECK(spherical_multiplicity(2, 5) == 0);
  CHECK_THROWS_AS(spherical_multiplicity(1, 1), std::invalid_argument);

  for (int d = 3; d <= 6; ++d) {
    for (int r = 0; r <= 8; ++r) {
      std::int64_t sum = 0;
      for (int n = 1; n <= r + 1; ++n) {
        sum += spherical_multiplicity(d, n) * static_cast<std::int64_t>(r - n + 2);
      }
      CHECK(sum == regular_tree_size(d, r));
    }
  }
}

TEST_CASE("decomposition plan of the free degree-3 symbol") {
  const auto plan = decompose(free_symbol(3), 2);
  REQUIRE(plan.sectors.size() == 3);
  CHECK(plan.total_dim == 10);

  CHECK(plan.sectors[0].length == 3);
  CHECK(plan.sectors[0].multiplicity == 1);
  CHECK(plan.sectors[0].start_level == 0);
  auto [d1, o1] = plan.sectors[0].block.truncate(3);
  CHECK(o1[0] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
  CHECK(o1[1] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
  CHECK(d1[0] == 0.0);

  CHECK(plan.sectors[1].length == 2);
  CHECK(plan.sectors[1].multiplicity == 2);
  auto [d2, o2] = plan.sectors[1].block.truncate(2);
  CHECK(o2[0] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));

  CHECK(plan.sectors[2].length == 1);
  CHECK(plan.sectors[2].multiplicity == 3);

  SUBCASE("depth zero is the bare root") {
    const auto root = decompose(free_symbol(3), 0);
    REQUIRE(root.sectors.size() == 1);
    CHECK(root.sectors[0].length == 1);
    CHECK(root.total_dim == 1);
    auto [rd, ro] = root.sectors[0].block.truncate(1);
    CHECK(rd[0] == 0.0);
    CHECK(ro.empty());
  }
}

TEST_CASE("block multiset equals the dense spectrum") {
  SUBCASE("star at depth 1, closed form") {
    // B_1 of the 3-regular tree is the 4-vertex star: eigenvalues
    // -sqrt(3), 0, 0, sqrt(3).
    const auto rep = verify_equivalence(free_symbol(3), 1);
    CHECK(rep.pass);
    CHECK(rep.dense_dim == 4);
    const auto plan = decompose(free_symbol(3), 1);
    auto [diag, off] = plan.sectors[0].block.truncate(2);
    const auto eig = tridiagonal_eigen(diag, off, false);
    CHECK(eig.values[0] == doctest::Approx(-std::sqrt(3.0)).epsilon(1e-14));
    CHECK(eig.values[1] == doctest::Approx(std::sqrt(3.0)).epsilon(1e-14));
  }

  SUBCASE("degree 2 collapses to a path with known spectrum") {
    const auto rep = verify_equivalence(free_symbol(2), 3);
    CHECK(rep.pass);
    CHECK(rep.dense_dim == 7);
    // Adjacency of the 7-vertex path: 2 cos(k pi / 8).
    const auto h = spherically_symmetric_operator(free_symbol(2), 3);
    const auto dense = symmetric_eigen(dense_matrix(h), 7, false);
    for (int k = 1; k <= 7; ++k) {
      const double want = 2.0 * std::cos(k * 3.14159265358979323846 / 8.0);
      CHECK(dense.values[7 - k] == doctest::Approx(want).epsilon(1e-12));
    }
  }

  SUBCASE("depth zero is exact") {
    const auto rep = verify_equivalence(free_symbol(4), 0);
    CHECK(rep.pass);
    CHECK(rep.discrepancy == 0.0);
  }

  SUBCASE("seeded symbols") {
    for (int d : {3, 4}) {
      for (std::uint64_t seed : {11u, 12u, 13u}) {
        const auto rep = verify_equivalence(random_symbol(d, 5, seed), 4);
        CAPTURE(d);
        CAPTURE(seed);
        CHECK(rep.pass);
        CHECK(rep.discrepancy <= 1e-8);
        CHECK(rep.dense_dim == rep.block_dim);
      }
    }
  }
}

TEST_CASE("sector half-lines of eventually periodic symbols") {
  SphericalSymbol s;
  s.d = 3;
  s.A = {1.0, 0.7, 1.3};
  s.B = {0.5, -0.2, 0.1};
  s.tail_period = 2;

  SUBCASE("sites carry the symbol at level k + n - 2") {
    const auto s1 = sector_halfline(s, 1);
    CHECK(s1.a(1) == doctest::Approx(std::sqrt(3.0) * 1.0).epsilon(1e-15));
    for (int k = 2; k <= 12; ++k) {
      CHECK(s1.a(k) == doctest::Approx(std::sqrt(2.0) * s.a_at(k - 1)).epsilon(1e-15));
      CHECK(s1.b(k) == s.b_at(k - 1));
    }
    const auto s3 = sector_halfline(s, 3);
    for (int k = 1; k <= 12; ++k) {
      CHECK(s3.a(k) == doctest::Approx(std::sqrt(2.0) * s.a_at(k + 1)).epsilon(1e-15));
      CHECK(s3.b(k) == s.b_at(k + 1));
    }
  }

  SUBCASE("every sector is a tail of the first") {
    const auto s1 = sector_halfline(s, 1);
    for (int n = 2; n <= 5; ++n) {
      const auto sn = sector_halfline(s, n);
      const auto shifted = s1.tail(n - 1);
      for (int j = 1; j <= 30; ++j) {
        CHECK(sn.a(j) == shifted.a(j));
        CHECK(sn.b(j) == shifted.b(j));
      }
    }
  }

  SUBCASE("truncations agree with the decomposition blocks") {
    const auto plan = decompose(s, 5);
    for (const auto& blk : plan.sectors) {
      const auto inf = sector_halfline(s, blk.sector);
      auto [bd, bo] = blk.block.truncate(blk.length);
      auto [id2, io] = inf.truncate(blk.length);
      CHECK(bd == id2);
      CHECK(bo == io);
    }
  }

  SUBCASE("finite symbols have no infinite sectors") {
    SphericalSymbol fin = s;
    fin.tail_period.reset();
    CHECK_THROWS_AS(sector_halfline(fin, 1), std::invalid_argument);
    CHECK_THROWS_AS(sector_halfline(s, 0), std::invalid_argument);
  }
}

TEST_CASE("tree extension of a whole-line operator") {
  SUBCASE("sizes follow the ball count") {
    CHECK(tree_extension(WholeLineJacobi({1.0}, {0.0}), 3, 8).g.num_vertices() == 766);
    CHECK(tree_extension(WholeLineJacobi({1.0}, {0.0}), 4, 8).g.num_vertices() == 13121);
  }

  SUBCASE("free coefficients give constant couplings") {
    const int d = 3;
    const auto plain = tree_extension(WholeLineJacobi({1.0}, {0.0}), d, 4);
    for (double a : plain.op.a) CHECK(a == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
    for (double b : plain.op.b) CHECK(b == 0.0);
    const auto adj = tree_extension(WholeLineJacobi({std::sqrt(2.0)}, {0.0}), d, 4);
    for (double a : adj.op.a) CHECK(a == doctest::Approx(1.0).epsilon(1e-15));
  }

  SUBCASE("ray positions and meeting points") {
    const WholeLineJacobi w({1.0, 0.6}, {0.3, -0.4});
    const auto t = tree_extension(w, 3, 5);
    REQUIRE(static_cast<int>(t.ray.size()) == 6);
    for (int m = 0; m <= 5; ++m) {
      CHECK(t.position[t.ray[m]] == -m);
      CHECK(t.meet[t.ray[m]] == m);
      CHECK(t.dist[t.ray[m]] == m);
    }
    // Independent oracle for the meeting index: x leaves the ray at r_m
    // exactly when r_m is on a geodesic from the base and r_{m+1} is not.
    std::vector<BfsResult> from_ray;
    for (int m = 0; m <= 5; ++m) from_ray.push_back(bfs(t.g, t.ray[m]));
    for (int v = 0; v < t.g.num_vertices(); ++v) {
      const int m = t.meet[v];
      CHECK(t.dist[v] == m + from_ray[m].dist[v]);
      if (m < 5) CHECK(from_ray[m + 1].dist[v] == from_ray[m].dist[v] + 1);
      CHECK(t.position[v] == t.dist[v] - 2 * m);
      CHECK(t.op.b[v] == w.b(t.position[v]));
    }
  }

  SUBCASE("argument validation") {
    CHECK_THROWS_AS(tree_extension(WholeLineJacobi({1.0}, {0.0}), 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(tree_extension(WholeLineJacobi({1.0}, {0.0}), 3, -1), std::invalid_argument);
  }
}

TEST_CASE("tree extension decomposes into the comb and tail blocks") {
  SUBCASE("hand count at depth 2, degree 3") {
    const WholeLineJacobi w({1.0}, {0.0});
    const auto dec = decompose_tree_extension(w, 3, 2);
    CHECK(dec.comb_size == 6);
    REQUIRE(dec.tails.size() == 2);
    CHECK(dec.tails[0].ray_vertex == 0);
    CHECK(dec.tails[0].first_height == 1);
    CHECK(dec.tails[0].multiplicity == 1);
    CHECK(dec.tails[0].diag.size() == 2);
    CHECK(dec.tails[1].first_height == 2);
    CHECK(dec.tails[1].multiplicity == 2);
    CHECK(dec.tails[1].diag.size() == 1);
    CHECK(dec.total_dim == 10);
  }

  SUBCASE("dimension identity across degrees and depths") {
    const WholeLineJacobi w({1.0, 0.6}, {0.3, -0.4});
    for (int d : {3, 4}) {
      for (int r : {2, 4, 6, 8}) {
        CHECK(decompose_tree_extension(w, d, r).total_dim == regular_tree_size(d, r));
      }
    }
  }

  SUBCASE("block multiset equals the dense spectrum") {
    const WholeLineJacobi w({1.0, 0.6}, {0.3, -0.4});
    for (int d : {3, 4}) {
      const int r = d == 3 ? 6 : 4;
      const auto t = tree_extension(w, d, r);
      const int n = t.g.num_vertices();
      const auto dense = symmetric_eigen(dense_matrix(t.op), n, false);
      const auto blocks = sorted_block_union(decompose_tree_extension(w, d, r));
      REQUIRE(static_cast<int>(blocks.size()) == n);
      double sup = 0.0;
      for (int i = 0; i < n; ++i) sup = std::max(sup, std::fabs(blocks[i] - dense.values[i]));
      CAPTURE(d);
      CHECK(sup <= 1e-9);
    }
  }

  SUBCASE("free extension matches the spherical route") {
    // With a == sqrt(d-1) the extension is the plain adjacency operator,
    // which the level decomposition also covers: the two block systems
    // must produce the same multiset.
    const int d = 3, r = 4;
    const auto ext_blocks =
        sorted_block_union(decompose_tree_extension(WholeLineJacobi({std::sqrt(2.0)}, {0.0}), d, r));
    const auto plan = decompose(free_symbol(d), r);
    std::vector<double> lvl_blocks;
    for (const auto& blk : plan.sectors) {
      auto [diag, off] = blk.block.truncate(blk.length);
      const auto eig = tridiagonal_eigen(diag, off, false);
      for (std::int64_t c = 0; c < blk.multiplicity; ++c) {
        lvl_blocks.insert(lvl_blocks.end(), eig.values.begin(), eig.values.end());
      }
    }
    std::sort(lvl_blocks.begin(), lvl_blocks.end());
    REQUIRE(lvl_blocks.size() == ext_blocks.size());
    for (std::size_t i = 0; i < lvl_blocks.size(); ++i) {
      CHECK(ext_blocks[i] == doctest::Approx(lvl_blocks[i]).epsilon(1e-10));
    }
  }
}

TEST_CASE("branch half-lines carry the shifted symbol") {
  const WholeLineJacobi w({1.0, 0.6}, {0.3, -0.4});
  for (int m = 1; m <= 4; ++m) {
    const auto j = branch_halfline(w, m);
    for (int h = 1; h <= 20; ++h) {
      CHECK(j.a(h) == w.a(h - m));
      CHECK(j.b(h) == w.b(h - m));
    }
  }
}

TEST_CASE("branch lifts transfer residuals exactly") {
  const WholeLineJacobi w({1.0, 0.6}, {0.3, -0.4});

  SUBCASE("window eigenvectors, degree 3") {
    const auto t = tree_extension(w, 3, 8);
    const int m = 1, s = 2, len = 5;
    const auto j = branch_halfline(w, m);
    std::vector<double> diag(len), off(len - 1);
    for (int i = 0; i < len; ++i) diag[i] = j.b(s + i);
    for (int i = 0; i + 1 < len; ++i) off[i] = j.a(s + i);
    const auto eig = tridiagonal_eigen(diag, off, true);
    for (int k = 0; k < len; ++k) {
      const double lambda = eig.values[k];
      const double left = j.a(s - 1) * eig.vec(k, 0);
      const double right = j.a(s + len - 1) * eig.vec(k, len - 1);
      const double oned = std::sqrt(left * left + right * right);
      std::vector<double> g(len);
      for (int i = 0; i < len; ++i) g[i] = eig.vec(k, i);
      const auto lift = branch_lift(t, m, s, g);
      double norm2 = 0.0;
      for (double x : lift) norm2 += x * x;
      CHECK(norm2 == doctest::Approx(1.0).epsilon(1e-13));
      CHECK(vector_residual(t.op, lambda, lift) == doctest::Approx(oned).epsilon(1e-12));
    }
  }

  SUBCASE("generic amplitudes, degree 4") {
    const auto t = tree_extension(w, 4, 8);
    const int m = 2, s = 3, len = 3;
    const auto j = branch_halfline(w, m);
    Rng rng(99);
    for (int trial = 0; trial < 4; ++trial) {
      std::vector<double> g(len);
      for (double& x : g) x = rng.uniform(-1.0, 1.0);
      double gnorm = 0.0;
      for (double x : g) gnorm += x * x;
      gnorm = std::sqrt(gnorm);
      const double lambda = rng.uniform(-2.0, 2.0);
      // Zero-extend g to sites 1..s+len-1 and take the full residual.
      std::vector<double> padded(s - 1 + len, 0.0);
      for (int i = 0; i < len; ++i) padded[s - 1 + i] = g[i];
      const double oned = halfline_residual(j, lambda, padded) / gnorm;
      const auto lift = branch_lift(t, m, s, g);
      CHECK(vector_residual(t.op, lambda, lift) == doctest::Approx(oned).epsilon(1e-12));
    }
  }

  SUBCASE("argument validation") {
    const auto t = tree_extension(w, 3, 6);
    const std::vector<double> g{1.0, 0.5};
    CHECK_THROWS_AS(branch_lift(t, 0, 2, g), std::invalid_argument);
    CHECK_THROWS_AS(branch_lift(t, 1, 1, g), std::invalid_argument);
    CHECK_THROWS_AS(branch_lift(t, 3, 2, g), std::invalid_argument);  // 3+2+2 > 6
    CHECK_NOTHROW(branch_lift(t, 2, 2, g));
  }
}

TEST_CASE("window transplants onto deep half-line sites") {
  SUBCASE("delta moves to the shifted site") {
    const auto h = transplant_window({1.0}, 1, 5);
    REQUIRE(h.size() == 6);
    for (int n = 1; n <= 5; ++n) CHECK(h[n - 1] == 0.0);
    CHECK(h[5] == 1.0);
  }

  SUBCASE("support lands on sites >= 2") {
    const auto h = transplant_window({0.1, 0.2, 0.3, 0.4, 0.5}, 3, 3);
    REQUIRE(h.size() == 6);
    CHECK(h[0] == 0.0);
    for (int i = 0; i < 5; ++i) CHECK(h[i + 1] == doctest::Approx(0.1 * (i + 1)).epsilon(1e-15));
  }

  SUBCASE("residual transfers to the aligned tail") {
    const WholeLineJacobi w({1.0, 0.6}, {0.3, -0.4});
    const int half = 4, len = 2 * half - 1;
    std::vector<double> diag(len), off(len - 1);
    for (int i = 0; i < len; ++i) diag[i] = w.b(i - half + 1);
    for (int i = 0; i + 1 < len; ++i) off[i] = w.a(i - half + 1);
    const auto eig = tridiagonal_eigen(diag, off, true);
    for (int m : {half, half + 3}) {
      const auto tail = branch_halfline(w, m + 1);
      for (int k : {0, len - 1}) {
        const double lambda = eig.values[k];
        const double left = w.a(-half) * eig.vec(k, 0);
        const double right = w.a(half - 1) * eig.vec(k, len - 1);
        const double whole = std::sqrt(left * left + right * right);
        std::vector<double> g(len);
        for (int i = 0; i < len; ++i) g[i] = eig.vec(k, i);
        const auto h = transplant_window(g, half, m);
        CHECK(halfline_residual(tail, lambda, h) == doctest::Approx(whole).epsilon(1e-12));
      }
    }
  }

  SUBCASE("clipping or malformed windows are rejected") {
    CHECK_THROWS_AS(transplant_window({1.0, 2.0}, 2, 5), std::invalid_argument);
    CHECK_THROWS_AS(transplant_window({1.0, 2.0, 3.0}, 2, 1), std::invalid_argument);
    CHECK_NOTHROW(transplant_window({1.0, 2.0, 3.0}, 2, 2));
  }
}
