#include "spectra/tree_spherical.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spectra/eigen_sym.hpp"

namespace spectra {

std::int64_t spherical_multiplicity(int d, int n) {
  if (d < 2 || n < 1) throw std::invalid_argument("spherical_multiplicity: bad parameters");
  if (n == 1) return 1;
  if (n == 2) return d - 1;
  std::int64_t m = static_cast<std::int64_t>(d) * (d - 2);
  for (int i = 0; i < n - 3; ++i) m *= d - 1;
  return m;
}

DecompositionPlan decompose(const SphericalSymbol& s, int depth) {
  s.validate();
  if (depth < 0) throw std::invalid_argument("decompose: negative depth");
  DecompositionPlan plan;
  plan.d = s.d;
  plan.depth = depth;
  const double root_coupling = std::sqrt(static_cast<double>(s.d));
  const double inner_coupling = std::sqrt(static_cast<double>(s.d - 1));
  for (int n = 1; n <= depth + 1; ++n) {
    const std::int64_t mult = spherical_multiplicity(s.d, n);
    if (mult == 0) continue;
    const int len = depth - n + 2;
    std::vector<double> diag(len), off(len - 1);
    for (int k = 1; k <= len; ++k) diag[k - 1] = s.b_at(k + n - 2);
    for (int k = 1; k < len; ++k) {
      const double scale = (n == 1 && k == 1) ? root_coupling : inner_coupling;
      off[k - 1] = scale * s.a_at(k + n - 2);
    }
    SectorBlock blk;
    blk.sector = n;
    blk.start_level = n - 1;
    blk.length = len;
    blk.multiplicity = mult;
    blk.block = HalfLineJacobi::finite(std::move(off), std::move(diag));
    plan.total_dim += mult * len;
    plan.sectors.push_back(std::move(blk));
  }
  return plan;
}

HalfLineJacobi sector_halfline(const SphericalSymbol& s, int n) {
  s.validate();
  if (!s.tail_period)
    throw std::invalid_argument("sector_halfline: symbol must be eventually periodic");
  if (n < 1) throw std::invalid_argument("sector_halfline: sectors are 1-based");
  const int p = *s.tail_period;
  const int cover = std::max(static_cast<int>(s.A.size()), static_cast<int>(s.B.size()));
  const int head = std::max(1, cover - n + 2);
  const double root_coupling = std::sqrt(static_cast<double>(s.d));
  const double inner_coupling = std::sqrt(static_cast<double>(s.d - 1));
  std::vector<double> a_head(head), b_head(head), a_per(p), b_per(p);
  for (int k = 1; k <= head; ++k) {
    const double scale = (n == 1 && k == 1) ? root_coupling : inner_coupling;
    a_head[k - 1] = scale * s.a_at(k + n - 2);
    b_head[k - 1] = s.b_at(k + n - 2);
  }
  for (int i = 0; i < p; ++i) {
    a_per[i] = inner_coupling * s.a_at(head + n - 1 + i);
    b_per[i] = s.b_at(head + n - 1 + i);
  }
  return HalfLineJacobi::eventually_periodic(std::move(a_head), std::move(b_head),
                                             std::move(a_per), std::move(b_per));
}

EquivalenceReport verify_equivalence(const SphericalSymbol& s, int depth, double tol) {
  const DecompositionPlan plan = decompose(s, depth);
  const JacobiOperator h = spherically_symmetric_operator(s, depth);
  EquivalenceReport rep;
  rep.dense_dim = h.g.num_vertices();
  rep.block_dim = plan.total_dim;

  const auto dense = symmetric_eigen(dense_matrix(h), h.g.num_vertices(), false);
  std::vector<double> block_values;
  block_values.reserve(static_cast<std::size_t>(plan.total_dim));
  for (const auto& blk : plan.sectors) {
    auto [diag, off] = blk.block.truncate(blk.length);
    const auto eig = tridiagonal_eigen(diag, off, false);
    for (std::int64_t c = 0; c < blk.multiplicity; ++c) {
      block_values.insert(block_values.end(), eig.values.begin(), eig.values.end());
    }
  }
  std::sort(block_values.begin(), block_values.end());

  if (rep.dense_dim != rep.block_dim) {
    rep.discrepancy = std::numeric_limits<double>::infinity();
    rep.pass = false;
    return rep;
  }
  double sup = 0.0;
  for (std::size_t i = 0; i < block_values.size(); ++i) {
    sup = std::max(sup, std::fabs(block_values[i] - dense.values[i]));
  }
  rep.discrepancy = sup;
  rep.pass = sup <= tol;
  return rep;
}

// ---- whole-line operators planted along a ray ----

TreeExtension tree_extension(const WholeLineJacobi& w, int d, int depth) {
  if (d < 3) throw std::invalid_argument("tree_extension: need d >= 3");
  if (depth < 0) throw std::invalid_argument("tree_extension: negative depth");
  if (regular_tree_size(d, depth) > (1 << 24))
    throw std::invalid_argument("tree_extension: tree too large");

  TreeExtension t;
  t.d = d;
  t.depth = depth;
  t.ray.assign(depth + 1, 0);

  std::vector<Edge> edges;
  std::vector<int> parent{-1};
  t.dist = {0};
  int next = 1;
  for (int v = 0; v < static_cast<int>(t.dist.size()); ++v) {
    if (t.dist[v] == depth) continue;
    const int kids = v == 0 ? d : d - 1;
    const bool on_ray = t.ray[t.dist[v]] == v;
    for (int c = 0; c < kids; ++c) {
      edges.push_back({v, next});
      t.dist.push_back(t.dist[v] + 1);
      parent.push_back(v);
      if (on_ray && c == 0) t.ray[t.dist[v] + 1] = next;
      ++next;
    }
  }

  const int n = next;
  std::vector<int> ray_pos(n, -1);
  for (int m = 0; m <= depth; ++m) ray_pos[t.ray[m]] = m;
  t.meet.assign(n, 0);
  for (int v = 1; v < n; ++v) {
    t.meet[v] = ray_pos[v] >= 0 ? ray_pos[v] : t.meet[parent[v]];
  }
  t.position.resize(n);
  for (int v = 0; v < n; ++v) t.position[v] = t.dist[v] - 2 * t.meet[v];

  Graph g(n, std::move(edges));
  const double scale = 1.0 / std::sqrt(static_cast<double>(d - 1));
  std::vector<double> a(g.num_edges()), b(n);
  for (int e = 0; e < g.num_edges(); ++e) {
    const auto [u, v] = g.edges()[e];
    a[e] = scale * w.a(std::min(t.position[u], t.position[v]));
  }
  for (int v = 0; v < n; ++v) b[v] = w.b(t.position[v]);
  t.op = make_jacobi(g, std::move(a), std::move(b));
  t.g = std::move(g);
  return t;
}

HalfLineJacobi branch_halfline(const WholeLineJacobi& w, int m) {
  const int p = w.period();
  std::vector<double> a_per(p), b_per(p);
  for (int i = 0; i < p; ++i) {
    a_per[i] = w.a(2 - m + i);
    b_per[i] = w.b(2 - m + i);
  }
  return HalfLineJacobi::eventually_periodic({w.a(1 - m)}, {w.b(1 - m)}, std::move(a_per),
                                             std::move(b_per));
}

TreeExtensionDecomposition decompose_tree_extension(const WholeLineJacobi& w, int d, int depth) {
  if (d < 3) throw std::invalid_argument("decompose_tree_extension: need d >= 3");
  if (depth < 0) throw std::invalid_argument("decompose_tree_extension: negative depth");
  const int r = depth;
  const double scale = 1.0 / std::sqrt(static_cast<double>(d - 1));

  TreeExtensionDecomposition dec;
  dec.comb_size = (r + 1) + r * (r + 1) / 2;
  dec.comb.assign(static_cast<std::size_t>(dec.comb_size) * dec.comb_size, 0.0);
  const auto at = [&](int i, int j) -> double& {
    return dec.comb[static_cast<std::size_t>(i) * dec.comb_size + j];
  };
  // Ray vertex m is comb index m; tooth site (m, h) follows in row-major
  // order of m with h = 1..r-m.
  const auto tooth = [&](int m, int h) {
    return (r + 1) + m * r - m * (m - 1) / 2 + (h - 1);
  };
  const auto branch_children = [&](int m) { return m == 0 ? d - 1 : d - 2; };

  for (int m = 0; m <= r; ++m) at(m, m) = w.b(-m);
  for (int m = 0; m + 1 <= r; ++m) {
    const double c = scale * w.a(-m - 1);
    at(m, m + 1) = c;
    at(m + 1, m) = c;
  }
  for (int m = 0; m < r; ++m) {
    const double root = std::sqrt(static_cast<double>(branch_children(m))) * scale * w.a(-m);
    at(m, tooth(m, 1)) = root;
    at(tooth(m, 1), m) = root;
    for (int h = 1; h <= r - m; ++h) {
      at(tooth(m, h), tooth(m, h)) = w.b(h - m);
      if (h + 1 <= r - m) {
        const double c = w.a(h - m);
        at(tooth(m, h), tooth(m, h + 1)) = c;
        at(tooth(m, h + 1), tooth(m, h)) = c;
      }
    }
  }
  dec.total_dim = dec.comb_size;

  const auto push_tail = [&](int m, int first_height, std::int64_t mult) {
    if (mult == 0) return;
    TailBlock blk;
    blk.ray_vertex = m;
    blk.first_height = first_height;
    blk.multiplicity = mult;
    const int len = r - m - first_height + 1;
    blk.diag.resize(len);
    blk.off.resize(len - 1);
    for (int h = first_height; h <= r - m; ++h) {
      blk.diag[h - first_height] = w.b(h - m);
      if (h + 1 <= r - m) blk.off[h - first_height] = w.a(h - m);
    }
    dec.total_dim += mult * len;
    dec.tails.push_back(std::move(blk));
  };

  for (int m = 0; m < r; ++m) {
    push_tail(m, 1, branch_children(m) - 1);
    std::int64_t at_height = branch_children(m);
    for (int h0 = 1; h0 <= r - m - 1; ++h0) {
      push_tail(m, h0 + 1, at_height * (d - 2));
      at_height *= d - 1;
    }
  }

  if (dec.total_dim != regular_tree_size(d, depth)) {
    throw std::logic_error("decompose_tree_extension: dimension bookkeeping failed");
  }
  return dec;
}

std::vector<double> branch_lift(const TreeExtension& t, int m, int s,
                                const std::vector<double>& g) {
  if (m < 1 || m >= t.depth) throw std::invalid_argument("branch_lift: ray vertex out of range");
  if (s < 2) throw std::invalid_argument("branch_lift: support must start at height >= 2");
  if (g.empty()) throw std::invalid_argument("branch_lift: empty amplitude");
  if (m + s + static_cast<int>(g.size()) > t.depth) {
    throw std::invalid_argument("branch_lift: support would reach the truncation boundary");
  }
  const int n = t.g.num_vertices();
  std::vector<double> h(n, 0.0);
  double norm2 = 0.0;
  for (int v = 0; v < n; ++v) {
    if (t.meet[v] != m) continue;
    const int height = t.dist[v] - m;
    if (height < s || height >= s + static_cast<int>(g.size())) continue;
    h[v] = g[height - s] * std::pow(static_cast<double>(t.d - 1), -0.5 * height);
    norm2 += h[v] * h[v];
  }
  if (!(norm2 > 0.0)) throw std::invalid_argument("branch_lift: amplitude vanishes");
  const double inv = 1.0 / std::sqrt(norm2);
  for (double& x : h) x *= inv;
  return h;
}

std::vector<double> transplant_window(const std::vector<double>& g, int half_width, int m) {
  if (half_width < 1) throw std::invalid_argument("transplant_window: bad window radius");
  if (g.size() != static_cast<std::size_t>(2 * half_width - 1)) {
    throw std::invalid_argument("transplant_window: amplitude must fill the open window");
  }
  if (m < half_width) {
    throw std::invalid_argument("transplant_window: shift would clip the support");
  }
  std::vector<double> out(m + half_width, 0.0);
  for (int i = 0; i < 2 * half_width - 1; ++i) {
    const int n = i - half_width + 1 + m + 1;  // site carrying g at position i - half_width + 1
    out[n - 1] = g[i];
  }
  return out;
}

}  // namespace spectra
