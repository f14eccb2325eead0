#include "spectra/operators.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace spectra {

double JacobiOperator::a_max() const {
  double m = 0.0;
  for (double v : a) m = std::max(m, v);
  return m;
}

double JacobiOperator::norm_bound() const {
  double worst = 0.0;
  for (int v = 0; v < g.num_vertices(); ++v) {
    double row = std::fabs(b[v]);
    for (int e : g.incident_edges(v)) row += a[e];
    worst = std::max(worst, row);
  }
  return worst;
}

JacobiOperator make_jacobi(Graph g, std::vector<double> a, std::vector<double> b) {
  if (a.size() != static_cast<std::size_t>(g.num_edges()) ||
      b.size() != static_cast<std::size_t>(g.num_vertices())) {
    throw std::invalid_argument("make_jacobi: coefficient sizes do not match the graph");
  }
  for (double x : a) {
    if (!(x > 0.0)) throw std::invalid_argument("make_jacobi: edge weights must be positive");
  }
  for (double x : b) {
    if (!std::isfinite(x)) throw std::invalid_argument("make_jacobi: potential must be finite");
  }
  return {std::move(g), std::move(a), std::move(b)};
}

JacobiOperator adjacency_operator(Graph g) {
  std::vector<double> a(g.num_edges(), 1.0);
  std::vector<double> b(g.num_vertices(), 0.0);
  return make_jacobi(std::move(g), std::move(a), std::move(b));
}

JacobiOperator laplacian_operator(Graph g) {
  std::vector<double> a(g.num_edges(), 1.0);
  std::vector<double> b(g.num_vertices());
  for (int v = 0; v < g.num_vertices(); ++v) b[v] = -g.degree(v);
  return make_jacobi(std::move(g), std::move(a), std::move(b));
}

std::vector<double> apply(const JacobiOperator& h, const std::vector<double>& x) {
  const int n = h.g.num_vertices();
  if (x.size() != static_cast<std::size_t>(n)) {
    throw std::invalid_argument("apply: vector size mismatch");
  }
  std::vector<double> y(n, 0.0);
  for (int v = 0; v < n; ++v) y[v] = h.b[v] * x[v];
  for (int e = 0; e < h.g.num_edges(); ++e) {
    const auto [u, v] = h.g.edges()[e];
    y[u] += h.a[e] * x[v];
    y[v] += h.a[e] * x[u];
  }
  return y;
}

std::vector<double> dense_matrix(const JacobiOperator& h) {
  const int n = h.g.num_vertices();
  std::vector<double> m(static_cast<std::size_t>(n) * n, 0.0);
  for (int v = 0; v < n; ++v) m[static_cast<std::size_t>(v) * n + v] = h.b[v];
  for (int e = 0; e < h.g.num_edges(); ++e) {
    const auto [u, v] = h.g.edges()[e];
    m[static_cast<std::size_t>(u) * n + v] = h.a[e];
    m[static_cast<std::size_t>(v) * n + u] = h.a[e];
  }
  return m;
}

double vector_residual(const JacobiOperator& h, double lambda, const std::vector<double>& psi) {
  const auto y = apply(h, psi);
  double acc = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    const double r = y[i] - lambda * psi[i];
    acc += r * r;
  }
  return std::sqrt(acc);
}

BallMatrix matrix_on_ball(const JacobiOperator& h, const RootedBall& ball) {
  const int n = ball.size();
  BallMatrix out;
  out.ball = ball;
  out.m.assign(static_cast<std::size_t>(n) * n, 0.0);
  for (int i = 0; i < n; ++i) {
    out.m[static_cast<std::size_t>(i) * n + i] = h.b[ball.order[i]];
  }
  for (const auto& [pi, pj] : ball.shape.edges()) {
    const double v = h.coeff(ball.order[pi], ball.order[pj]);
    out.m[static_cast<std::size_t>(pi) * n + pj] = v;
    out.m[static_cast<std::size_t>(pj) * n + pi] = v;
  }
  return out;
}

BallMatrix restrict_to_ball(const JacobiOperator& h, int center, int radius,
                            const std::vector<int>& boundary) {
  return matrix_on_ball(h, coherent_enumeration(h.g, center, radius, boundary));
}

double SphericalSymbol::a_at(int k) const {
  if (k < 0) throw std::invalid_argument("SphericalSymbol: negative level");
  const int len = static_cast<int>(A.size());
  if (k < len) return A[k];
  if (!tail_period) throw std::invalid_argument("SphericalSymbol: level beyond finite symbol");
  const int p = *tail_period;
  return A[len - p + (k - len) % p];
}

double SphericalSymbol::b_at(int k) const {
  if (k < 0) throw std::invalid_argument("SphericalSymbol: negative level");
  const int len = static_cast<int>(B.size());
  if (k < len) return B[k];
  if (!tail_period) throw std::invalid_argument("SphericalSymbol: level beyond finite symbol");
  const int p = *tail_period;
  return B[len - p + (k - len) % p];
}

void SphericalSymbol::validate() const {
  if (d < 2) throw std::invalid_argument("SphericalSymbol: need d >= 2");
  if (A.empty() || B.empty()) throw std::invalid_argument("SphericalSymbol: empty arrays");
  for (double x : A) {
    if (!(x > 0.0)) throw std::invalid_argument("SphericalSymbol: couplings must be positive");
  }
  if (tail_period) {
    if (*tail_period < 1 || *tail_period > static_cast<int>(A.size()) ||
        *tail_period > static_cast<int>(B.size())) {
      throw std::invalid_argument("SphericalSymbol: bad tail period");
    }
  }
}

SphericalSymbol free_symbol(int d) {
  SphericalSymbol s;
  s.d = d;
  s.A = {1.0};
  s.B = {0.0};
  s.tail_period = 1;
  return s;
}

JacobiOperator spherically_symmetric_operator(const SphericalSymbol& s, int depth) {
  s.validate();
  Graph tree = build_regular_tree(s.d, depth);
  const auto levels = tree_levels(s.d, depth);
  std::vector<double> a(tree.num_edges());
  std::vector<double> b(tree.num_vertices());
  for (int v = 0; v < tree.num_vertices(); ++v) b[v] = s.b_at(levels[v]);
  for (int e = 0; e < tree.num_edges(); ++e) {
    const auto [u, v] = tree.edges()[e];
    a[e] = s.a_at(std::min(levels[u], levels[v]));
  }
  return make_jacobi(std::move(tree), std::move(a), std::move(b));
}

}  // namespace spectra
