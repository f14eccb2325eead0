#pragma once

#include <optional>
#include <vector>

#include "spectra/canonical.hpp"
#include "spectra/graph.hpp"

namespace spectra {

// (H psi)(v) = sum_{u ~ v} a_{uv} psi(u) + b(v) psi(v), with a > 0 per edge.
struct JacobiOperator {
  Graph g;
  std::vector<double> a;  // indexed by edge id
  std::vector<double> b;  // indexed by vertex

  double coeff(int u, int v) const {
    const int e = g.edge_index(u, v);
    return e >= 0 ? a[e] : 0.0;
  }
  double a_max() const;
  // Upper bound on the operator norm: max_v (|b(v)| + sum of incident a).
  double norm_bound() const;
};

JacobiOperator make_jacobi(Graph g, std::vector<double> a, std::vector<double> b);
JacobiOperator adjacency_operator(Graph g);
// b(v) = -deg(v), a = 1.
JacobiOperator laplacian_operator(Graph g);

std::vector<double> apply(const JacobiOperator& h, const std::vector<double>& x);

// Dense row-major n-by-n matrix of H.
std::vector<double> dense_matrix(const JacobiOperator& h);

// || (H - lambda) psi ||_2 over the whole graph.
double vector_residual(const JacobiOperator& h, double lambda, const std::vector<double>& psi);

struct BallMatrix {
  RootedBall ball;
  std::vector<double> m;  // dense, row-major, ball.size()^2

  double at(int i, int j) const { return m[static_cast<std::size_t>(i) * ball.size() + j]; }
  int size() const { return ball.size(); }
};

// Compression of H to the coherent enumeration of B_radius(center).
BallMatrix restrict_to_ball(const JacobiOperator& h, int center, int radius,
                            const std::vector<int>& boundary = {});

// Compression of H to an already-computed enumeration (canonical orders
// included).
BallMatrix matrix_on_ball(const JacobiOperator& h, const RootedBall& ball);

// ---- spherically symmetric operators on trees ----

// Coefficients depending on the level only: A[k] couples levels k and k+1,
// B[k] is the diagonal at level k. With tail_period = p the last p entries
// of each array repeat forever.
struct SphericalSymbol {
  int d = 3;
  std::vector<double> A, B;
  std::optional<int> tail_period;

  double a_at(int k) const;
  double b_at(int k) const;
  void validate() const;
};

SphericalSymbol free_symbol(int d);

// Operator on build_regular_tree(s.d, depth) with the symbol coefficients.
JacobiOperator spherically_symmetric_operator(const SphericalSymbol& s, int depth);

}  // namespace spectra
