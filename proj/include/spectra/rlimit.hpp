#pragma once

#include <optional>
#include <string>
#include <vector>

#include "spectra/canonical.hpp"
#include "spectra/graph.hpp"
#include "spectra/operators.hpp"
#include "spectra/spectral.hpp"

namespace spectra {

// A path v_0, v_1, ... with dist(v_0, v_t) == t for every t. Along such a
// path every step moves one sphere outward, which is what makes the ball
// data around its vertices converge (in the compactness sense) to limit
// patterns of the operator at infinity.
struct PathToInfinity {
  std::vector<int> vertices;
};

// Validates the strict distance growth against a BFS from vertices.front().
// Throws std::invalid_argument on an empty path, a non-edge step, or a
// vertex whose distance from the start is not its index.
PathToInfinity validate_path(const Graph& g, const std::vector<int>& vertices);

struct BallMatrixSequence {
  std::vector<BallMatrix> balls;  // one per path vertex, canonical coherent order
  std::vector<bool> clipped;      // ball touched a declared boundary vertex
};

// Radius-r compression of h around every path vertex, each in the coherent
// canonical order of its own ball.
BallMatrixSequence ball_matrix_sequence(const JacobiOperator& h, const PathToInfinity& path,
                                        int radius, const std::vector<int>& boundary = {});

// A germ is a recurring ball pattern along the path: a canonical ball shape
// (certificate string + shape graph) together with the coefficient matrix
// it carries, plus bookkeeping about which path vertices witnessed it.
struct Germ {
  std::string code;                // shape certificate shared by all witnesses
  RootedBall ball;                 // canonical ball of the representative witness
  std::vector<double> entries;     // dense matrix of the representative, canonical order
  std::vector<int> witnesses;      // path indices, increasing; front() is the representative
  std::vector<double> deviations;  // per radius 0..R: max sup-difference of that prefix
  int radius = 0;

  int size() const { return ball.size(); }
  double at(int i, int j) const { return entries[static_cast<std::size_t>(i) * size() + j]; }
};

enum class GermClass { line, tree, glued, unknown };
const char* to_string(GermClass c);

struct GermReport {
  std::vector<Germ> germs;      // clusters with >= min_witnesses, by first witness
  std::vector<int> unmatched;   // path indices whose cluster stayed below min_witnesses
  int clipped = 0;              // path vertices skipped because their ball was clipped
  int total_centers = 0;
  int radius = 0;
  double tol = 0.0;
};

// Clusters the path balls by (certificate, sup matrix distance <= tol). The
// representative of a cluster is its first witness; deviations record how
// far later witnesses drift from it, prefix radius by prefix radius.
GermReport detect_germs(const JacobiOperator& h, const PathToInfinity& path, int radius,
                        double tol, int min_witnesses, const std::vector<int>& boundary = {});

// Literal shape test on the canonical ball:
//   line:  acyclic, every degree <= 2, every interior degree == 2
//   tree:  acyclic, max degree <= d, every interior degree == d
//   glued: exactly one vertex of degree d+1, all others <= d, interior
//          degrees drawn from {2, d, d+1}
// Interior means graph layer < radius; radius-0 germs are unknown.
GermClass classify_germ(const Germ& germ, int d);

// Copies a germ vector onto the ball of an isomorphic center in h:
// chi[order[p]] = phi[p] with zeros elsewhere. Throws if the center's ball
// certificate differs from the germ's. When phi vanishes on the outermost
// layer, ||(H - lambda) chi|| equals the germ-matrix residual exactly.
std::vector<double> transplant(const Germ& germ, const JacobiOperator& h, int center,
                               const std::vector<double>& phi,
                               const std::vector<int>& boundary = {});

// Positions of the backward path vertices path[t], path[t-1], ... inside the
// canonical ball of witness t (path[t-s] sits on layer s). `consistent` says
// whether every witness sees the same position sequence, i.e. whether the
// witnesses approach their shared pattern from the same direction.
struct AncestorTrace {
  std::vector<std::vector<int>> positions;  // one row per witness
  bool consistent = false;
};
AncestorTrace ancestors_sequence(const JacobiOperator& h, const PathToInfinity& path,
                                 const Germ& germ, const std::vector<int>& boundary = {});

// Interior compression of every germ: eigenvalues of the principal block on
// layers <= radius-1, certified by zero-extension residuals inside the full
// germ matrix. Entry.center holds the germ index.
SpectrumResult union_of_germ_spectra(const GermReport& report, double tol);

struct CounterexampleExperiment {
  GluingPlan plan;
  CounterexampleGraph cx;
  JacobiOperator op;             // adjacency operator of the glued graph
  PathToInfinity path;

  std::vector<double> block_residuals;  // ||(H - d) phi_i||, phi_i uniform on block i
  std::vector<int> block_sizes;

  GermReport germs;
  std::vector<GermClass> classes;       // one per germ
  SpectrumResult germ_union;
  double max_certified = 0.0;           // largest accepted lambda in germ_union
  WeylCertificate weyl_at_d;            // uniform vector on the largest block
};

// Runs the whole construction: build the glued graph, certify the uniform
// block vectors at lambda = d, detect and classify the radius-R germs, and
// compress their union. Block i of size n carries residual sqrt(2/n) exactly,
// so lambda = d is certified with vanishing error as blocks grow while the
// radius-R germ union stays bounded by the patterns the balls can see.
CounterexampleExperiment counterexample_experiment(int degree, int num_blocks, int radius,
                                                  double germ_tol = 1e-9,
                                                  int min_witnesses = 2, int spacing = 8);

}  // namespace spectra
