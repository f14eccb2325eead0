#pragma once

#include <cstdint>
#include <vector>

#include "spectra/graph.hpp"
#include "spectra/halfline.hpp"
#include "spectra/operators.hpp"

namespace spectra {

// ---- level decomposition of spherically symmetric tree operators ----

// One invariant block of the depth-R truncation: `length` radial sites
// starting at level sector-1, repeated `multiplicity` times.
struct SectorBlock {
  int sector = 1;
  int start_level = 0;
  int length = 0;
  std::int64_t multiplicity = 0;
  HalfLineJacobi block;  // finite, `length` sites
};

struct DecompositionPlan {
  int d = 3;
  int depth = 0;
  std::vector<SectorBlock> sectors;
  std::int64_t total_dim = 0;  // sum of multiplicity * length
};

// Copies of sector n among the invariant subspaces: 1, d-1, then
// d(d-2)(d-1)^(n-3). Zero only in the degenerate case d = 2, n >= 3.
std::int64_t spherical_multiplicity(int d, int n);

// Exact block decomposition of spherically_symmetric_operator(s, depth):
// sector n >= 1 spans levels n-1..depth with sites coupled through
// sqrt(d-1) A, except the root coupling of sector 1 which is sqrt(d) A[0].
// total_dim equals regular_tree_size(s.d, depth) exactly;
// zero-multiplicity sectors are dropped.
DecompositionPlan decompose(const SphericalSymbol& s, int depth);

// The infinite sector-n operator of an eventually periodic symbol: site k
// carries level k+n-2. Site by site this equals sector_halfline(s, 1)
// shifted by tail(n-1).
HalfLineJacobi sector_halfline(const SphericalSymbol& s, int n);

struct EquivalenceReport {
  std::int64_t dense_dim = 0;
  std::int64_t block_dim = 0;
  double discrepancy = 0.0;  // sup difference of the sorted multisets
  bool pass = false;
};

// Eigenvalues of the dense depth-R truncation against the multiset union
// of the plan blocks, each repeated with its multiplicity, both sorted.
EquivalenceReport verify_equivalence(const SphericalSymbol& s, int depth, double tol = 1e-8);

// ---- whole-line operators planted along a ray of the tree ----

// The depth-truncated d-regular tree around r_0 carrying a whole-line
// symbol along the distinguished ray r_0, r_1, ...: a vertex x whose path
// to r_0 leaves the ray at r_m sits at line position dist(r_0, x) - 2m, so
// position decreases along the ray and grows back up the branches. The
// diagonal at x is w.b(position); an edge takes w.a at the lower endpoint
// position, divided by sqrt(d-1). Around every ray vertex the operator is
// spherically symmetric on the branch hanging off it.
struct TreeExtension {
  Graph g;
  JacobiOperator op;
  std::vector<int> position;  // line position of each vertex
  std::vector<int> meet;      // ray index m where the path to r_0 leaves the ray
  std::vector<int> dist;      // distance from r_0
  std::vector<int> ray;       // ray[m] = vertex id of r_m, m = 0..depth
  int d = 3;
  int depth = 0;
};

// Requires d >= 3 (the ray needs branches on both of its sides).
TreeExtension tree_extension(const WholeLineJacobi& w, int d, int depth);

// Branch operator above ray vertex m: site h >= 1 carries line position
// h - m, with diagonal w.b(h-m) and coupling w.a(h-m) to site h+1.
HalfLineJacobi branch_halfline(const WholeLineJacobi& w, int m);

// One tridiagonal block of the tree-extension decomposition.
struct TailBlock {
  int ray_vertex = 0;    // m of the ray vertex the block hangs off
  int first_height = 1;  // branch height of the first site
  std::int64_t multiplicity = 0;
  std::vector<double> diag, off;
};

// Exact block decomposition of tree_extension(w, d, depth): the comb
// quotient (the ray with one averaged branch path per ray vertex, dense
// block of multiplicity 1) plus, at each ray vertex, the differences
// across its branch children, plus, at each branch height, the
// differences across children there. total_dim matches the tree size
// exactly.
struct TreeExtensionDecomposition {
  std::vector<double> comb;  // dense comb_size x comb_size, row-major
  int comb_size = 0;
  std::vector<TailBlock> tails;
  std::int64_t total_dim = 0;
};

TreeExtensionDecomposition decompose_tree_extension(const WholeLineJacobi& w, int d, int depth);

// Equal-weight lift of a window amplitude onto the branch above ray vertex
// m: every branch vertex at height s+i gets g[i] * (d-1)^(-(s+i)/2), the
// whole vector normalized to unit length. Requires m >= 1, s >= 2 and
// m + s + g.size() <= depth, which keeps the support plus one surrounding
// layer inside the truncation; the returned vector then has the same
// residual against t.op at any lambda as the unit multiple of g, zero
// extended, has against branch_halfline(w, m).
std::vector<double> branch_lift(const TreeExtension& t, int m, int s,
                                const std::vector<double>& g);

// Shift a whole-line window amplitude to the half-line: g[i] is the value
// at line position i - half_width + 1 (support inside the open window of
// radius half_width around 0), and site n of the result carries
// g(n - m - 1). Requires g.size() == 2*half_width - 1 and m >= half_width,
// which lands the support on sites >= 2. The result has m + half_width
// sites.
std::vector<double> transplant_window(const std::vector<double>& g, int half_width, int m);

}  // namespace spectra
