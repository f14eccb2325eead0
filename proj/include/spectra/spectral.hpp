#pragma once

#include <vector>

#include "spectra/halfline.hpp"
#include "spectra/operators.hpp"

namespace spectra {

struct SpectrumEntry {
  double lambda = 0.0;
  double residual = 0.0;
  int center = -1;  // ball center the value came from
  bool accepted = false;
};

struct SpectrumResult {
  std::vector<SpectrumEntry> entries;  // sorted by lambda
  double tol = 0.0;
  int radius = 0;
  int skipped_clipped = 0;  // balls dropped because they touched the boundary

  std::vector<double> accepted() const;
};

// Ball compressions around each center; every eigenvalue is certified by the
// zero-extension residual ||(H - lambda) psi~||, so dist(lambda, sigma(H)) is
// bounded by it. Near-degenerate clusters (relative gap below 1e-8) get the
// residual minimized over their eigenspace. Balls containing a declared
// boundary vertex are skipped and counted.
SpectrumResult approx_spectrum(const JacobiOperator& h, const std::vector<int>& centers,
                               int radius, double tol,
                               const std::vector<int>& boundary = {});

struct WeylCertificate {
  std::vector<double> residuals;
  double gram_defect = 0.0;  // max |<psi_i, psi_j> - delta_ij|
  double eps = 0.0;
  bool pass = false;
};

// Checks an explicit near-eigenvector family at energy lambda: residuals at
// most eps and pairwise near-orthonormality.
WeylCertificate weyl_check(const JacobiOperator& h, double lambda,
                           const std::vector<std::vector<double>>& family, double eps);

// Certified eigenvalues of the leading block_size-by-block_size principal
// block of the dense symmetric matrix m (n by n): each is paired with the
// zero-extension residual inside m, and near-degenerate clusters get the
// residual minimized over their eigenspace.
CertifiedSet principal_block_certified(const std::vector<double>& m, int n, int block_size);

struct Histogram {
  std::vector<double> edges;  // bins+1 entries
  std::vector<int> counts;    // bins entries
};

Histogram histogram(const std::vector<double>& values, double lo, double hi, int bins);

}  // namespace spectra
