#pragma once

#include <cstddef>
#include <vector>

// Dense symmetric eigensolver: Householder reduction to tridiagonal form
// followed by implicit-shift QL. Deterministic: ascending eigenvalues, and
// each eigenvector is normalized so its largest-magnitude component (lowest
// index on ties) is positive.

namespace spectra {

struct EigenResult {
  int n = 0;
  std::vector<double> values;   // ascending
  std::vector<double> vectors;  // column-major: vectors[k*n + i] is component
                                // i of the eigenvector for values[k]; empty
                                // when vectors were not requested
  bool has_vectors = false;

  double vec(int k, int i) const { return vectors[static_cast<std::size_t>(k) * n + i]; }
};

// a is the full symmetric matrix, row-major, size n*n. Only the lower
// triangle is read.
EigenResult symmetric_eigen(const std::vector<double>& a, int n, bool want_vectors);

// diag has n entries, off has n-1 (off[i] couples i and i+1).
EigenResult tridiagonal_eigen(const std::vector<double>& diag,
                              const std::vector<double>& off, bool want_vectors);

}  // namespace spectra
