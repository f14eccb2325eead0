#include "spectra/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "spectra/eigen_sym.hpp"

namespace spectra {

std::vector<double> SpectrumResult::accepted() const {
  std::vector<double> out;
  for (const auto& e : entries) {
    if (e.accepted) out.push_back(e.lambda);
  }
  return out;
}

namespace {

// Zero-extension of a ball vector to the whole graph.
std::vector<double> extend(const RootedBall& ball, const double* coeffs, int n_graph) {
  std::vector<double> full(n_graph, 0.0);
  for (int p = 0; p < ball.size(); ++p) full[ball.order[p]] = coeffs[p];
  return full;
}

}  // namespace

SpectrumResult approx_spectrum(const JacobiOperator& h, const std::vector<int>& centers,
                               int radius, double tol, const std::vector<int>& boundary) {
  if (tol < 0.0) throw std::invalid_argument("approx_spectrum: negative tolerance");
  SpectrumResult res;
  res.tol = tol;
  res.radius = radius;
  const int n = h.g.num_vertices();

  for (int center : centers) {
    const BallMatrix bm = restrict_to_ball(h, center, radius, boundary);
    if (bm.ball.clipped) {
      ++res.skipped_clipped;
      continue;
    }
    const int m = bm.size();
    const auto eig = symmetric_eigen(bm.m, m, true);

    double scale = 1.0;
    for (double v : eig.values) scale = std::max(scale, std::fabs(v));
    const double cluster_tol = 1e-8 * scale;

    int k = 0;
    while (k < m) {
      int k_end = k + 1;
      while (k_end < m && eig.values[k_end] - eig.values[k_end - 1] <= cluster_tol) ++k_end;
      const int sz = k_end - k;
      // Mean of the cluster; for sz == 1 this is just the eigenvalue.
      double lam = 0.0;
      for (int i = k; i < k_end; ++i) lam += eig.values[i];
      lam /= sz;

      // w_i = (H - lam) applied to the zero-extended eigenvectors; the
      // residual is minimized over the span via the Gram matrix.
      std::vector<std::vector<double>> w(sz);
      for (int i = 0; i < sz; ++i) {
        const auto psi = extend(bm.ball, eig.vectors.data() + static_cast<std::size_t>(k + i) * m, n);
        auto img = apply(h, psi);
        for (int t = 0; t < n; ++t) img[t] -= lam * psi[t];
        w[i] = std::move(img);
      }
      double residual;
      if (sz == 1) {
        double acc = 0.0;
        for (double x : w[0]) acc += x * x;
        residual = std::sqrt(acc);
      } else {
        std::vector<double> gram(static_cast<std::size_t>(sz) * sz, 0.0);
        for (int i = 0; i < sz; ++i) {
          for (int j = i; j < sz; ++j) {
            double acc = 0.0;
            for (int t = 0; t < n; ++t) acc += w[i][t] * w[j][t];
            gram[static_cast<std::size_t>(i) * sz + j] = acc;
            gram[static_cast<std::size_t>(j) * sz + i] = acc;
          }
        }
        const auto geig = symmetric_eigen(gram, sz, false);
        residual = std::sqrt(std::max(0.0, geig.values[0]));
      }
      // One entry per cluster member so multiplicity stays visible.
      for (int i = 0; i < sz; ++i) {
        res.entries.push_back({eig.values[k + i], residual, center, residual <= tol});
      }
      k = k_end;
    }
  }
  std::sort(res.entries.begin(), res.entries.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) {
              if (x.lambda != y.lambda) return x.lambda < y.lambda;
              return x.center < y.center;
            });
  return res;
}

CertifiedSet principal_block_certified(const std::vector<double>& m, int n, int block_size) {
  if (n < 1 || static_cast<int>(m.size()) != n * n)
    throw std::invalid_argument("principal_block_certified: bad matrix size");
  if (block_size < 1 || block_size > n)
    throw std::invalid_argument("principal_block_certified: bad block size");

  std::vector<double> block(static_cast<std::size_t>(block_size) * block_size);
  for (int i = 0; i < block_size; ++i) {
    for (int j = 0; j < block_size; ++j) {
      block[static_cast<std::size_t>(i) * block_size + j] = m[static_cast<std::size_t>(i) * n + j];
    }
  }
  const auto eig = symmetric_eigen(block, block_size, true);

  double scale = 1.0;
  for (double v : eig.values) scale = std::max(scale, std::fabs(v));
  const double cluster_tol = 1e-8 * scale;

  CertifiedSet out;
  int k = 0;
  while (k < block_size) {
    int k_end = k + 1;
    while (k_end < block_size && eig.values[k_end] - eig.values[k_end - 1] <= cluster_tol) ++k_end;
    const int sz = k_end - k;
    double lam = 0.0;
    for (int i = k; i < k_end; ++i) lam += eig.values[i];
    lam /= sz;

    // Zero-extend each cluster vector to n entries and push it through m.
    std::vector<std::vector<double>> w(sz, std::vector<double>(n, 0.0));
    for (int i = 0; i < sz; ++i) {
      const double* psi = eig.vectors.data() + static_cast<std::size_t>(k + i) * block_size;
      for (int r = 0; r < n; ++r) {
        double acc = 0.0;
        for (int c = 0; c < block_size; ++c) acc += m[static_cast<std::size_t>(r) * n + c] * psi[c];
        if (r < block_size) acc -= lam * psi[r];
        w[i][r] = acc;
      }
    }
    double residual;
    if (sz == 1) {
      double acc = 0.0;
      for (double x : w[0]) acc += x * x;
      residual = std::sqrt(acc);
    } else {
      std::vector<double> gram(static_cast<std::size_t>(sz) * sz, 0.0);
      for (int i = 0; i < sz; ++i) {
        for (int j = i; j < sz; ++j) {
          double acc = 0.0;
          for (int t = 0; t < n; ++t) acc += w[i][t] * w[j][t];
          gram[static_cast<std::size_t>(i) * sz + j] = acc;
          gram[static_cast<std::size_t>(j) * sz + i] = acc;
        }
      }
      const auto geig = symmetric_eigen(gram, sz, false);
      residual = std::sqrt(std::max(0.0, geig.values[0]));
    }
    for (int i = 0; i < sz; ++i) out.push_back({eig.values[k + i], residual});
    k = k_end;
  }
  return out;
}

WeylCertificate weyl_check(const JacobiOperator& h, double lambda,
                           const std::vector<std::vector<double>>& family, double eps) {
  WeylCertificate cert;
  cert.eps = eps;
  for (const auto& psi : family) {
    cert.residuals.push_back(vector_residual(h, lambda, psi));
  }
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i; j < family.size(); ++j) {
      double acc = 0.0;
      for (std::size_t t = 0; t < family[i].size(); ++t) acc += family[i][t] * family[j][t];
      const double defect = std::fabs(acc - (i == j ? 1.0 : 0.0));
      cert.gram_defect = std::max(cert.gram_defect, defect);
    }
  }
  cert.pass = true;
  for (double r : cert.residuals) {
    if (r > eps) cert.pass = false;
  }
  if (cert.gram_defect > 0.1) cert.pass = false;
  return cert;
}

Histogram histogram(const std::vector<double>& values, double lo, double hi, int bins) {
  if (bins < 1 || !(hi > lo)) throw std::invalid_argument("histogram: bad range");
  Histogram hgram;
  hgram.edges.resize(bins + 1);
  for (int i = 0; i <= bins; ++i) hgram.edges[i] = lo + (hi - lo) * i / bins;
  hgram.counts.assign(bins, 0);
  for (double v : values) {
    if (v < lo || v > hi) continue;
    int idx = static_cast<int>((v - lo) / (hi - lo) * bins);
    if (idx == bins) idx = bins - 1;  // right edge closed
    ++hgram.counts[idx];
  }
  return hgram;
}

}  // namespace spectra
