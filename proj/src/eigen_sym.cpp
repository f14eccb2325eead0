#include "spectra/eigen_sym.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "spectra/kernels.hpp"

namespace spectra {

namespace {

// Householder reduction of the symmetric matrix in w (row-major, n*n) to
// tridiagonal form. On return d holds the diagonal and e[1..n-1] the
// subdiagonal (e[0] = 0). If q is non-null it receives the accumulated
// orthogonal transform, column-major, so that Q^T A Q = T.
void householder_tridiag(std::vector<double>& w, int n, std::vector<double>& d,
                         std::vector<double>& e, std::vector<double>* q) {
  d.assign(n, 0.0);
  e.assign(n, 0.0);
  std::vector<double> hstash(n, 0.0);
  std::vector<double> p(n, 0.0);
  std::vector<double> t(n, 0.0);

  for (int i = n - 1; i >= 1; --i) {
    double* row = w.data() + static_cast<std::size_t>(i) * n;
    const int m = i - 1;
    double h = 0.0;
    if (i > 1) {
      double sc = 0.0;
      for (int k = 0; k < i; ++k) sc += std::fabs(row[k]);
      if (sc == 0.0) {
        e[i] = row[m];
      } else {
        kernels::scale(row, 1.0 / sc, i);
        h = kernels::dot(row, row, i);
        const double f = row[m];
        const double g = f >= 0.0 ? -std::sqrt(h) : std::sqrt(h);
        e[i] = sc * g;
        h -= f * g;
        row[m] = f - g;
        // p = (leading i-by-i block of w) * u, via lower-triangle rows.
        std::fill(p.begin(), p.begin() + i, 0.0);
        for (int j = 0; j < i; ++j) {
          const double* rj = w.data() + static_cast<std::size_t>(j) * n;
          p[j] += kernels::dot(rj, row, j + 1);
          kernels::axpy(row[j], rj, p.data(), j);
        }
        double f_acc = 0.0;
        for (int j = 0; j < i; ++j) {
          t[j] = p[j] / h;
          f_acc += t[j] * row[j];
        }
        const double hh = f_acc / (2.0 * h);
        for (int j = 0; j < i; ++j) t[j] -= hh * row[j];
        for (int j = 0; j < i; ++j) {
          double* rj = w.data() + static_cast<std::size_t>(j) * n;
          kernels::axpy(-row[j], t.data(), rj, j + 1);
          kernels::axpy(-t[j], row, rj, j + 1);
        }
      }
    } else {
      e[i] = row[m];
    }
    hstash[i] = h;
  }

  if (q) {
    q->assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) (*q)[static_cast<std::size_t>(j) * n + j] = 1.0;
    for (int i = 1; i < n; ++i) {
      const double h = hstash[i];
      if (h == 0.0) continue;
      const double* u = w.data() + static_cast<std::size_t>(i) * n;
      for (int j = 0; j < i; ++j) {
        double* qc = q->data() + static_cast<std::size_t>(j) * n;
        const double g = kernels::dot(u, qc, i);
        kernels::axpy(-g / h, u, qc, i);
      }
    }
  }

  for (int i = 0; i < n; ++i) d[i] = w[static_cast<std::size_t>(i) * n + i];
}

// Implicit-shift QL on the tridiagonal (d, e). e[0] is unused on entry. If z
// is non-null (column-major, n*n) the rotations are accumulated into its
// columns.
void ql_implicit(std::vector<double>& d, std::vector<double>& e, int n,
                 std::vector<double>* z) {
  if (n == 0) return;
  const double eps = std::numeric_limits<double>::epsilon();
  for (int i = 1; i < n; ++i) e[i - 1] = e[i];
  e[n - 1] = 0.0;

  for (int l = 0; l < n; ++l) {
    int iter = 0;
    int m;
    do {
      for (m = l; m < n - 1; ++m) {
        const double dd = std::fabs(d[m]) + std::fabs(d[m + 1]);
        if (std::fabs(e[m]) <= eps * dd) break;
      }
      if (m != l) {
        if (iter++ == 60) throw std::runtime_error("eigensolver: QL failed to converge");
        double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
        double r = std::hypot(g, 1.0);
        g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
        double s = 1.0, c = 1.0, pp = 0.0;
        int i;
        for (i = m - 1; i >= l; --i) {
          double f = s * e[i];
          const double b = c * e[i];
          r = std::hypot(f, g);
          e[i + 1] = r;
          if (r == 0.0) {
            d[i + 1] -= pp;
            e[m] = 0.0;
            break;
          }
          s = f / r;
          c = g / r;
          g = d[i + 1] - pp;
          r = (d[i] - g) * s + 2.0 * c * b;
          pp = s * r;
          d[i + 1] = g + pp;
          g = c * r - b;
          if (z) {
            double* zi = z->data() + static_cast<std::size_t>(i) * n;
            kernels::rot(zi, zi + n, c, s, n);
          }
        }
        if (r == 0.0 && i >= l) continue;
        d[l] -= pp;
        e[l] = g;
        e[m] = 0.0;
      }
    } while (m != l);
  }
}

EigenResult finish(std::vector<double>& d, std::vector<double>* z, int n,
                   bool want_vectors) {
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return d[a] < d[b]; });

  EigenResult res;
  res.n = n;
  res.has_vectors = want_vectors;
  res.values.resize(n);
  for (int k = 0; k < n; ++k) res.values[k] = d[order[k]];
  if (want_vectors) {
    res.vectors.resize(static_cast<std::size_t>(n) * n);
    for (int k = 0; k < n; ++k) {
      const double* src = z->data() + static_cast<std::size_t>(order[k]) * n;
      double* dst = res.vectors.data() + static_cast<std::size_t>(k) * n;
      std::copy(src, src + n, dst);
      int imax = 0;
      double amax = 0.0;
      for (int i = 0; i < n; ++i) {
        const double a = std::fabs(dst[i]);
        if (a > amax) {
          amax = a;
          imax = i;
        }
      }
      if (dst[imax] < 0.0) kernels::scale(dst, -1.0, n);
    }
  }
  return res;
}

}  // namespace

EigenResult symmetric_eigen(const std::vector<double>& a, int n, bool want_vectors) {
  if (n < 0 || a.size() != static_cast<std::size_t>(n) * n) {
    throw std::invalid_argument("symmetric_eigen: bad dimensions");
  }
  if (n == 0) return EigenResult{0, {}, {}, want_vectors};
  std::vector<double> w = a;
  // Mirror the lower triangle so the row-prefix loops see consistent data.
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) {
      w[static_cast<std::size_t>(j) * n + i] = w[static_cast<std::size_t>(i) * n + j];
    }
  }
  std::vector<double> d, e;
  std::vector<double> q;
  householder_tridiag(w, n, d, e, want_vectors ? &q : nullptr);
  ql_implicit(d, e, n, want_vectors ? &q : nullptr);
  return finish(d, want_vectors ? &q : nullptr, n, want_vectors);
}

EigenResult tridiagonal_eigen(const std::vector<double>& diag,
                              const std::vector<double>& off, bool want_vectors) {
  const int n = static_cast<int>(diag.size());
  if (n == 0) return EigenResult{0, {}, {}, want_vectors};
  if (off.size() + 1 != diag.size()) {
    throw std::invalid_argument("tridiagonal_eigen: off size must be n-1");
  }
  std::vector<double> d = diag;
  std::vector<double> e(n, 0.0);
  for (int i = 1; i < n; ++i) e[i] = off[i - 1];
  std::vector<double> z;
  if (want_vectors) {
    z.assign(static_cast<std::size_t>(n) * n, 0.0);
    for (int j = 0; j < n; ++j) z[static_cast<std::size_t>(j) * n + j] = 1.0;
  }
  ql_implicit(d, e, n, want_vectors ? &z : nullptr);
  return finish(d, want_vectors ? &z : nullptr, n, want_vectors);
}

}  // namespace spectra
