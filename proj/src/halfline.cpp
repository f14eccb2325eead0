#include "spectra/halfline.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spectra/eigen_sym.hpp"

namespace spectra {

namespace {

void check_positive(const std::vector<double>& a, const char* what) {
  for (double x : a) {
    if (!(x > 0.0)) throw std::invalid_argument(std::string(what) + ": couplings must be positive");
  }
}

}  // namespace

HalfLineJacobi HalfLineJacobi::finite(std::vector<double> a, std::vector<double> b) {
  if (b.empty() || a.size() + 1 != b.size()) {
    throw std::invalid_argument("HalfLineJacobi::finite: need |a| = |b| - 1, |b| >= 1");
  }
  check_positive(a, "HalfLineJacobi::finite");
  HalfLineJacobi j;
  j.a_head_ = std::move(a);
  j.b_head_ = std::move(b);
  return j;
}

HalfLineJacobi HalfLineJacobi::eventually_periodic(std::vector<double> a_head,
                                                   std::vector<double> b_head,
                                                   std::vector<double> a_per,
                                                   std::vector<double> b_per) {
  if (a_per.empty() || a_per.size() != b_per.size()) {
    throw std::invalid_argument("HalfLineJacobi: tail arrays must be nonempty, equal length");
  }
  if (a_head.size() != b_head.size()) {
    throw std::invalid_argument("HalfLineJacobi: head arrays must have equal length");
  }
  check_positive(a_head, "HalfLineJacobi");
  check_positive(a_per, "HalfLineJacobi");
  HalfLineJacobi j;
  j.a_head_ = std::move(a_head);
  j.b_head_ = std::move(b_head);
  j.a_per_ = std::move(a_per);
  j.b_per_ = std::move(b_per);
  return j;
}

double HalfLineJacobi::a(std::int64_t j) const {
  if (j < 1) throw std::invalid_argument("HalfLineJacobi::a: sites are 1-based");
  const std::int64_t h = head_len();
  if (j <= static_cast<std::int64_t>(a_head_.size())) return a_head_[j - 1];
  if (is_finite()) throw std::invalid_argument("HalfLineJacobi::a: beyond the last site");
  return a_per_[(j - h - 1) % period()];
}

double HalfLineJacobi::b(std::int64_t j) const {
  if (j < 1) throw std::invalid_argument("HalfLineJacobi::b: sites are 1-based");
  const std::int64_t h = head_len();
  if (j <= h) return b_head_[j - 1];
  if (is_finite()) throw std::invalid_argument("HalfLineJacobi::b: beyond the last site");
  return b_per_[(j - h - 1) % period()];
}

HalfLineJacobi HalfLineJacobi::tail(int k) const {
  if (k < 0) throw std::invalid_argument("HalfLineJacobi::tail: negative shift");
  if (k == 0) return *this;
  const int h = head_len();
  if (is_finite()) {
    if (k >= h) throw std::invalid_argument("HalfLineJacobi::tail: shift past the last site");
    return finite({a_head_.begin() + k, a_head_.end()}, {b_head_.begin() + k, b_head_.end()});
  }
  if (k <= h) {
    return eventually_periodic({a_head_.begin() + k, a_head_.end()},
                               {b_head_.begin() + k, b_head_.end()}, a_per_, b_per_);
  }
  const int p = period();
  const int r = (k - h) % p;
  std::vector<double> ap(p), bp(p);
  for (int i = 0; i < p; ++i) {
    ap[i] = a_per_[(i + r) % p];
    bp[i] = b_per_[(i + r) % p];
  }
  return eventually_periodic({}, {}, std::move(ap), std::move(bp));
}

std::pair<std::vector<double>, std::vector<double>> HalfLineJacobi::truncate(int m) const {
  if (m < 1) throw std::invalid_argument("HalfLineJacobi::truncate: need m >= 1");
  if (is_finite() && m > num_sites()) {
    throw std::invalid_argument("HalfLineJacobi::truncate: beyond the last site");
  }
  std::vector<double> diag(m), off(m - 1);
  for (int j = 1; j <= m; ++j) diag[j - 1] = b(j);
  for (int j = 1; j < m; ++j) off[j - 1] = a(j);
  return {std::move(diag), std::move(off)};
}

WholeLineJacobi::WholeLineJacobi(std::vector<double> a_per, std::vector<double> b_per) {
  if (a_per.empty() || a_per.size() != b_per.size()) {
    throw std::invalid_argument("WholeLineJacobi: arrays must be nonempty, equal length");
  }
  check_positive(a_per, "WholeLineJacobi");
  a_per_ = std::move(a_per);
  b_per_ = std::move(b_per);
}

WholeLineJacobi WholeLineJacobi::shifted(int r) const {
  const int p = period();
  std::vector<double> ap(p), bp(p);
  for (int i = 0; i < p; ++i) {
    ap[i] = a((static_cast<std::int64_t>(i) + r));
    bp[i] = b((static_cast<std::int64_t>(i) + r));
  }
  return WholeLineJacobi(std::move(ap), std::move(bp));
}

bool WholeLineJacobi::same_up_to_shift(const WholeLineJacobi& o) const {
  if (period() != o.period()) return false;
  for (int r = 0; r < period(); ++r) {
    if (shifted(r) == o) return true;
  }
  return false;
}

namespace {

CertifiedSet window_eigen(const std::vector<double>& diag, const std::vector<double>& off,
                          double a_left, double a_right) {
  const int w = static_cast<int>(diag.size());
  auto eig = tridiagonal_eigen(diag, off, true);
  CertifiedSet out;
  out.reserve(w);
  for (int k = 0; k < w; ++k) {
    const double p1 = eig.vec(k, 0);
    const double pw = eig.vec(k, w - 1);
    const double res = std::sqrt(a_left * a_left * p1 * p1 + a_right * a_right * pw * pw);
    out.push_back({eig.values[k], res});
  }
  return out;
}

}  // namespace

CertifiedSet window_certified(const HalfLineJacobi& j, std::int64_t s, int w) {
  if (s < 1 || w < 1) throw std::invalid_argument("window_certified: bad window");
  if (j.is_finite() && s + w - 1 > j.num_sites()) {
    throw std::invalid_argument("window_certified: window beyond the last site");
  }
  std::vector<double> diag(w), off(w - 1);
  for (int t = 0; t < w; ++t) diag[t] = j.b(s + t);
  for (int t = 0; t + 1 < w; ++t) off[t] = j.a(s + t);
  const double a_left = s > 1 ? j.a(s - 1) : 0.0;
  const bool at_end = j.is_finite() && s + w - 1 == j.num_sites();
  const double a_right = at_end ? 0.0 : j.a(s + w - 1);
  return window_eigen(diag, off, a_left, a_right);
}

CertifiedSet window_certified(const WholeLineJacobi& j, std::int64_t s, int w) {
  if (w < 1) throw std::invalid_argument("window_certified: bad window");
  std::vector<double> diag(w), off(w - 1);
  for (int t = 0; t < w; ++t) diag[t] = j.b(s + t);
  for (int t = 0; t + 1 < w; ++t) off[t] = j.a(s + t);
  return window_eigen(diag, off, j.a(s - 1), j.a(s + w - 1));
}

std::vector<WholeLineJacobi> right_limits(const HalfLineJacobi& j) {
  if (j.is_finite())
    throw std::invalid_argument("right_limits: finite operators have none");
  const WholeLineJacobi base(j.a_per(), j.b_per());
  std::vector<WholeLineJacobi> out;
  for (int r = 0; r < base.period(); ++r) {
    const WholeLineJacobi cand = base.shifted(r);
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  }
  return out;
}

std::vector<HalfLineJacobi> tail_limits(const HalfLineJacobi& j) {
  if (j.is_finite())
    throw std::invalid_argument("tail_limits: finite operators have none");
  std::vector<HalfLineJacobi> out;
  for (int i = 0; i < j.period(); ++i) {
    const HalfLineJacobi cand = j.tail(j.head_len() + i);
    if (std::find(out.begin(), out.end(), cand) == out.end()) out.push_back(cand);
  }
  return out;
}

CertifiedSet ess_spectrum_certified(const HalfLineJacobi& j, int window) {
  if (j.is_finite())
    throw std::invalid_argument("ess_spectrum_certified: finite operator");
  if (window < 1) throw std::invalid_argument("ess_spectrum_certified: bad window");
  std::vector<CertifiedSet> parts;
  const WholeLineJacobi w = right_limits(j).front();
  for (int s = 1; s <= w.period(); ++s) parts.push_back(window_certified(w, s, window));
  for (const auto& t : tail_limits(j)) parts.push_back(window_certified(t, 1, window));
  return merge_certified(std::move(parts));
}

std::vector<double> eigenvalue_accumulation(const HalfLineJacobi& j, int truncation,
                                            double cluster_tol, double exclude_tol) {
  if (j.is_finite())
    throw std::invalid_argument("eigenvalue_accumulation: finite operator");
  if (truncation < 2) throw std::invalid_argument("eigenvalue_accumulation: truncation too small");
  const WholeLineJacobi w = right_limits(j).front();
  std::vector<CertifiedSet> band_parts;
  for (int s = 1; s <= w.period(); ++s)
    band_parts.push_back(window_certified(w, s, truncation));
  const std::vector<double> bands =
      accepted_lambdas(merge_certified(std::move(band_parts)), exclude_tol);

  std::vector<double> out;
  for (const auto& t : tail_limits(j)) {
    auto [diag, off] = t.truncate(truncation);
    const auto eig = tridiagonal_eigen(diag, off, true);
    const double a_edge = t.a(truncation);
    for (int k = 0; k < truncation; ++k) {
      const double res = a_edge * std::fabs(eig.vec(k, truncation - 1));
      if (res > cluster_tol) continue;
      const double lam = eig.values[k];
      if (dist_to_points(lam, bands) <= exclude_tol) continue;
      if (dist_to_points(lam, out) <= cluster_tol) continue;
      out.push_back(lam);
      std::sort(out.begin(), out.end());
    }
  }
  return out;
}

CertifiedSet merge_certified(std::vector<CertifiedSet> parts) {
  CertifiedSet all;
  for (auto& p : parts) all.insert(all.end(), p.begin(), p.end());
  std::sort(all.begin(), all.end(),
            [](const CertifiedValue& x, const CertifiedValue& y) { return x.lambda < y.lambda; });
  return all;
}

std::vector<double> accepted_lambdas(const CertifiedSet& set, double tol) {
  std::vector<double> out;
  for (const auto& cv : set) {
    if (cv.residual <= tol) out.push_back(cv.lambda);
  }
  return out;
}

double dist_to_points(double x, const std::vector<double>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (double p : pts) best = std::min(best, std::fabs(x - p));
  return best;
}

double directed_hausdorff(const std::vector<double>& from, const std::vector<double>& to) {
  double worst = 0.0;
  for (double x : from) worst = std::max(worst, dist_to_points(x, to));
  return worst;
}

double hausdorff(const std::vector<double>& x, const std::vector<double>& y) {
  return std::max(directed_hausdorff(x, y), directed_hausdorff(y, x));
}

}  // namespace spectra
