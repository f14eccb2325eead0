#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace spectra {

// One-sided Jacobi matrix with 1-based sites: b(j) is the diagonal at site j
// and a(j) > 0 couples sites j and j+1. Either finite (a has one entry less
// than b) or eventually periodic (explicit head plus repeating tail; the
// head coupling arrays then have the same length as the head diagonal, the
// last one reaching into the first tail site).
class HalfLineJacobi {
 public:
  static HalfLineJacobi finite(std::vector<double> a, std::vector<double> b);
  static HalfLineJacobi eventually_periodic(std::vector<double> a_head,
                                            std::vector<double> b_head,
                                            std::vector<double> a_per,
                                            std::vector<double> b_per);

  bool is_finite() const { return a_per_.empty(); }
  int head_len() const { return static_cast<int>(b_head_.size()); }
  int period() const { return static_cast<int>(b_per_.size()); }
  // Number of sites for a finite operator; -1 otherwise.
  int num_sites() const { return is_finite() ? head_len() : -1; }

  double a(std::int64_t j) const;  // j >= 1
  double b(std::int64_t j) const;

  // Drop the first k sites (k >= 0); site k+1 becomes site 1.
  HalfLineJacobi tail(int k) const;

  // Leading m-by-m truncation as (diag, off).
  std::pair<std::vector<double>, std::vector<double>> truncate(int m) const;

  const std::vector<double>& a_head() const { return a_head_; }
  const std::vector<double>& b_head() const { return b_head_; }
  const std::vector<double>& a_per() const { return a_per_; }
  const std::vector<double>& b_per() const { return b_per_; }

  bool operator==(const HalfLineJacobi&) const = default;

 private:
  std::vector<double> a_head_, b_head_, a_per_, b_per_;
};

// Periodic two-sided Jacobi operator: site n has diagonal b_per[n mod p] and
// coupling a_per[n mod p] to site n+1.
class WholeLineJacobi {
 public:
  WholeLineJacobi(std::vector<double> a_per, std::vector<double> b_per);

  int period() const { return static_cast<int>(b_per_.size()); }
  double a(std::int64_t n) const { return a_per_[mod(n)]; }
  double b(std::int64_t n) const { return b_per_[mod(n)]; }
  const std::vector<double>& a_per() const { return a_per_; }
  const std::vector<double>& b_per() const { return b_per_; }

  WholeLineJacobi shifted(int r) const;  // site n of the result is site n+r
  bool same_up_to_shift(const WholeLineJacobi& o) const;
  bool operator==(const WholeLineJacobi&) const = default;

 private:
  int mod(std::int64_t n) const {
    const int p = period();
    return static_cast<int>(((n % p) + p) % p);
  }
  std::vector<double> a_per_, b_per_;
};

// Right limits of an eventually periodic half-line operator: the whole-line
// periodic operator built from the tail, in every distinct shift labeling.
// The returned operators are pairwise shift-equivalent; deep tails converge
// to them and to nothing else. Throws for finite operators.
std::vector<WholeLineJacobi> right_limits(const HalfLineJacobi& j);

// Strong limit points of the deep tails of an eventually periodic operator:
// the distinct pure-periodic half-line operators, one per cyclic phase of
// the tail. Constant tails give a single limit. Throws for finite operators.
std::vector<HalfLineJacobi> tail_limits(const HalfLineJacobi& j);

// ---- window certification ----

// A value with a proven bound: dist(lambda, sigma(J)) <= residual.
struct CertifiedValue {
  double lambda;
  double residual;
};
using CertifiedSet = std::vector<CertifiedValue>;  // sorted by lambda

// Eigenvalues of the window [s, s+w-1] compression, each certified against
// the full operator by the zero-extension residual
//   sqrt((a(s-1) psi_1)^2 + (a(s+w-1) psi_w)^2),
// where the left term is absent for s = 1 and the right term is absent when
// the window reaches the last site of a finite operator.
CertifiedSet window_certified(const HalfLineJacobi& j, std::int64_t s, int w);
CertifiedSet window_certified(const WholeLineJacobi& j, std::int64_t s, int w);

CertifiedSet merge_certified(std::vector<CertifiedSet> parts);
std::vector<double> accepted_lambdas(const CertifiedSet& set, double tol);

double dist_to_points(double x, const std::vector<double>& pts);
// max over a of dist(a, B), one-sided.
double directed_hausdorff(const std::vector<double>& from, const std::vector<double>& to);
double hausdorff(const std::vector<double>& x, const std::vector<double>& y);

// ---- essential spectrum of eventually periodic operators ----

// Certified union of the spectra of all limit operators of j: window
// certificates of the right limit at every phase over one period (the
// periodic bands) merged with full leading truncations [1, window] of every
// tail limit (bands plus boundary bound states of the phases). Values tied
// to the head, such as impurity eigenvalues of j itself, never enter.
// Throws for finite operators.
CertifiedSet ess_spectrum_certified(const HalfLineJacobi& j, int window);

// Accumulation points of eigenvalues of `truncation`-site leading blocks of
// deep tails, away from the bands: each tail phase repeats forever, so a
// block eigenvalue whose right-edge residual certifies it against that
// phase to within cluster_tol accumulates along the tail sequence. Values
// within exclude_tol of an accepted band certificate are dropped, as is
// anything the truncation cannot certify. Throws for finite operators.
std::vector<double> eigenvalue_accumulation(const HalfLineJacobi& j, int truncation,
                                            double cluster_tol, double exclude_tol);

}  // namespace spectra
