#include "spectra/rlimit.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace spectra {

PathToInfinity validate_path(const Graph& g, const std::vector<int>& vertices) {
  if (vertices.empty()) throw std::invalid_argument("validate_path: empty path");
  for (int v : vertices) {
    if (v < 0 || v >= g.num_vertices())
      throw std::invalid_argument("validate_path: vertex out of range");
  }
  const BfsResult from_start = bfs(g, vertices.front());
  for (std::size_t t = 0; t < vertices.size(); ++t) {
    if (t > 0 && !g.has_edge(vertices[t - 1], vertices[t]))
      throw std::invalid_argument("validate_path: consecutive vertices must be adjacent");
    if (from_start.dist[vertices[t]] != static_cast<int>(t))
      throw std::invalid_argument("validate_path: distance from the start must equal the index");
  }
  return PathToInfinity{vertices};
}

BallMatrixSequence ball_matrix_sequence(const JacobiOperator& h, const PathToInfinity& path,
                                        int radius, const std::vector<int>& boundary) {
  if (radius < 0) throw std::invalid_argument("ball_matrix_sequence: negative radius");
  BallMatrixSequence seq;
  seq.balls.reserve(path.vertices.size());
  for (int v : path.vertices) {
    BallMatrix bm = restrict_to_ball(h, v, radius, boundary);
    seq.clipped.push_back(bm.ball.clipped);
    seq.balls.push_back(std::move(bm));
  }
  return seq;
}

const char* to_string(GermClass c) {
  switch (c) {
    case GermClass::line: return "line";
    case GermClass::tree: return "tree";
    case GermClass::glued: return "glued";
    default: return "unknown";
  }
}

GermReport detect_germs(const JacobiOperator& h, const PathToInfinity& path, int radius,
                        double tol, int min_witnesses, const std::vector<int>& boundary) {
  if (radius < 0) throw std::invalid_argument("detect_germs: negative radius");
  if (tol < 0.0) throw std::invalid_argument("detect_germs: negative tolerance");
  if (min_witnesses < 1) throw std::invalid_argument("detect_germs: min_witnesses must be positive");

  GermReport report;
  report.radius = radius;
  report.tol = tol;
  report.total_centers = static_cast<int>(path.vertices.size());

  std::vector<Germ> clusters;
  for (int t = 0; t < report.total_centers; ++t) {
    BallCode bc = ball_code(h.g, path.vertices[t], radius, boundary);
    if (bc.ball.clipped) {
      ++report.clipped;
      continue;
    }
    const BallMatrix bm = matrix_on_ball(h, bc.ball);
    const int m = bm.size();

    // First-fit: same certificate, then sup distance of the full matrices.
    Germ* home = nullptr;
    for (Germ& c : clusters) {
      if (c.code != bc.code) continue;
      double dev = 0.0;
      for (std::size_t i = 0; i < bm.m.size(); ++i)
        dev = std::max(dev, std::fabs(bm.m[i] - c.entries[i]));
      if (dev <= tol) {
        home = &c;
        break;
      }
    }
    if (home == nullptr) {
      Germ g;
      g.code = std::move(bc.code);
      g.ball = std::move(bc.ball);
      g.entries = bm.m;
      g.witnesses = {t};
      g.deviations.assign(radius + 1, 0.0);
      g.radius = radius;
      clusters.push_back(std::move(g));
    } else {
      home->witnesses.push_back(t);
      for (int r = 0; r <= radius; ++r) {
        const int pr = home->ball.prefix_size(r);
        double dev = 0.0;
        for (int p = 0; p < pr; ++p) {
          for (int q = 0; q < pr; ++q) {
            dev = std::max(dev,
                           std::fabs(bm.m[static_cast<std::size_t>(p) * m + q] - home->at(p, q)));
          }
        }
        home->deviations[r] = std::max(home->deviations[r], dev);
      }
    }
  }

  for (Germ& c : clusters) {
    if (static_cast<int>(c.witnesses.size()) >= min_witnesses) {
      report.germs.push_back(std::move(c));
    } else {
      report.unmatched.insert(report.unmatched.end(), c.witnesses.begin(), c.witnesses.end());
    }
  }
  std::sort(report.unmatched.begin(), report.unmatched.end());
  return report;
}

GermClass classify_germ(const Germ& germ, int d) {
  if (d < 2) throw std::invalid_argument("classify_germ: degree must be at least 2");
  const Graph& s = germ.ball.shape;
  const int n = s.num_vertices();
  if (germ.radius == 0 || n <= 1) return GermClass::unknown;

  const bool acyclic = s.num_edges() == n - 1;  // ball shapes are connected
  int max_deg = 0;
  int heavy = 0;  // vertices of degree d+1
  for (int p = 0; p < n; ++p) {
    const int deg = s.degree(p);
    max_deg = std::max(max_deg, deg);
    if (deg == d + 1) ++heavy;
  }
  bool interior_all_two = true, interior_all_d = true, interior_joint = true;
  for (int p = 0; p < n; ++p) {
    if (germ.ball.layer[p] >= germ.radius) continue;
    const int deg = s.degree(p);
    if (deg != 2) interior_all_two = false;
    if (deg != d) interior_all_d = false;
    if (deg != 2 && deg != d && deg != d + 1) interior_joint = false;
  }

  if (acyclic && max_deg <= 2 && interior_all_two) return GermClass::line;
  if (acyclic && max_deg <= d && interior_all_d) return GermClass::tree;
  if (heavy == 1 && max_deg == d + 1 && interior_joint) return GermClass::glued;
  return GermClass::unknown;
}

std::vector<double> transplant(const Germ& germ, const JacobiOperator& h, int center,
                               const std::vector<double>& phi, const std::vector<int>& boundary) {
  if (static_cast<int>(phi.size()) != germ.size())
    throw std::invalid_argument("transplant: vector size must match the germ ball");
  const BallCode bc = ball_code(h.g, center, germ.radius, boundary);
  if (bc.code != germ.code)
    throw std::invalid_argument("transplant: center ball is not isomorphic to the germ");
  std::vector<double> chi(h.g.num_vertices(), 0.0);
  for (int p = 0; p < germ.size(); ++p) chi[bc.ball.order[p]] = phi[p];
  return chi;
}

AncestorTrace ancestors_sequence(const JacobiOperator& h, const PathToInfinity& path,
                                 const Germ& germ, const std::vector<int>& boundary) {
  AncestorTrace tr;
  for (int t : germ.witnesses) {
    const BallCode bc = ball_code(h.g, path.vertices[t], germ.radius, boundary);
    const int len = std::min(germ.radius, t) + 1;
    std::vector<int> row(len, -1);
    for (int s = 0; s < len; ++s) {
      const int v = path.vertices[t - s];
      for (int p = 0; p < bc.ball.size(); ++p) {
        if (bc.ball.order[p] == v) {
          row[s] = p;
          break;
        }
      }
      if (row[s] < 0) throw std::logic_error("ancestors_sequence: ancestor not in ball");
    }
    tr.positions.push_back(std::move(row));
  }
  tr.consistent = true;
  for (std::size_t i = 1; i < tr.positions.size(); ++i) {
    const auto& a = tr.positions[0];
    const auto& b = tr.positions[i];
    const std::size_t common = std::min(a.size(), b.size());
    for (std::size_t s = 0; s < common; ++s) {
      if (a[s] != b[s]) tr.consistent = false;
    }
  }
  return tr;
}

SpectrumResult union_of_germ_spectra(const GermReport& report, double tol) {
  if (tol < 0.0) throw std::invalid_argument("union_of_germ_spectra: negative tolerance");
  SpectrumResult res;
  res.tol = tol;
  res.radius = report.radius;
  for (std::size_t gi = 0; gi < report.germs.size(); ++gi) {
    const Germ& germ = report.germs[gi];
    const int n = germ.size();
    const int block = germ.radius >= 1 ? germ.ball.prefix_size(germ.radius - 1) : n;
    const CertifiedSet cs = principal_block_certified(germ.entries, n, block);
    for (const CertifiedValue& cv : cs) {
      res.entries.push_back(
          {cv.lambda, cv.residual, static_cast<int>(gi), cv.residual <= tol});
    }
  }
  std::sort(res.entries.begin(), res.entries.end(),
            [](const SpectrumEntry& x, const SpectrumEntry& y) {
              if (x.lambda != y.lambda) return x.lambda < y.lambda;
              return x.center < y.center;
            });
  return res;
}

CounterexampleExperiment counterexample_experiment(int degree, int num_blocks, int radius,
                                                  double germ_tol, int min_witnesses,
                                                  int spacing) {
  CounterexampleExperiment ex;
  ex.plan = default_gluing_plan(degree, num_blocks, spacing);
  ex.cx = build_counterexample(ex.plan);
  ex.op = adjacency_operator(ex.cx.g);
  ex.path = validate_path(ex.cx.g, ex.cx.canonical_path);
  const std::vector<int> boundary = {ex.cx.frontier};
  const int n = ex.cx.g.num_vertices();

  // Uniform unit vectors on each block: the only rows (H - d) phi misses are
  // the two half-line vertices next to the bridge, giving exactly sqrt(2/n_i).
  int largest = -1;
  std::vector<double> largest_phi;
  for (const PlacedBlock& pb : ex.cx.blocks) {
    std::vector<double> phi(n, 0.0);
    const double val = 1.0 / std::sqrt(static_cast<double>(pb.size));
    for (int v = pb.offset; v < pb.offset + pb.size; ++v) phi[v] = val;
    ex.block_sizes.push_back(pb.size);
    ex.block_residuals.push_back(vector_residual(ex.op, degree, phi));
    if (largest < 0 || pb.size > ex.cx.blocks[largest].size) {
      largest = static_cast<int>(ex.block_sizes.size()) - 1;
      largest_phi = std::move(phi);
    }
  }

  ex.germs = detect_germs(ex.op, ex.path, radius, germ_tol, min_witnesses, boundary);
  for (const Germ& g : ex.germs.germs) ex.classes.push_back(classify_germ(g, degree));

  // Interior compressions of small-radius germs certify with O(1) residuals;
  // 1.5 covers the worst case sqrt(2) here, so every value they can reach is
  // accepted and max_certified records how high that is.
  const double union_tol = 1.5;
  ex.germ_union = union_of_germ_spectra(ex.germs, union_tol);
  for (const SpectrumEntry& e : ex.germ_union.entries) {
    if (e.accepted) ex.max_certified = std::max(ex.max_certified, e.lambda);
  }

  if (largest >= 0) {
    const double eps = std::sqrt(2.0 / ex.cx.blocks[largest].size) + 1e-9;
    ex.weyl_at_d = weyl_check(ex.op, static_cast<double>(degree), {largest_phi}, eps);
  }
  return ex;
}

}  // namespace spectra
