#pragma once

#include <string>
#include <vector>

#include "spectra/graph.hpp"

namespace spectra {

struct RootedBall {
  int center = -1;  // graph id
  int radius = 0;
  std::vector<int> order;  // graph ids in enumeration order; order[0] == center
  std::vector<int> layer;  // layer[p] = dist(center, order[p])
  // layer_offsets[r] is the first position of layer r; layer_offsets back()
  // is the ball size, so positions [0, layer_offsets[r+1]) form B_r.
  std::vector<int> layer_offsets;
  Graph shape;  // induced ball graph on positions
  bool clipped = false;

  int size() const { return static_cast<int>(order.size()); }
  // Number of positions within radius r of the center.
  int prefix_size(int r) const { return layer_offsets[std::min<int>(r + 1, layer_offsets.size() - 1)]; }
};

// Layered enumeration whose radius-r result is a prefix of the radius-R
// result for r < R. Layer l is ordered by stable refinement colors computed
// inside B_l only, then by the positions of already-placed neighbors, then by
// vertex id. The id tie-break means the order is only canonical up to what
// layered refinement can distinguish.
RootedBall coherent_enumeration(const Graph& g, int center, int radius,
                                const std::vector<int>& boundary = {});

struct BallCode {
  std::string code;  // equal iff the rooted balls are isomorphic as rooted graphs
  RootedBall ball;   // canonical layer-major order
};

// Standalone canonical certificate of the rooted ball. Acyclic balls go
// through rooted-subtree codes; cyclic balls through an
// individualization-refinement search for the minimum certificate. Unlike
// coherent_enumeration this is fully label-invariant, but it is not
// prefix-stable across radii.
BallCode ball_code(const Graph& g, int center, int radius,
                   const std::vector<int>& boundary = {});

}  // namespace spectra
