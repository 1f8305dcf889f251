#pragma once

#include <optional>
#include <vector>

#include "bilin/graph.hpp"

namespace bilin {

/// Labels indexed by vertex-1, each 0 or 1.
using Coloring = std::vector<int>;

struct ViolatingCycle {
  std::vector<int> vertices;  // simple cycle, starts at its smallest vertex
  int positive_edges = 0;
  int negative_edges = 0;
};

/// Outcome of the cycle-parity test for Q = conv(B).
///
/// positive_coloring keeps every positive edge monochromatic and makes every
/// negative edge bichromatic (exists iff each cycle has an even number of
/// negative edges); negative_coloring is the mirror image. Both exist iff
/// the McCormick relaxation is the convex hull.
struct HullExactness {
  bool exact = false;
  std::optional<Coloring> positive_coloring;
  std::optional<Coloring> negative_coloring;
  std::optional<ViolatingCycle> violating_cycle;
};

enum class ColoringKind { positive, negative };

/// Linear-time decision by breadth-first 2-coloring of each connected
/// component (smallest-index roots, neighbours ascending). On failure the
/// first label conflict yields a simple cycle with an odd count of positive
/// or negative edges.
HullExactness check_hull_exact(const SignedWeightedGraph& g);

/// Edge-by-edge validation of a coloring of the given kind.
bool coloring_is_valid(const SignedWeightedGraph& g, const Coloring& labels, ColoringKind kind);

/// mu^+(X) - mu^-(X) == sum_{γ(X)} |a_ij| (relative tolerance 1e-9), by
/// exhaustive cut enumeration. |X| <= 26.
bool verify_exactness_numerically(const SignedWeightedGraph& g, VertexSubset x);

}  // namespace bilin
