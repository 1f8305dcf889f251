#pragma once

#include <cstdint>
#include <string_view>

#include "bilin/graph.hpp"

namespace bilin {

/// Largest |X| accepted by the exhaustive cut oracles (2^25 distinct cuts).
inline constexpr int kMaxEnumerationSize = 26;

/// An extreme cut value with an attaining witness.
struct CutOptimum {
  double value = 0.0;
  Cut witness;
};

/// Both mu^+(X) and mu^-(X) from a single enumeration pass.
struct CutExtremes {
  CutOptimum max;
  CutOptimum min;
};

/// Exact max and min signed cut weights of the subgraph induced by X,
/// empty cut included. Enumerates all 2^(|X|-1) distinct cuts in Gray-code
/// order. Witnesses are canonical: the smaller side of the cut (the smaller
/// bitmask when both sides have equal size); among equal-weight cuts the
/// smallest canonical bitmask wins.
CutExtremes cut_extremes(const SignedWeightedGraph& g, VertexSubset x);

CutOptimum max_cut_bruteforce(const SignedWeightedGraph& g, VertexSubset x);
CutOptimum min_cut_bruteforce(const SignedWeightedGraph& g, VertexSubset x);

struct Bipartition {
  VertexSubset left;
  VertexSubset right;
};

/// Partition V = L ∪ R whose crossing |a|-weight is at least half the total
/// |a|-weight. Deterministic local search: starting from L = V, flip the
/// lowest-labelled vertex with strictly more non-crossing than crossing
/// |a|-weight until none remains. Vertex 1 always ends up in L.
Bipartition half_weight_partition(const SignedWeightedGraph& g);

enum class CutCase { case1, case2, case3, brute_fallback };

std::string_view to_string(CutCase c);

struct CutSearchResult {
  Cut cut;                         // ground set is V
  double bound = 0.0;              // sum|a| / (600 sqrt n)
  bool meets_guarantee = false;    // |cut.weight| >= bound
  int trials_used = 0;             // number of S-draws
  CutCase case_taken = CutCase::case1;
  bool sampling_succeeded = false; // some draw reached sum|a| / (200 sqrt n)
  double sampling_score = 0.0;     // best sum_{j in R} |sum_{i in S} a_ij| seen
};

inline constexpr int kDefaultTrialBudget = 1000;

/// Randomized large-cut search. Splits V into a half-weight partition (L, R),
/// draws S ⊆ L uniformly until sum_{j in R} |sum_{i in S} a_ij| reaches
/// sum|a| / (200 sqrt n), splits R by the sign of the column sums and returns
/// S, R_side or S ∪ R_side depending on the weight those sets send into the
/// remaining vertices. When sampling succeeded the returned cut is guaranteed
/// to satisfy |weight| >= sum|a| / (600 sqrt n); a violation throws
/// InvariantError. When the budget runs out, graphs with n <= 26 fall back to
/// exhaustive search.
CutSearchResult find_large_cut(const SignedWeightedGraph& g, std::uint64_t rng_seed,
                               int trial_budget = kDefaultTrialBudget);

}  // namespace bilin
