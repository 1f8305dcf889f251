#include "bilin/cuts.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <string>
#include <vector>

namespace bilin {

namespace {

// Slack used by the threshold comparisons so boundary cases never fail.
constexpr double kThresholdSlack = 1e-12;

std::uint64_t canonical_side(std::uint64_t side, std::uint64_t ground) {
  const std::uint64_t other = ground & ~side;
  const int s = std::popcount(side);
  const int o = std::popcount(other);
  if (s != o) return s < o ? side : other;
  return std::min(side, other);
}

}  // namespace

CutExtremes cut_extremes(const SignedWeightedGraph& g, VertexSubset x) {
  require_vertices(g, x);
  const int k = x.size();
  if (k > kMaxEnumerationSize) {
    throw CapacityError("exhaustive cut enumeration limited to " + std::to_string(kMaxEnumerationSize) +
                        " vertices, got " + std::to_string(k));
  }
  const std::vector<int> members = x.members();
  const auto ku = static_cast<std::size_t>(k);

  std::vector<double> w(ku * ku, 0.0);
  std::vector<double> row_total(ku, 0.0);
  for (std::size_t p = 0; p < ku; ++p) {
    for (std::size_t q = 0; q < ku; ++q) {
      w[p * ku + q] = g.weight(members[p], members[q]);
      row_total[p] += w[p * ku + q];
    }
  }

  // in_side[p] = sum of a_{p,q} over q currently on side U.
  std::vector<double> in_side(ku, 0.0);
  std::vector<char> on_side(ku, 0);
  std::uint64_t side_mask = 0;  // global bitmask of U
  double current = 0.0;

  double best_max = 0.0, best_min = 0.0;
  std::uint64_t max_mask = 0, min_mask = 0;  // canonical witnesses; empty cut

  // The highest member stays off U, so each unordered cut is visited once.
  const std::uint64_t steps = k <= 1 ? 1 : (std::uint64_t{1} << (k - 1));
  for (std::uint64_t s = 1; s < steps; ++s) {
    const auto p = static_cast<std::size_t>(std::countr_zero(s));
    const double* wp = &w[p * ku];
    if (on_side[p]) {
      current += 2.0 * in_side[p] - row_total[p];
      on_side[p] = 0;
      for (std::size_t q = 0; q < ku; ++q) in_side[q] -= wp[q];
    } else {
      current += row_total[p] - 2.0 * in_side[p];
      on_side[p] = 1;
      for (std::size_t q = 0; q < ku; ++q) in_side[q] += wp[q];
    }
    side_mask ^= std::uint64_t{1} << (members[p] - 1);

    if (current >= best_max) {
      const std::uint64_t c = canonical_side(side_mask, x.mask());
      if (current > best_max || c < max_mask) {
        best_max = current;
        max_mask = c;
      }
    }
    if (current <= best_min) {
      const std::uint64_t c = canonical_side(side_mask, x.mask());
      if (current < best_min || c < min_mask) {
        best_min = current;
        min_mask = c;
      }
    }
  }

  // Report recomputed weights so incremental rounding never leaks out.
  Cut max_cut = make_cut(g, x, VertexSubset(max_mask));
  Cut min_cut = make_cut(g, x, VertexSubset(min_mask));
  return {{max_cut.weight, max_cut}, {min_cut.weight, min_cut}};
}

CutOptimum max_cut_bruteforce(const SignedWeightedGraph& g, VertexSubset x) { return cut_extremes(g, x).max; }

CutOptimum min_cut_bruteforce(const SignedWeightedGraph& g, VertexSubset x) { return cut_extremes(g, x).min; }

Bipartition half_weight_partition(const SignedWeightedGraph& g) {
  const int n = g.n();
  const Eigen::MatrixXd abs_w = g.weight_matrix().cwiseAbs();
  std::vector<char> right(static_cast<std::size_t>(n), 0);

  const std::size_t cap = std::max<std::size_t>(static_cast<std::size_t>(n) * g.edge_count(), 1);
  std::size_t moves = 0;
  bool improved = true;
  while (improved && moves < cap) {
    improved = false;
    for (int v = 0; v < n; ++v) {
      double crossing = 0.0, same = 0.0;
      for (int u = 0; u < n; ++u) {
        if (u == v) continue;
        (right[static_cast<std::size_t>(u)] != right[static_cast<std::size_t>(v)] ? crossing : same) += abs_w(v, u);
      }
      if (same > crossing) {
        right[static_cast<std::size_t>(v)] ^= 1;
        improved = true;
        if (++moves >= cap) break;
      }
    }
  }

  Bipartition out;
  const bool flip = right[0] != 0;
  for (int v = 1; v <= n; ++v) {
    const bool in_right = (right[static_cast<std::size_t>(v - 1)] != 0) != flip;
    (in_right ? out.right : out.left).insert(v);
  }

  double crossing = 0.0;
  for (const Edge& e : g.edges()) {
    if (out.left.contains(e.i) != out.left.contains(e.j)) crossing += std::abs(e.a);
  }
  if (2.0 * crossing < g.total_abs_weight() * (1.0 - 1e-12)) {
    throw InvariantError("half-weight partition did not reach half of the total |a|-weight");
  }
  return out;
}

std::string_view to_string(CutCase c) {
  switch (c) {
    case CutCase::case1: return "case1";
    case CutCase::case2: return "case2";
    case CutCase::case3: return "case3";
    case CutCase::brute_fallback: return "brute_fallback";
  }
  return "unknown";
}

CutSearchResult find_large_cut(const SignedWeightedGraph& g, std::uint64_t rng_seed, int trial_budget) {
  if (trial_budget < 1) throw InputError("trial budget must be at least 1");
  const int n = g.n();
  const Eigen::MatrixXd& a = g.weight_matrix();
  const double total = g.total_abs_weight();
  const double root_n = std::sqrt(static_cast<double>(n));
  const double sampling_target = total / (200.0 * root_n);
  const double case_threshold = total / (1200.0 * root_n);

  CutSearchResult result;
  result.bound = total / (600.0 * root_n);

  const Bipartition part = half_weight_partition(g);
  const std::vector<int> left = part.left.members();
  const std::vector<int> right = part.right.members();

  auto column_sums = [&](VertexSubset s) {
    std::vector<double> sums(right.size(), 0.0);
    for (std::size_t r = 0; r < right.size(); ++r) {
      for (int i : s.members()) sums[r] += a(i - 1, right[r] - 1);
    }
    return sums;
  };

  std::mt19937_64 rng(rng_seed);
  VertexSubset best_s;
  double best_score = -1.0;
  for (int t = 0; t < trial_budget; ++t) {
    VertexSubset s;
    for (int i : left) {
      if (rng() & 1U) s.insert(i);
    }
    double score = 0.0;
    for (double c : column_sums(s)) score += std::abs(c);
    result.trials_used = t + 1;
    if (score > best_score) {
      best_score = score;
      best_s = s;
    }
    if (score >= sampling_target - kThresholdSlack) {
      result.sampling_succeeded = true;
      break;
    }
  }
  result.sampling_score = best_score;

  auto finish = [&](VertexSubset u, CutCase c) {
    result.cut = make_cut(g, g.vertices(), u);
    result.case_taken = c;
    result.meets_guarantee = std::abs(result.cut.weight) >= result.bound - kThresholdSlack;
    return result;
  };

  if (!result.sampling_succeeded && n <= kMaxEnumerationSize) {
    const CutExtremes ext = cut_extremes(g, g.vertices());
    const bool use_min = std::abs(ext.min.value) > std::abs(ext.max.value);
    return finish((use_min ? ext.min : ext.max).witness.side, CutCase::brute_fallback);
  }

  // Split R by the sign of sum_{i in S} a_ij; the heavier half becomes the
  // working side, and for R_- all signs are flipped.
  const std::vector<double> sums = column_sums(best_s);
  VertexSubset r_plus, r_minus;
  double plus_mass = 0.0, minus_mass = 0.0;
  for (std::size_t r = 0; r < right.size(); ++r) {
    if (sums[r] >= 0.0) {
      r_plus.insert(right[r]);
      plus_mass += sums[r];
    } else {
      r_minus.insert(right[r]);
      minus_mass -= sums[r];
    }
  }
  const bool use_minus = minus_mass > plus_mass;
  const double sign = use_minus ? -1.0 : 1.0;
  const VertexSubset r_side = use_minus ? r_minus : r_plus;
  const VertexSubset rest = g.vertices() - (best_s | r_side);

  CutCase chosen;
  VertexSubset u;
  if (sign * between_weight(g, best_s, rest) >= -case_threshold - kThresholdSlack) {
    chosen = CutCase::case1;
    u = best_s;
  } else if (sign * between_weight(g, r_side, rest) >= -case_threshold - kThresholdSlack) {
    chosen = CutCase::case2;
    u = r_side;
  } else {
    chosen = CutCase::case3;
    u = best_s | r_side;
  }
  finish(u, chosen);

  if (result.sampling_succeeded && !result.meets_guarantee) {
    throw InvariantError("large-cut guarantee violated: |weight| " + std::to_string(std::abs(result.cut.weight)) +
                         " < bound " + std::to_string(result.bound) + " although sampling succeeded");
  }
  return result;
}

}  // namespace bilin
