#pragma once

// Test-only reference routines. Deliberately naive and independent of the
// library's enumeration and LP code paths.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <random>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "bilin/graph.hpp"

namespace oracle {

using bilin::Edge;
using bilin::SignedWeightedGraph;

inline bool in(std::uint64_t mask, int v) { return (mask >> (v - 1)) & 1U; }

/// a(δ(U, X\U)) by scanning the edge list.
inline double cut(const SignedWeightedGraph& g, std::uint64_t x, std::uint64_t u) {
  double s = 0.0;
  for (const Edge& e : g.edges()) {
    if (!in(x, e.i) || !in(x, e.j)) continue;
    if (in(u, e.i) != in(u, e.j)) s += e.a;
  }
  return s;
}

inline double gamma(const SignedWeightedGraph& g, std::uint64_t x) {
  double s = 0.0;
  for (const Edge& e : g.edges()) {
    if (in(x, e.i) && in(x, e.j)) s += e.a;
  }
  return s;
}

inline double gamma_abs(const SignedWeightedGraph& g, std::uint64_t x) {
  double s = 0.0;
  for (const Edge& e : g.edges()) {
    if (in(x, e.i) && in(x, e.j)) s += std::abs(e.a);
  }
  return s;
}

/// (mu^+, mu^-) over every subset U ⊆ X, both orientations included.
inline std::pair<double, double> mu(const SignedWeightedGraph& g, std::uint64_t x) {
  double hi = 0.0, lo = 0.0;
  // Standard submask enumeration.
  for (std::uint64_t u = x;; u = (u - 1) & x) {
    const double c = cut(g, x, u);
    hi = std::max(hi, c);
    lo = std::min(lo, c);
    if (u == 0) break;
  }
  return {hi, lo};
}

/// b at a 0/1 vertex given as a mask.
inline double b_vertex(const SignedWeightedGraph& g, std::uint64_t v) { return gamma(g, v); }

/// (cav, vex) by enumerating every basis of the full vertex LP
///   {λ >= 0, sum λ = 1, sum λ_k x^k = x}
/// over all 2^n cube vertices and keeping the feasible basic solutions.
/// Exponential in a binomial; only for n <= 4.
inline std::pair<double, double> hull_by_basis_enumeration(const SignedWeightedGraph& g, const Eigen::VectorXd& x) {
  const int n = g.n();
  const int cols = 1 << n;
  const int rows = n + 1;
  Eigen::MatrixXd a(rows, cols);
  Eigen::VectorXd c(cols);
  for (int k = 0; k < cols; ++k) {
    a(0, k) = 1.0;
    for (int i = 0; i < n; ++i) a(i + 1, k) = (k >> i) & 1;
    c(k) = b_vertex(g, static_cast<std::uint64_t>(k));
  }
  Eigen::VectorXd rhs(rows);
  rhs(0) = 1.0;
  rhs.tail(n) = x;

  double best_max = -std::numeric_limits<double>::infinity();
  double best_min = std::numeric_limits<double>::infinity();
  std::vector<int> pick(static_cast<std::size_t>(rows));
  // Iterate over all `rows`-combinations of columns.
  std::vector<bool> sel(static_cast<std::size_t>(cols), false);
  std::fill(sel.begin(), sel.begin() + rows, true);
  do {
    int p = 0;
    for (int k = 0; k < cols; ++k) {
      if (sel[static_cast<std::size_t>(k)]) pick[static_cast<std::size_t>(p++)] = k;
    }
    Eigen::MatrixXd basis(rows, rows);
    for (int r = 0; r < rows; ++r) basis.col(r) = a.col(pick[static_cast<std::size_t>(r)]);
    Eigen::FullPivLU<Eigen::MatrixXd> lu(basis);
    if (!lu.isInvertible()) continue;
    const Eigen::VectorXd lam = lu.solve(rhs);
    if ((lam.array() < -1e-12).any()) continue;
    double obj = 0.0;
    for (int r = 0; r < rows; ++r) obj += lam(r) * c(pick[static_cast<std::size_t>(r)]);
    best_max = std::max(best_max, obj);
    best_min = std::min(best_min, obj);
  } while (std::prev_permutation(sel.begin(), sel.end()));
  return {best_max, best_min};
}

/// Extreme of a * y over the per-edge McCormick set at fixed (xi, xj),
/// found by testing candidate breakpoints against the raw constraints.
inline std::pair<double, double> mccormick_edge_range(double a, double xi, double xj) {
  const double candidates[] = {0.0, 1.0, xi, xj, xi + xj - 1.0};
  double hi = -std::numeric_limits<double>::infinity(), lo = std::numeric_limits<double>::infinity();
  for (double y : candidates) {
    const bool feasible = y >= -1e-15 && y <= 1.0 + 1e-15 && y <= xi + 1e-15 && y <= xj + 1e-15 &&
                          y >= xi + xj - 1.0 - 1e-15;
    if (!feasible) continue;
    hi = std::max(hi, a * y);
    lo = std::min(lo, a * y);
  }
  return {hi, lo};
}

/// Random graph with integer weights in [-5, 5] \ {0}, edge probability p.
inline SignedWeightedGraph random_graph(int n, std::mt19937_64& rng, double p = 0.6) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> mag(1, 5);
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (coin(rng) < p) edges.push_back({i, j, (coin(rng) < 0.5 ? -1.0 : 1.0) * mag(rng)});
    }
  }
  return SignedWeightedGraph(n, std::move(edges));
}

}  // namespace oracle
