#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "bilin/errors.hpp"

namespace bilin {

/// Largest vertex count representable by a VertexSubset bitmask.
inline constexpr int kMaxVertices = 63;

/// Set of 1-based vertex labels stored as a bitmask (vertex i <-> bit i-1).
class VertexSubset {
 public:
  constexpr VertexSubset() = default;
  constexpr explicit VertexSubset(std::uint64_t mask) : mask_(mask) {}
  VertexSubset(std::initializer_list<int> vertices) {
    for (int v : vertices) insert(v);
  }

  static VertexSubset all(int n) {
    if (n < 0 || n > kMaxVertices) throw CapacityError("vertex count exceeds bitmask capacity");
    return VertexSubset(n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n)));
  }
  static VertexSubset from_vertices(std::span<const int> vertices) {
    VertexSubset s;
    for (int v : vertices) s.insert(v);
    return s;
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr bool contains(int v) const { return v >= 1 && v <= kMaxVertices && ((mask_ >> (v - 1)) & 1U); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  /// Largest member, or 0 when empty.
  constexpr int max_vertex() const { return mask_ == 0 ? 0 : 64 - std::countl_zero(mask_); }
  constexpr int min_vertex() const { return mask_ == 0 ? 0 : std::countr_zero(mask_) + 1; }

  void insert(int v) {
    if (v < 1 || v > kMaxVertices) throw InputError("vertex label out of bitmask range: " + std::to_string(v));
    mask_ |= std::uint64_t{1} << (v - 1);
  }
  void erase(int v) {
    if (v >= 1 && v <= kMaxVertices) mask_ &= ~(std::uint64_t{1} << (v - 1));
  }

  constexpr bool is_subset_of(VertexSubset other) const { return (mask_ & ~other.mask_) == 0; }

  /// Members in ascending order.
  std::vector<int> members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for (std::uint64_t m = mask_; m != 0; m &= m - 1) out.push_back(std::countr_zero(m) + 1);
    return out;
  }

  friend constexpr VertexSubset operator|(VertexSubset a, VertexSubset b) { return VertexSubset(a.mask_ | b.mask_); }
  friend constexpr VertexSubset operator&(VertexSubset a, VertexSubset b) { return VertexSubset(a.mask_ & b.mask_); }
  /// Set difference.
  friend constexpr VertexSubset operator-(VertexSubset a, VertexSubset b) { return VertexSubset(a.mask_ & ~b.mask_); }
  friend constexpr bool operator==(VertexSubset, VertexSubset) = default;

 private:
  std::uint64_t mask_ = 0;
};

struct Edge {
  int i = 0;  // i < j
  int j = 0;
  double a = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Undirected graph on vertices 1..n with nonzero real edge weights a_ij.
/// Immutable after construction; edges are stored canonically (i < j) in
/// lexicographic order. A dense symmetric weight matrix is kept alongside
/// for the cut enumerations.
class SignedWeightedGraph {
 public:
  /// Throws InputError on self-loops, zero or non-finite weights, duplicate
  /// edges, or labels outside 1..n; CapacityError when n > 63.
  SignedWeightedGraph(int n, std::vector<Edge> edges);

  int n() const { return n_; }
  std::span<const Edge> edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }
  VertexSubset vertices() const { return VertexSubset::all(n_); }

  /// a_ij for 1-based labels, 0 when ij is not an edge.
  double weight(int i, int j) const { return weights_(i - 1, j - 1); }
  /// Dense symmetric weight matrix (0-based, zero diagonal).
  const Eigen::MatrixXd& weight_matrix() const { return weights_; }

  /// Sum of |a_ij| over all edges.
  double total_abs_weight() const { return total_abs_; }

  /// Same structure with every weight multiplied by t (t != 0).
  SignedWeightedGraph scaled(double t) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  Eigen::MatrixXd weights_;
  double total_abs_ = 0.0;
};

/// A cut (U, X\U) of the subgraph induced by `ground_set`.
struct Cut {
  VertexSubset ground_set;
  VertexSubset side;
  double weight = 0.0;
};

/// a(gamma(X)): sum of a_ij over edges with both endpoints in X.
double gamma_weight(const SignedWeightedGraph& g, VertexSubset x);

/// Sum of |a_ij| over gamma(X).
double gamma_abs_weight(const SignedWeightedGraph& g, VertexSubset x);

/// a(delta(U, X\U)) restricted to edges inside X. Requires U ⊆ X.
double cut_weight(const SignedWeightedGraph& g, VertexSubset x, VertexSubset u);

/// a(delta(X, Y)) for disjoint X, Y.
double between_weight(const SignedWeightedGraph& g, VertexSubset x, VertexSubset y);

/// Builds a Cut, recomputing its weight.
Cut make_cut(const SignedWeightedGraph& g, VertexSubset ground_set, VertexSubset side);

/// Throws InputError unless every member of X is a vertex of g.
void require_vertices(const SignedWeightedGraph& g, VertexSubset x);

}  // namespace bilin
