#include "bilin/graph.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace bilin {

SignedWeightedGraph::SignedWeightedGraph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 1) throw InputError("graph needs at least one vertex");
  if (n > kMaxVertices) throw CapacityError("graph has " + std::to_string(n) + " vertices, cap is 63");

  for (Edge& e : edges_) {
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i == e.j) throw InputError("self-loop at vertex " + std::to_string(e.i));
    if (e.i < 1 || e.j > n) {
      throw InputError("edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ") outside 1.." +
                       std::to_string(n));
    }
    if (!std::isfinite(e.a)) throw InputError("non-finite edge weight");
    if (e.a == 0.0) {
      throw InputError("zero weight on edge (" + std::to_string(e.i) + "," + std::to_string(e.j) + ")");
    }
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& l, const Edge& r) {
    return l.i != r.i ? l.i < r.i : l.j < r.j;
  });
  auto dup = std::adjacent_find(edges_.begin(), edges_.end(),
                                [](const Edge& l, const Edge& r) { return l.i == r.i && l.j == r.j; });
  if (dup != edges_.end()) {
    throw InputError("duplicate edge (" + std::to_string(dup->i) + "," + std::to_string(dup->j) + ")");
  }

  weights_ = Eigen::MatrixXd::Zero(n, n);
  for (const Edge& e : edges_) {
    weights_(e.i - 1, e.j - 1) = e.a;
    weights_(e.j - 1, e.i - 1) = e.a;
    total_abs_ += std::abs(e.a);
  }
}

SignedWeightedGraph SignedWeightedGraph::scaled(double t) const {
  std::vector<Edge> out(edges_.begin(), edges_.end());
  for (Edge& e : out) e.a *= t;
  return SignedWeightedGraph(n_, std::move(out));
}

void require_vertices(const SignedWeightedGraph& g, VertexSubset x) {
  if (!x.is_subset_of(g.vertices())) {
    throw InputError("vertex " + std::to_string(x.max_vertex()) + " outside graph with n=" + std::to_string(g.n()));
  }
}

double gamma_weight(const SignedWeightedGraph& g, VertexSubset x) {
  require_vertices(g, x);
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.i) && x.contains(e.j)) sum += e.a;
  }
  return sum;
}

double gamma_abs_weight(const SignedWeightedGraph& g, VertexSubset x) {
  require_vertices(g, x);
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.i) && x.contains(e.j)) sum += std::abs(e.a);
  }
  return sum;
}

double between_weight(const SignedWeightedGraph& g, VertexSubset x, VertexSubset y) {
  require_vertices(g, x | y);
  if (!(x & y).empty()) throw InputError("delta(X, Y) needs disjoint sets");
  double sum = 0.0;
  for (const Edge& e : g.edges()) {
    if ((x.contains(e.i) && y.contains(e.j)) || (y.contains(e.i) && x.contains(e.j))) sum += e.a;
  }
  return sum;
}

double cut_weight(const SignedWeightedGraph& g, VertexSubset x, VertexSubset u) {
  require_vertices(g, x);
  if (!u.is_subset_of(x)) throw InputError("cut side is not contained in its ground set");
  return between_weight(g, u, x - u);
}

Cut make_cut(const SignedWeightedGraph& g, VertexSubset ground_set, VertexSubset side) {
  return Cut{ground_set, side, cut_weight(g, ground_set, side)};
}

}  // namespace bilin
