#include "bilin/hull_check.hpp"

#include <algorithm>
#include <cmath>
#include <deque>

#include "bilin/cuts.hpp"

namespace bilin {

namespace {

struct Neighbor {
  int vertex;  // 0-based
  double weight;
};

using Adjacency = std::vector<std::vector<Neighbor>>;

Adjacency build_adjacency(const SignedWeightedGraph& g) {
  Adjacency adj(static_cast<std::size_t>(g.n()));
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.i - 1)].push_back({e.j - 1, e.a});
    adj[static_cast<std::size_t>(e.j - 1)].push_back({e.i - 1, e.a});
  }
  for (auto& list : adj) {
    std::sort(list.begin(), list.end(), [](const Neighbor& l, const Neighbor& r) { return l.vertex < r.vertex; });
  }
  return adj;
}

// Required label difference across an edge: 0 = same class, 1 = different.
int required_parity(double weight, ColoringKind kind) {
  const bool positive = weight > 0;
  return (kind == ColoringKind::positive) == positive ? 0 : 1;
}

std::vector<int> normalize_cycle(std::vector<int> cycle) {
  auto min_it = std::min_element(cycle.begin(), cycle.end());
  std::rotate(cycle.begin(), min_it, cycle.end());
  if (cycle.size() > 2 && cycle.back() < cycle[1]) std::reverse(cycle.begin() + 1, cycle.end());
  return cycle;
}

struct ColoringAttempt {
  std::optional<Coloring> labels;
  std::optional<ViolatingCycle> cycle;
};

ColoringAttempt try_coloring(const SignedWeightedGraph& g, const Adjacency& adj, ColoringKind kind) {
  const auto n = static_cast<std::size_t>(g.n());
  Coloring label(n, -1);
  std::vector<int> parent(n, -1), depth(n, 0);

  for (std::size_t root = 0; root < n; ++root) {
    if (label[root] != -1) continue;
    label[root] = 0;
    std::deque<int> queue{static_cast<int>(root)};
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (const Neighbor& nb : adj[static_cast<std::size_t>(u)]) {
        const auto v = static_cast<std::size_t>(nb.vertex);
        const int want = label[static_cast<std::size_t>(u)] ^ required_parity(nb.weight, kind);
        if (label[v] == -1) {
          label[v] = want;
          parent[v] = u;
          depth[v] = depth[static_cast<std::size_t>(u)] + 1;
          queue.push_back(nb.vertex);
        } else if (label[v] != want) {
          // Join the two tree paths at their lowest common ancestor.
          std::vector<int> up_u, up_v;
          int x = u, y = nb.vertex;
          while (depth[static_cast<std::size_t>(x)] > depth[static_cast<std::size_t>(y)]) {
            up_u.push_back(x);
            x = parent[static_cast<std::size_t>(x)];
          }
          while (depth[static_cast<std::size_t>(y)] > depth[static_cast<std::size_t>(x)]) {
            up_v.push_back(y);
            y = parent[static_cast<std::size_t>(y)];
          }
          while (x != y) {
            up_u.push_back(x);
            up_v.push_back(y);
            x = parent[static_cast<std::size_t>(x)];
            y = parent[static_cast<std::size_t>(y)];
          }
          std::vector<int> cycle = up_u;
          cycle.push_back(x);
          cycle.insert(cycle.end(), up_v.rbegin(), up_v.rend());
          for (int& c : cycle) c += 1;

          ViolatingCycle out{normalize_cycle(std::move(cycle)), 0, 0};
          for (std::size_t k = 0; k < out.vertices.size(); ++k) {
            const int a = out.vertices[k], b = out.vertices[(k + 1) % out.vertices.size()];
            (g.weight(a, b) > 0 ? out.positive_edges : out.negative_edges) += 1;
          }
          return {std::nullopt, std::move(out)};
        }
      }
    }
  }
  return {std::move(label), std::nullopt};
}

}  // namespace

HullExactness check_hull_exact(const SignedWeightedGraph& g) {
  const Adjacency adj = build_adjacency(g);
  ColoringAttempt pos = try_coloring(g, adj, ColoringKind::positive);
  ColoringAttempt neg = try_coloring(g, adj, ColoringKind::negative);

  HullExactness out;
  out.exact = pos.labels.has_value() && neg.labels.has_value();
  out.positive_coloring = std::move(pos.labels);
  out.negative_coloring = std::move(neg.labels);
  out.violating_cycle = pos.cycle ? std::move(pos.cycle) : std::move(neg.cycle);
  return out;
}

bool coloring_is_valid(const SignedWeightedGraph& g, const Coloring& labels, ColoringKind kind) {
  if (static_cast<int>(labels.size()) != g.n()) return false;
  if (std::any_of(labels.begin(), labels.end(), [](int l) { return l != 0 && l != 1; })) return false;
  return std::all_of(g.edges().begin(), g.edges().end(), [&](const Edge& e) {
    const int diff = labels[static_cast<std::size_t>(e.i - 1)] ^ labels[static_cast<std::size_t>(e.j - 1)];
    return diff == required_parity(e.a, kind);
  });
}

bool verify_exactness_numerically(const SignedWeightedGraph& g, VertexSubset x) {
  const CutExtremes ext = cut_extremes(g, x);
  const double abs_sum = gamma_abs_weight(g, x);
  return std::abs((ext.max.value - ext.min.value) - abs_sum) <= 1e-9 * std::max(1.0, abs_sum);
}

}  // namespace bilin
