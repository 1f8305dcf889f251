#include "bilin/instances.hpp"

#include <bit>
#include <random>

#include "bilin/graph_io.hpp"

namespace bilin {

namespace {

// Above the bitmask capacity is a capacity error; anything else out of range is bad input.
void require_range(int n, int lo, int hi, const char* what) {
  if (n >= lo && n <= hi) return;
  const std::string msg =
      std::string(what) + " must lie in [" + std::to_string(lo) + ", " + std::to_string(hi) + "], got " + std::to_string(n);
  if (n > hi) throw CapacityError(msg);
  throw InputError(msg);
}

int check_sign(int s) {
  if (s != 1 && s != -1) throw InputError("signs must be +1 or -1");
  return s;
}

}  // namespace

SignedWeightedGraph random_pm1_complete(int n, std::uint64_t seed) {
  require_range(n, 2, kMaxVertices, "n");
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(n * (n - 1) / 2));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) edges.push_back({i, j, sign_from_draw(rng())});
  }
  return SignedWeightedGraph(n, std::move(edges));
}

SignedWeightedGraph hadamard_instance(int n) {
  require_range(n, 2, kMaxVertices, "n");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      const auto inner = std::popcount(static_cast<unsigned>((i - 1) & (j - 1)));
      edges.push_back({i, j, (inner % 2 == 0) ? 1.0 : -1.0});
    }
  }
  return SignedWeightedGraph(n, std::move(edges));
}

SignedWeightedGraph random_pm1_bipartite(int n_per_side, std::uint64_t seed) {
  require_range(n_per_side, 1, kMaxVertices / 2, "n_per_side");
  const int m = n_per_side;
  std::mt19937_64 rng(seed);
  std::vector<Edge> edges;
  for (int i = 1; i <= m; ++i) {
    for (int j = m + 1; j <= 2 * m; ++j) edges.push_back({i, j, sign_from_draw(rng())});
  }
  return SignedWeightedGraph(2 * m, std::move(edges));
}

SignedWeightedGraph signed_cycle(int n, const std::vector<int>& signs) {
  require_range(n, 3, kMaxVertices, "cycle length");
  if (static_cast<int>(signs.size()) != n) throw InputError("cycle needs exactly n signs");
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({i, i == n ? 1 : i + 1, static_cast<double>(check_sign(signs[i - 1]))});
  return SignedWeightedGraph(n, std::move(edges));
}

SignedWeightedGraph signed_path(int n, const std::vector<int>& signs) {
  require_range(n, 1, kMaxVertices, "path length");
  if (static_cast<int>(signs.size()) != n - 1) throw InputError("path needs exactly n-1 signs");
  std::vector<Edge> edges;
  for (int i = 1; i < n; ++i) edges.push_back({i, i + 1, static_cast<double>(check_sign(signs[i - 1]))});
  return SignedWeightedGraph(n, std::move(edges));
}

std::string_view to_string(InstanceFamily family) {
  switch (family) {
    case InstanceFamily::random_pm1_complete: return "random_pm1_complete";
    case InstanceFamily::hadamard: return "hadamard";
    case InstanceFamily::random_pm1_bipartite: return "random_pm1_bipartite";
    case InstanceFamily::cycle: return "cycle";
    case InstanceFamily::path: return "path";
    case InstanceFamily::custom_file: return "custom_file";
  }
  return "unknown";
}

InstanceFamily parse_family(std::string_view name) {
  for (auto f : {InstanceFamily::random_pm1_complete, InstanceFamily::hadamard, InstanceFamily::random_pm1_bipartite,
                 InstanceFamily::cycle, InstanceFamily::path, InstanceFamily::custom_file}) {
    if (to_string(f) == name) return f;
  }
  throw InputError("unknown instance family '" + std::string(name) + "'");
}

void validate(const InstanceSpec& spec) {
  switch (spec.family) {
    case InstanceFamily::random_pm1_complete:
    case InstanceFamily::random_pm1_bipartite:
      if (!spec.seed) throw InputError("random families need a seed");
      break;
    case InstanceFamily::cycle:
      if (static_cast<int>(spec.signs.size()) != spec.n) throw InputError("cycle needs exactly n signs");
      break;
    case InstanceFamily::path:
      if (static_cast<int>(spec.signs.size()) != spec.n - 1) throw InputError("path needs exactly n-1 signs");
      break;
    case InstanceFamily::custom_file:
      if (spec.path.empty()) throw InputError("custom_file needs a path");
      return;
    case InstanceFamily::hadamard:
      break;
  }
  if (spec.n < 1) throw InputError("n must be positive");
}

SignedWeightedGraph make_instance(const InstanceSpec& spec) {
  validate(spec);
  switch (spec.family) {
    case InstanceFamily::random_pm1_complete: return random_pm1_complete(spec.n, *spec.seed);
    case InstanceFamily::hadamard: return hadamard_instance(spec.n);
    case InstanceFamily::random_pm1_bipartite: return random_pm1_bipartite(spec.n, *spec.seed);
    case InstanceFamily::cycle: return signed_cycle(spec.n, spec.signs);
    case InstanceFamily::path: return signed_path(spec.n, spec.signs);
    case InstanceFamily::custom_file: return read_graph_file(spec.path);
  }
  throw InvariantError("unhandled instance family");
}

}  // namespace bilin
