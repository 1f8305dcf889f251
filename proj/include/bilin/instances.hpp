#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilin/graph.hpp"

namespace bilin {

// All random families draw from std::mt19937_64 seeded with the instance seed
// (the standard 64-bit Mersenne Twister, MT19937-64 with the reference
// seeding routine). One draw per edge, edges in lexicographic (i, j) order;
// low bit 0 -> +1, low bit 1 -> -1.

/// Sign of a raw 64-bit draw: low bit 0 -> +1, 1 -> -1.
constexpr double sign_from_draw(std::uint64_t draw) { return (draw & 1U) ? -1.0 : 1.0; }

/// K_n with i.i.d. uniform ±1 weights. 2 <= n <= 63.
SignedWeightedGraph random_pm1_complete(int n, std::uint64_t seed);

/// K_n with a_ij = (-1)^<bits(i-1), bits(j-1)>. 2 <= n <= 63.
SignedWeightedGraph hadamard_instance(int n);

/// K_{m,m} on parts {1..m}, {m+1..2m} with i.i.d. ±1 weights. 1 <= 2m <= 63.
SignedWeightedGraph random_pm1_bipartite(int n_per_side, std::uint64_t seed);

/// Cycle 1-2-...-n-1; signs[i-1] is the weight of edge (i, i+1), the last
/// entry closes the cycle with edge (n, 1). n >= 3.
SignedWeightedGraph signed_cycle(int n, const std::vector<int>& signs);

/// Path 1-2-...-n; signs[i-1] is the weight of edge (i, i+1). n >= 1.
SignedWeightedGraph signed_path(int n, const std::vector<int>& signs);

enum class InstanceFamily { random_pm1_complete, hadamard, random_pm1_bipartite, cycle, path, custom_file };

std::string_view to_string(InstanceFamily family);
InstanceFamily parse_family(std::string_view name);

struct InstanceSpec {
  InstanceFamily family = InstanceFamily::random_pm1_complete;
  int n = 0;  // vertex count; per-side count for random_pm1_bipartite
  std::optional<std::uint64_t> seed;
  std::vector<int> signs;  // cycle / path only
  std::string path;        // custom_file only
};

/// Throws InputError when the spec is inconsistent (missing seed, sign count
/// mismatch, bad n).
void validate(const InstanceSpec& spec);

SignedWeightedGraph make_instance(const InstanceSpec& spec);

}  // namespace bilin
