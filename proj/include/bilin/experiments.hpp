#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bilin/graph.hpp"
#include "bilin/serialize.hpp"

namespace bilin {

enum class ExperimentKind { thm1_montecarlo, hadamard_ratio, cutfinder_stress, hull_census, ratio_sweep };
enum class OutputFormat { json, csv };

std::string_view to_string(ExperimentKind kind);
ExperimentKind parse_experiment_kind(std::string_view name);

struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::thm1_montecarlo;
  int n_min = 20;
  int n_max = 20;
  int num_instances = 100;
  std::uint64_t seed_base = 0;
  std::string output_path;  // empty: caller-provided stream
  OutputFormat format = OutputFormat::json;
  int threads = 1;
  int trial_budget = 1000;        // cutfinder_stress
  int points_per_instance = 50;   // ratio_sweep
  bool record_timing = true;      // false writes wall_time_ms = 0
};

/// Throws InputError / CapacityError when the config is out of range for its kind.
void validate(const ExperimentConfig& cfg);

/// Keys: kind, n (sets n_min = n_max), n_min, n_max, num_instances,
/// seed_base, output_path, output_format, threads, trial_budget,
/// points_per_instance, record_timing. Missing keys keep their defaults.
ExperimentConfig experiment_config_from_json(const nlohmann::json& j);
Json to_json(const ExperimentConfig& cfg);

struct ExperimentRecord {
  std::uint64_t instance_seed = 0;
  int n = 0;
  std::optional<double> mcgap;
  std::optional<double> chgap;
  std::optional<double> ratio;
  double threshold = 0.0;
  bool threshold_met = false;
  double wall_time_ms = 0.0;
  Json extra = Json::object();  // kind-specific fields, JSON output only
};

/// Fixed CSV header.
inline constexpr std::string_view kCsvHeader = "instance_seed,n,mcgap,chgap,ratio,threshold,threshold_met,wall_time_ms";

std::string to_csv_row(const ExperimentRecord& r);
Json to_json(const ExperimentRecord& r);

struct ExperimentSummary {
  std::size_t records = 0;
  std::size_t threshold_met = 0;
  bool ok = true;  // every hard check of the kind held
  Json details = Json::object();

  double fraction_met() const { return records == 0 ? 0.0 : static_cast<double>(threshold_met) / records; }
};

Json to_json(const ExperimentSummary& s);

/// Streams records to `out` in item order while computing them on
/// cfg.threads workers. JSON output is one record object per line followed
/// by a {"summary": ...} line; CSV output is the fixed header plus one row
/// per record. Every prefix written so far is a valid prefix of the full
/// output.
ExperimentSummary run_experiment(const ExperimentConfig& cfg, std::ostream& out);

// Individual drivers; run_experiment dispatches on cfg.kind.
using RecordSink = std::function<void(const ExperimentRecord&)>;

ExperimentSummary run_thm1_montecarlo(const ExperimentConfig& cfg, const RecordSink& sink);
ExperimentSummary run_hadamard_ratio(const ExperimentConfig& cfg, const RecordSink& sink);
ExperimentSummary run_cutfinder_stress(const ExperimentConfig& cfg, const RecordSink& sink);
ExperimentSummary run_hull_census(const ExperimentConfig& cfg, const RecordSink& sink);
ExperimentSummary run_ratio_sweep(const ExperimentConfig& cfg, const RecordSink& sink);

/// True iff mcgap == chgap (within 1e-9 relative) at every point of
/// {0, 1/2, 1}^n, using the closed forms with exact cut oracles. n <= 12.
bool gaps_agree_at_all_halfpoints(const SignedWeightedGraph& g);

/// max over X ⊆ V with γ(X) ≠ ∅ of sum_{γ(X)}|a| / (mu^+(X) - mu^-(X)),
/// i.e. the largest mcgap/chgap ratio over all half-points. n <= 16.
double max_halfpoint_ratio(const SignedWeightedGraph& g);

/// Random graph on n vertices: each pair is an edge with probability 1/2 and
/// gets a nonzero integer weight in [-max_abs, max_abs]. Same mt19937_64
/// draw conventions as the instance generators.
SignedWeightedGraph random_integer_graph(int n, std::uint64_t seed, int max_abs = 5);

/// K_n with i.i.d. nonzero weights uniform in [-1, 1].
SignedWeightedGraph random_real_complete(int n, std::uint64_t seed);

}  // namespace bilin
