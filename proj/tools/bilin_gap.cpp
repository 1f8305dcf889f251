// bilin_gap: envelopes, gaps, cuts and hull-exactness checks for bilinear
// functions over [0,1]^n, plus the experiment drivers.
//
// Exit codes: 0 success, 1 input error, 2 capacity error, 3 invariant
// violation (or an experiment whose hard checks failed).

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bilin/cuts.hpp"
#include "bilin/envelopes.hpp"
#include "bilin/experiments.hpp"
#include "bilin/graph_io.hpp"
#include "bilin/hull_check.hpp"
#include "bilin/instances.hpp"
#include "bilin/serialize.hpp"

namespace {

using namespace bilin;

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, ',');) {
    const auto b = item.find_first_not_of(" \t");
    const auto e = item.find_last_not_of(" \t");
    if (b == std::string::npos) throw InputError("empty entry in list '" + text + "'");
    out.push_back(item.substr(b, e - b + 1));
  }
  return out;
}

double parse_coordinate(const std::string& token) {
  if (token == "h") return 0.5;
  try {
    std::size_t used = 0;
    const double v = std::stod(token, &used);
    if (used != token.size()) throw InputError("bad coordinate '" + token + "'");
    return v;
  } catch (const std::logic_error&) {
    throw InputError("bad coordinate '" + token + "'");
  }
}

EvaluationPoint parse_point(const std::string& text, int n) {
  const auto tokens = split_commas(text);
  if (static_cast<int>(tokens.size()) != n) {
    throw InputError("point has " + std::to_string(tokens.size()) + " coordinates, instance has n=" + std::to_string(n));
  }
  Eigen::VectorXd coords(n);
  for (int i = 0; i < n; ++i) coords(i) = parse_coordinate(tokens[static_cast<std::size_t>(i)]);
  return EvaluationPoint(coords);
}

std::vector<int> parse_signs(const std::string& text) {
  std::vector<int> signs;
  for (const auto& t : split_commas(text)) {
    if (t == "+" || t == "1" || t == "+1") {
      signs.push_back(1);
    } else if (t == "-" || t == "-1") {
      signs.push_back(-1);
    } else {
      throw InputError("bad sign '" + t + "'");
    }
  }
  return signs;
}

VertexSubset parse_subset(const std::string& text) {
  VertexSubset s;
  for (const auto& t : split_commas(text)) {
    try {
      s.insert(std::stoi(t));
    } catch (const std::logic_error&) {
      throw InputError("bad vertex '" + t + "'");
    }
  }
  return s;
}

nlohmann::json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError("bad JSON in " + path + ": " + e.what());
  }
}

void print(const Json& j) { std::cout << j.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bilinear McCormick vs convex-hull gap toolkit"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate an instance file");
  std::string family, signs_text, spec_path, out_path, format_name, custom_path;
  int gen_n = 0;
  std::uint64_t gen_seed = 0;
  gen->add_option("--family", family, "random_pm1_complete|hadamard|random_pm1_bipartite|cycle|path|custom_file");
  gen->add_option("--n", gen_n, "Vertex count (per-side count for random_pm1_bipartite)");
  auto* seed_opt = gen->add_option("--seed", gen_seed, "Seed for random families");
  gen->add_option("--signs", signs_text, "Comma-separated signs for cycle/path, e.g. +,+,-,-");
  gen->add_option("--path", custom_path, "Source file for custom_file");
  gen->add_option("--spec", spec_path, "InstanceSpec JSON file");
  gen->add_option("--out", out_path, "Output file (stdout if omitted)");
  gen->add_option("--format", format_name, "json|text (default: from --out extension)")
      ->check(CLI::IsMember({"json", "text"}));

  // eval
  auto* eval = app.add_subcommand("eval", "GapReport at one point");
  std::string instance_path, point_text;
  int lp_cap = kDefaultLpCap;
  eval->add_option("--instance", instance_path, "Instance file")->required();
  eval->add_option("--point", point_text, "Comma-separated coordinates; 'h' = 0.5 (default all 0.5)");
  eval->add_option("--lp-cap", lp_cap, "Largest number of fractional coordinates for the hull LP");

  // cut
  auto* cut = app.add_subcommand("cut", "Randomized large-cut search");
  std::uint64_t cut_seed = 0;
  int budget = kDefaultTrialBudget;
  cut->add_option("--instance", instance_path, "Instance file")->required();
  cut->add_option("--seed", cut_seed, "RNG seed");
  cut->add_option("--budget", budget, "Maximum number of S draws")->check(CLI::PositiveNumber);

  // maxcut
  auto* maxcut = app.add_subcommand("maxcut", "Exact max and min cut by enumeration");
  std::string subset_text;
  maxcut->add_option("--instance", instance_path, "Instance file")->required();
  maxcut->add_option("--subset", subset_text, "Comma-separated vertex subset (default: all)");

  // hullcheck
  auto* hullcheck = app.add_subcommand("hullcheck", "Decide whether the McCormick relaxation is the convex hull");
  hullcheck->add_option("--instance", instance_path, "Instance file")->required();

  // experiment
  auto* experiment = app.add_subcommand("experiment", "Run an experiment driver");
  std::string kind_name, config_path, exp_out, exp_format;
  int exp_n = 0, n_min = 0, n_max = 0, num_instances = -1, threads = 0, exp_budget = 0, points = 0;
  std::uint64_t seed_base = 0;
  bool no_timing = false;
  experiment->add_option("kind", kind_name, "thm1_montecarlo|hadamard_ratio|cutfinder_stress|hull_census|ratio_sweep");
  experiment->add_option("--config", config_path, "ExperimentConfig JSON file; flags override it");
  experiment->add_option("--n", exp_n, "Single n");
  experiment->add_option("--n-min", n_min, "Smallest n");
  experiment->add_option("--n-max", n_max, "Largest n");
  experiment->add_option("--num-instances", num_instances, "Instances (seeds) per n");
  auto* seed_base_opt = experiment->add_option("--seed-base", seed_base, "First seed");
  experiment->add_option("--out", exp_out, "Output path (stdout if omitted)");
  experiment->add_option("--format", exp_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
  experiment->add_option("--threads", threads, "Worker threads (fallback: BILIN_GAP_THREADS, then 1)");
  experiment->add_option("--budget", exp_budget, "Trial budget for cutfinder_stress");
  experiment->add_option("--points", points, "Sampled points per instance for ratio_sweep");
  experiment->add_flag("--no-timing", no_timing, "Write wall_time_ms as 0");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n\n" << app.help();
    return 1;
  }

  try {
    if (*gen) {
      InstanceSpec spec;
      if (!spec_path.empty()) spec = instance_spec_from_json(read_json_file(spec_path));
      if (!family.empty()) spec.family = parse_family(family);
      else if (spec_path.empty()) throw InputError("gen needs --family or --spec");
      if (gen_n != 0) spec.n = gen_n;
      if (*seed_opt) spec.seed = gen_seed;
      if (!signs_text.empty()) spec.signs = parse_signs(signs_text);
      if (!custom_path.empty()) spec.path = custom_path;
      const SignedWeightedGraph g = make_instance(spec);
      GraphFormat format = out_path.empty() ? GraphFormat::json : format_for_path(out_path);
      if (!format_name.empty()) format = format_name == "text" ? GraphFormat::text : GraphFormat::json;
      if (out_path.empty()) {
        write_graph(std::cout, g, format);
      } else {
        write_graph_file(out_path, g, format);
      }
    } else if (*eval) {
      const SignedWeightedGraph g = read_graph_file(instance_path);
      const EvaluationPoint x = point_text.empty() ? EvaluationPoint::all_half(g.n()) : parse_point(point_text, g.n());
      print(to_json(gap_report(g, x, GapOptions{lp_cap})));
    } else if (*cut) {
      const SignedWeightedGraph g = read_graph_file(instance_path);
      print(to_json(find_large_cut(g, cut_seed, budget)));
    } else if (*maxcut) {
      const SignedWeightedGraph g = read_graph_file(instance_path);
      const VertexSubset x = subset_text.empty() ? g.vertices() : parse_subset(subset_text);
      print(to_json(cut_extremes(g, x)));
    } else if (*hullcheck) {
      const SignedWeightedGraph g = read_graph_file(instance_path);
      print(to_json(check_hull_exact(g)));
    } else if (*experiment) {
      ExperimentConfig cfg = config_path.empty() ? ExperimentConfig{} : experiment_config_from_json(read_json_file(config_path));
      if (!kind_name.empty()) cfg.kind = parse_experiment_kind(kind_name);
      else if (config_path.empty()) throw InputError("experiment needs a kind");
      if (exp_n != 0) cfg.n_min = cfg.n_max = exp_n;
      if (n_min != 0) cfg.n_min = n_min;
      if (n_max != 0) cfg.n_max = n_max;
      if (num_instances >= 0) cfg.num_instances = num_instances;
      if (*seed_base_opt) cfg.seed_base = seed_base;
      if (!exp_out.empty()) cfg.output_path = exp_out;
      if (!exp_format.empty()) cfg.format = exp_format == "csv" ? OutputFormat::csv : OutputFormat::json;
      if (threads > 0) {
        cfg.threads = threads;
      } else if (const char* env = std::getenv("BILIN_GAP_THREADS"); env != nullptr && *env != '\0') {
        try {
          cfg.threads = std::stoi(env);
        } catch (const std::logic_error&) {
          throw InputError("BILIN_GAP_THREADS must be an integer");
        }
      }
      if (exp_budget > 0) cfg.trial_budget = exp_budget;
      if (points > 0) cfg.points_per_instance = points;
      if (no_timing) cfg.record_timing = false;
      validate(cfg);

      ExperimentSummary summary;
      if (cfg.output_path.empty()) {
        summary = run_experiment(cfg, std::cout);
        if (cfg.format == OutputFormat::csv) std::cerr << to_json(summary).dump() << '\n';
      } else {
        std::ofstream out(cfg.output_path);
        if (!out) throw InputError("cannot write " + cfg.output_path);
        summary = run_experiment(cfg, out);
        std::cout << to_json(summary).dump(2) << '\n';
      }
      if (!summary.ok) return 3;
    }
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return 1;
  } catch (const CapacityError& e) {
    std::cerr << "capacity error: " << e.what() << '\n';
    return 2;
  } catch (const InvariantError& e) {
    std::cerr << "invariant violation: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
