#include <doctest.h>

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

#include "bilin/experiments.hpp"

using namespace bilin;

namespace {

std::vector<std::string> lines_of(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  for (std::string line; std::getline(is, line);) out.push_back(line);
  return out;
}

ExperimentConfig small(ExperimentKind kind, int n_min, int n_max, int count) {
  ExperimentConfig cfg;
  cfg.kind = kind;
  cfg.n_min = n_min;
  cfg.n_max = n_max;
  cfg.num_instances = count;
  cfg.record_timing = false;
  return cfg;
}

}  // namespace

TEST_CASE("thm1 records") {
  auto cfg = small(ExperimentKind::thm1_montecarlo, 10, 10, 5);
  std::ostringstream out;
  const auto summary = run_experiment(cfg, out);
  CHECK(summary.records == 5);
  CHECK(summary.ok);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 6);
  for (int k = 0; k < 5; ++k) {
    const auto j = Json::parse(lines[static_cast<std::size_t>(k)]);
    CHECK(j["instance_seed"] == k);
    CHECK(j["n"] == 10);
    CHECK(j["mcgap"] == 22.5);
    CHECK(j["wall_time_ms"] == 0);
  }
  const auto tail = Json::parse(lines.back());
  REQUIRE(tail.contains("summary"));
  CHECK(tail["summary"]["records"] == 5);
}

TEST_CASE("csv output") {
  auto cfg = small(ExperimentKind::thm1_montecarlo, 6, 6, 3);
  cfg.format = OutputFormat::csv;
  cfg.seed_base = 40;
  std::ostringstream out;
  run_experiment(cfg, out);
  const auto lines = lines_of(out.str());
  REQUIRE(lines.size() == 4);
  CHECK(lines[0] == kCsvHeader);
  CHECK(lines[1].rfind("40,6,7.5,", 0) == 0);
  CHECK(lines[3].rfind("42,6,", 0) == 0);
}

TEST_CASE("thread count does not change output") {
  for (auto kind : {ExperimentKind::thm1_montecarlo, ExperimentKind::cutfinder_stress, ExperimentKind::ratio_sweep}) {
    auto cfg = small(kind, 4, 9, 12);
    cfg.points_per_instance = 10;
    std::ostringstream a, b;
    run_experiment(cfg, a);
    cfg.threads = 3;
    run_experiment(cfg, b);
    CHECK(a.str() == b.str());
  }
}

TEST_CASE("hadamard ratio run") {
  auto cfg = small(ExperimentKind::hadamard_ratio, 4, 12, 0);
  std::vector<ExperimentRecord> records;
  const auto summary = run_hadamard_ratio(cfg, [&](const ExperimentRecord& r) { records.push_back(r); });
  REQUIRE(records.size() == 9);
  CHECK(records[0].n == 4);
  CHECK(*records[0].mcgap == 3.0);
  CHECK(*records[0].chgap == 2.0);
  CHECK(*records[0].ratio == 1.5);
  CHECK(summary.details["discrepancy_ok"] == true);
  CHECK(summary.ok);
}

TEST_CASE("cutfinder stress run") {
  auto cfg = small(ExperimentKind::cutfinder_stress, 3, 16, 30);
  std::vector<ExperimentRecord> records;
  const auto summary = run_cutfinder_stress(cfg, [&](const ExperimentRecord& r) { records.push_back(r); });
  CHECK(records.size() == 30);
  CHECK(summary.ok);
  for (const auto& r : records) {
    CHECK(r.n >= 3);
    CHECK(r.n <= 16);
    CHECK(r.threshold_met);
    CHECK(r.extra["within_brute"] == true);
  }
}

TEST_CASE("hull census run") {
  auto cfg = small(ExperimentKind::hull_census, 3, 5, 10);
  const auto summary = run_hull_census(cfg, [](const ExperimentRecord&) {});
  // Cycles 8 + 16 + 32, paths 4 + 8 + 16, random 10.
  CHECK(summary.records == 94);
  CHECK(summary.ok);
  CHECK(summary.threshold_met == summary.records);
}

TEST_CASE("ratio sweep never exceeds the worst half-point") {
  auto cfg = small(ExperimentKind::ratio_sweep, 3, 7, 8);
  cfg.points_per_instance = 30;
  std::vector<ExperimentRecord> records;
  const auto summary = run_ratio_sweep(cfg, [&](const ExperimentRecord& r) { records.push_back(r); });
  CHECK(summary.ok);
  for (const auto& r : records) {
    if (!r.ratio) continue;
    CHECK(*r.ratio <= r.extra["max_halfpoint_ratio"].get<double>() + 1e-7);
  }
}

TEST_CASE("helpers") {
  CHECK(gaps_agree_at_all_halfpoints(SignedWeightedGraph(4, {{1, 2, 1}, {2, 3, -1}, {3, 4, 2}})));
  CHECK_FALSE(gaps_agree_at_all_halfpoints(SignedWeightedGraph(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}})));
  CHECK(max_halfpoint_ratio(SignedWeightedGraph(3, {{1, 2, 1}, {1, 3, 1}, {2, 3, 1}})) == doctest::Approx(1.5));
  CHECK(max_halfpoint_ratio(SignedWeightedGraph(2, {{1, 2, 3}})) == 1.0);
  const auto g = random_integer_graph(8, 5);
  CHECK(std::ranges::equal(g.edges(), random_integer_graph(8, 5).edges()));
  for (const Edge& e : g.edges()) {
    CHECK(std::abs(e.a) >= 1.0);
    CHECK(std::abs(e.a) <= 5.0);
    CHECK(e.a == std::round(e.a));
  }
  for (const Edge& e : random_real_complete(6, 1).edges()) CHECK(std::abs(e.a) <= 1.0);
}

TEST_CASE("config validation and JSON") {
  auto cfg = small(ExperimentKind::thm1_montecarlo, 30, 30, 1);
  CHECK_THROWS_AS(validate(cfg), CapacityError);
  cfg.n_min = cfg.n_max = 1;
  CHECK_THROWS_AS(validate(cfg), InputError);
  cfg.n_min = 5;
  cfg.n_max = 4;
  CHECK_THROWS_AS(validate(cfg), InputError);

  const auto parsed = experiment_config_from_json(Json::parse(
      R"({"kind":"hull_census","n":6,"num_instances":7,"seed_base":3,"output_format":"csv","threads":2})"));
  CHECK(parsed.kind == ExperimentKind::hull_census);
  CHECK(parsed.n_min == 6);
  CHECK(parsed.n_max == 6);
  CHECK(parsed.num_instances == 7);
  CHECK(parsed.seed_base == 3);
  CHECK(parsed.format == OutputFormat::csv);
  CHECK(parsed.threads == 2);
  const auto round = experiment_config_from_json(to_json(parsed));
  CHECK(round.kind == parsed.kind);
  CHECK(round.format == parsed.format);
  CHECK(round.num_instances == parsed.num_instances);
  CHECK_THROWS_AS(experiment_config_from_json(Json::parse(R"({"kind":"nope"})")), InputError);
  CHECK_THROWS_AS(experiment_config_from_json(Json::parse(R"({"n":"six"})")), InputError);
  for (auto k : {ExperimentKind::thm1_montecarlo, ExperimentKind::hadamard_ratio, ExperimentKind::cutfinder_stress,
                 ExperimentKind::hull_census, ExperimentKind::ratio_sweep}) {
    CHECK(parse_experiment_kind(to_string(k)) == k);
  }
}
