#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <json.hpp>

namespace fs = std::filesystem;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string("\"") + BILIN_GAP_EXE + "\" " + args + " 2>/dev/null";
  RunResult r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  char buf[4096];
  for (std::size_t got; (got = fread(buf, 1, sizeof buf, pipe)) > 0;) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

int exit_code_with_stderr(const std::string& args, std::string& err_text, const fs::path& dir) {
  const fs::path err = dir / "stderr.txt";
  const std::string cmd = std::string("\"") + BILIN_GAP_EXE + "\" " + args + " >/dev/null 2>\"" + err.string() + "\"";
  const int status = std::system(cmd.c_str());
  std::ifstream in(err);
  std::stringstream ss;
  ss << in.rdbuf();
  err_text = ss.str();
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("bilin_cli_" + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name, const std::string& content) const {
    std::ofstream(path / name) << content;
    return (path / name).string();
  }
};

using nlohmann::json;

}  // namespace

TEST_CASE("gen hadamard") {
  TempDir dir;
  const auto out = (dir.path / "h4.json").string();
  REQUIRE(run("gen --family hadamard --n 4 --out " + out).code == 0);
  std::ifstream in(out);
  const auto j = json::parse(in);
  CHECK(j["n"] == 4);
  CHECK(j["edges"] == json::parse("[[1,2,1],[1,3,1],[1,4,1],[2,3,1],[2,4,-1],[3,4,-1]]"));

  const auto text = run("gen --family cycle --n 4 --signs +,+,-,- --format text");
  CHECK(text.code == 0);
  CHECK(text.out.find("1 4 -1") != std::string::npos);
}

TEST_CASE("eval on the triangle") {
  TempDir dir;
  const auto tri = dir.file("tri.json", R"({"n":3,"edges":[[1,2,1],[1,3,1],[2,3,1]]})");
  const auto r = run("eval --instance " + tri + " --point 0.5,0.5,0.5");
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["mcgap"] == 1.5);
  CHECK(j["chgap"] == 1.0);
  CHECK(json::parse(run("eval --instance " + tri).out)["mcgap"] == 1.5);
  CHECK(json::parse(run("eval --instance " + tri + " --point h,h,0").out)["mcgap"] == 0.5);

  const auto lp = json::parse(run("eval --instance " + tri + " --point 0.25,0.5,0.75").out);
  CHECK(lp["method"] == "lp");
}

TEST_CASE("hullcheck, cut and maxcut") {
  TempDir dir;
  const auto path3 = dir.file("path3.txt", "1 2 1\n2 3 -1\n");
  const auto h = run("hullcheck --instance " + path3);
  REQUIRE(h.code == 0);
  CHECK(json::parse(h.out)["exact"] == true);

  const auto mixed = dir.file("mixed.json", R"({"n":3,"edges":[[1,2,5],[1,3,-2],[2,3,1]]})");
  const auto c = run("cut --instance " + mixed + " --seed 3");
  REQUIRE(c.code == 0);
  const auto cj = json::parse(c.out);
  CHECK(cj["meets_guarantee"] == true);
  CHECK(run("cut --instance " + mixed + " --seed 3").out == c.out);

  const auto m = run("maxcut --instance " + mixed);
  REQUIRE(m.code == 0);
  const auto mj = json::parse(m.out);
  CHECK(mj["mu_plus"] == 6.0);
  CHECK(mj["mu_minus"] == -1.0);
  CHECK(json::parse(run("maxcut --instance " + mixed + " --subset 1,3").out)["mu_minus"] == -2.0);
}

TEST_CASE("experiment output") {
  TempDir dir;
  const auto out = (dir.path / "t.jsonl").string();
  const auto r = run("experiment thm1_montecarlo --n 8 --num-instances 3 --no-timing --out " + out);
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["ok"] == true);
  std::ifstream in(out);
  int lines = 0;
  for (std::string line; std::getline(in, line);) ++lines;
  CHECK(lines == 4);

  const auto csv = run("experiment hull_census --n 4 --num-instances 2 --format csv --no-timing");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("instance_seed,n,mcgap,chgap,ratio,threshold,threshold_met,wall_time_ms\n", 0) == 0);

  const auto cfg = dir.file("cfg.json", R"({"kind":"hadamard_ratio","n_min":4,"n_max":6,"record_timing":false})");
  const auto a = run("experiment --config " + cfg);
  CHECK(a.code == 0);
  CHECK(a.out == run("experiment --config " + cfg + " --threads 2").out);
}

TEST_CASE("error exit codes") {
  TempDir dir;
  std::string err;
  CHECK(exit_code_with_stderr("frobnicate", err, dir.path) == 1);
  CHECK(err.find("gen") != std::string::npos);  // usage lists subcommands
  CHECK(exit_code_with_stderr("eval --bogus", err, dir.path) == 1);
  CHECK(exit_code_with_stderr("eval --instance " + (dir.path / "missing.json").string(), err, dir.path) == 1);

  const auto bad = dir.file("bad.json", R"({"n":3,"edges":[[1,1,2]]})");
  CHECK(exit_code_with_stderr("hullcheck --instance " + bad, err, dir.path) == 1);
  const auto tri = dir.file("tri.json", R"({"n":3,"edges":[[1,2,1],[1,3,1],[2,3,1]]})");
  CHECK(exit_code_with_stderr("eval --instance " + tri + " --point 0.5,2,0.5", err, dir.path) == 1);
  CHECK(exit_code_with_stderr("eval --instance " + tri + " --point 0.5,0.5", err, dir.path) == 1);

  CHECK(exit_code_with_stderr("gen --family random_pm1_complete --n 70 --seed 1", err, dir.path) == 2);
  CHECK(exit_code_with_stderr("experiment thm1_montecarlo --n 40", err, dir.path) == 2);
  CHECK(exit_code_with_stderr("gen --family random_pm1_complete --n 30 --seed 1 --out " +
                                  (dir.path / "k30.json").string(),
                              err, dir.path) == 0);
  CHECK(exit_code_with_stderr("maxcut --instance " + (dir.path / "k30.json").string(), err, dir.path) == 2);
}
