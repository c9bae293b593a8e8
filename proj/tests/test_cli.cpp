// Runs the command-line binary and checks exit codes and output round trips.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>
#include <json.hpp>

#include "qgeo/document.hpp"

namespace {

struct Run {
  int code;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(QGEO_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::string text;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, p)) > 0) text.append(buf, n);
  const int status = pclose(p);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, text};
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("every subcommand succeeds with defaults") {
  for (const char* sub : {"fig2", "fig3", "scaling", "table1", "table2", "coupling-fix", "grover-check"}) {
    CAPTURE(sub);
    const Run r = run(sub);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.empty());
  }
}

TEST_CASE("csv output parses and regenerates byte for byte") {
  for (const char* args : {"fig2 --steps 40", "fig3 --case overlapping --grid 21", "coupling-fix --gamma 0.05,0.1",
                           "grover-check --n 2,4,64", "table2 --format csv", "table1 --format csv --seed 11",
                           "scaling --k-max 8 --format csv", "constraint-scan --grid 101"}) {
    CAPTURE(args);
    const Run r = run(args);
    REQUIRE(r.code == 0);
    CHECK(r.out.rfind("# schema=1\n", 0) == 0);
    CHECK(qgeo::to_csv(qgeo::parse_csv(r.out)) == r.out);
  }
}

TEST_CASE("json output") {
  const Run r = run("table2");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema"] == 1);
  CHECK(j["rows"].size() == 3);
  CHECK(j["rows"][2]["reason"] == "VanishingGap");

  const Run s = run("scaling --k-max 20 --seed 5");
  const auto k = nlohmann::json::parse(s.out);
  CHECK(k["params"]["seed"] == "5");
  CHECK(std::abs(k["summary"]["loglog_slope"].get<double>() - 0.5) < 1e-9);
  CHECK(k["rows"].size() == 20);
}

TEST_CASE("output file and deterministic reruns") {
  const std::string path = "cli_test_fig3.csv";
  REQUIRE(run("fig3 --grid 51 --out " + path).code == 0);
  CHECK(slurp(path) == run("fig3 --grid 51").out);
  std::remove(path.c_str());
  CHECK(run("fig2").out == run("fig2").out);
}

TEST_CASE("config file supplies flag values") {
  const std::string path = "cli_test_config.toml";
  {
    std::ofstream cfg(path);
    cfg << "[fig3]\ncase = \"overlapping\"\ngrid = 11\n";
  }
  const Run r = run("fig3 --config " + path);
  std::remove(path.c_str());
  REQUIRE(r.code == 0);
  CHECK(r.out.find("# case=overlapping\n") != std::string::npos);
  CHECK(qgeo::parse_csv(r.out).rows.size() == 11);
}

TEST_CASE("exit codes") {
  CHECK(run("").code == 2);
  CHECK(run("fig3 --case sideways").code == 2);
  CHECK(run("fig2 --bogus").code == 2);
  CHECK(run("fig2 --steps 1").code == 2);
  CHECK(run("scaling --k-max 31").code == 2);
  CHECK(run("grover-check --n 1").code == 2);
  CHECK(run("fig2 --out /nonexistent-dir/x.csv").code == 4);
  const Run v = run("--version");
  CHECK(v.code == 0);
  CHECK_FALSE(v.out.empty());
}
