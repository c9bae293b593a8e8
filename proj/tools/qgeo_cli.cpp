// Command-line front end. Talks to the library only through the C API.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qgeo/qgeo.h"

namespace {

constexpr int kExitInvalid = 2;
constexpr int kExitInternal = 1;

struct Output {
  std::string format;  // empty selects the command's natural format
  std::string path = "-";
  std::string seed;
};

int exit_code(qgeo_status st) {
  switch (st) {
    case QGEO_OK: return 0;
    case QGEO_ERR_INVALID: return kExitInvalid;
    case QGEO_ERR_NUMERICAL: return 3;
    case QGEO_ERR_IO: return 4;
    default: return kExitInternal;
  }
}

int report(qgeo_status st) {
  std::fprintf(stderr, "error: %s\n", qgeo_last_error());
  return exit_code(st);
}

int finish(qgeo_status st, qgeo_document* doc, const Output& out, qgeo_format natural) {
  if (st != QGEO_OK) return report(st);
  qgeo_format fmt = natural;
  if (out.format == "csv") fmt = QGEO_FORMAT_CSV;
  if (out.format == "json") fmt = QGEO_FORMAT_JSON;
  if (!out.seed.empty()) st = qgeo_document_set_param(doc, "seed", out.seed.c_str());
  if (st == QGEO_OK) {
    if (out.path == "-") {
      const char* text = nullptr;
      st = qgeo_document_render(doc, fmt, &text);
      if (st == QGEO_OK && std::fputs(text, stdout) < 0) {
        std::fprintf(stderr, "error: failed writing to stdout\n");
        qgeo_document_free(doc);
        return 4;
      }
    } else {
      st = qgeo_document_write(doc, fmt, out.path.c_str());
    }
  }
  qgeo_document_free(doc);
  return st == QGEO_OK ? 0 : report(st);
}

void add_output_flags(CLI::App* sub, Output& out) {
  sub->add_option("--format", out.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--out", out.path, "Output file, '-' for stdout");
  sub->add_option("--seed", out.seed, "Recorded in the output parameters (all commands are deterministic)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geodesic quantum search: figure and table generators"};
  app.set_config("--config", "", "TOML/INI file with flag values");
  app.require_subcommand(1);
  app.fallthrough();  // lets --config follow the subcommand
  app.set_version_flag("--version", std::string(qgeo_version()));

  Output out;
  double omega0 = 1.0, nu0 = 1.0;
  int steps = 200, grid = 101, k_max = 20, scan_grid = 1801;
  std::string gap_case = "orthogonal";
  std::vector<std::string> scenarios;
  std::vector<double> gammas{0.0, 0.05, 0.1, 0.25};
  std::vector<std::int64_t> sizes{2, 4, 64, 1024};

  auto* fig2 = app.add_subcommand("fig2", "Eigenvector overlap probabilities of the nonstationary driver");
  fig2->add_option("--omega0", omega0)->capture_default_str();
  fig2->add_option("--nu0", nu0)->capture_default_str();
  fig2->add_option("--steps", steps)->capture_default_str();
  add_output_flags(fig2, out);

  auto* fig3 = app.add_subcommand("fig3", "Adiabatic interpolation spectrum");
  fig3->add_option("--case", gap_case)->check(CLI::IsMember({"orthogonal", "overlapping"}))->capture_default_str();
  fig3->add_option("--grid", grid)->capture_default_str();
  add_output_flags(fig3, out);

  auto* scaling = app.add_subcommand("scaling", "Search times for N = 2^1 .. 2^k-max");
  scaling->add_option("--k-max", k_max)->capture_default_str();
  add_output_flags(scaling, out);

  auto* table1 = app.add_subcommand("table1", "Stationary versus nonstationary transport");
  table1->add_option("--scenario", scenarios, "optimal_stationary and/or suboptimal_nonstationary (default both)")
      ->check(CLI::IsMember({"optimal_stationary", "suboptimal_nonstationary"}));
  add_output_flags(table1, out);

  auto* table2 = app.add_subcommand("table2", "Why each search scheme fails on orthogonal states");
  add_output_flags(table2, out);

  auto* coupling = app.add_subcommand("coupling-fix", "Minimum gap of the coupled interpolation");
  coupling->add_option("--gamma", gammas, "Comma-separated couplings")->delimiter(',')->capture_default_str();
  add_output_flags(coupling, out);

  auto* scan = app.add_subcommand("constraint-scan", "Where orthogonality is reachable under the energy constraints");
  scan->add_option("--grid", scan_grid, "Number of epsilon samples (>= 101)")->capture_default_str();
  add_output_flags(scan, out);

  auto* grover = app.add_subcommand("grover-check", "Discrete simulation step versus the Grover iterate");
  grover->add_option("--n", sizes, "Comma-separated N values")->delimiter(',')->capture_default_str();
  add_output_flags(grover, out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInvalid;
  }

  qgeo_document* doc = nullptr;
  if (fig2->parsed()) {
    const qgeo_status st = qgeo_cmd_fig2(omega0, nu0, steps, &doc);
    return finish(st, doc, out, QGEO_FORMAT_CSV);
  }
  if (fig3->parsed()) {
    const qgeo_status st = qgeo_cmd_fig3(gap_case.c_str(), grid, &doc);
    return finish(st, doc, out, QGEO_FORMAT_CSV);
  }
  if (scaling->parsed()) {
    const qgeo_status st = qgeo_cmd_scaling(k_max, &doc);
    return finish(st, doc, out, QGEO_FORMAT_JSON);
  }
  if (table1->parsed()) {
    if (scenarios.empty()) scenarios = {"optimal_stationary", "suboptimal_nonstationary"};
    std::vector<const char*> names;
    for (const auto& s : scenarios) names.push_back(s.c_str());
    const qgeo_status st = qgeo_cmd_table1(names.data(), names.size(), &doc);
    return finish(st, doc, out, QGEO_FORMAT_JSON);
  }
  if (table2->parsed()) {
    const qgeo_status st = qgeo_cmd_table2(&doc);
    return finish(st, doc, out, QGEO_FORMAT_JSON);
  }
  if (coupling->parsed()) {
    const qgeo_status st = qgeo_cmd_coupling_fix(gammas.data(), gammas.size(), &doc);
    return finish(st, doc, out, QGEO_FORMAT_CSV);
  }
  if (scan->parsed()) {
    const qgeo_status st = qgeo_cmd_constraint_scan(scan_grid, &doc);
    return finish(st, doc, out, QGEO_FORMAT_CSV);
  }
  if (grover->parsed()) {
    const qgeo_status st = qgeo_cmd_grover_check(sizes.data(), sizes.size(), &doc);
    return finish(st, doc, out, QGEO_FORMAT_CSV);
  }
  return kExitInvalid;
}
