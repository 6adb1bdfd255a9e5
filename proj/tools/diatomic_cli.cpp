// Scenario runner: diatomic-cli {dispersion|simulate|compare} --config FILE [--out DIR] [--threads N]
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "diatomic/diatomic.h"

namespace {

void print_line(const char* line, void*) { std::printf("%s\n", line); }

int exit_code(dw_status st) {
  switch (st) {
    case DW_OK: return 0;
    case DW_NUMERICAL_ERROR: return 3;
    case DW_INTERNAL: return 1;
    default: return 2;
  }
}

const char* regime_label(int r) {
  return r == 0 ? "weak_dispersion" : r == 1 ? "wave_equation" : "outside_band";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Wave propagation in a 1D diatomic lattice: dispersion, oracles, asymptotics."};
  app.require_subcommand(1);
  std::string config, out;
  int threads = 0;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config, "scenario file")->required()->check(CLI::ExistingFile);
    sub->add_option("--out", out, "output directory (overrides [output] dir)");
    sub->add_option("--threads", threads, "worker threads (0 = hardware)")->check(CLI::NonNegativeNumber);
  };
  CLI::App* disp = app.add_subcommand("dispersion", "write dispersion constants and branch tables");
  CLI::App* sim = app.add_subcommand("simulate", "write one CSV per method and time");
  CLI::App* cmp = app.add_subcommand("compare", "write the error report for the configured pairs");
  for (CLI::App* s : {disp, sim, cmp}) add_common(s);
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  dw_scenario* s = nullptr;
  dw_status st = dw_scenario_load(config.c_str(), &s);
  if (st == DW_OK && !out.empty()) st = dw_scenario_set_output(s, out.c_str());
  if (st == DW_OK) st = dw_scenario_set_threads(s, threads);
  if (st == DW_OK) {
    dw_scenario_info info;
    st = dw_scenario_info_get(s, &info);
    if (st == DW_OK)
      std::printf("# h=%.17g mu=%.17g delta=%.17g h^2/mu^3=%.6g regime=%s\n", info.h, info.mu, info.delta,
                  info.ratio, regime_label(info.regime));
  }
  if (st == DW_OK) {
    if (disp->parsed()) st = dw_scenario_run_dispersion(s, print_line, nullptr);
    else if (sim->parsed()) st = dw_scenario_run_simulate(s, print_line, nullptr);
    else st = dw_scenario_run_compare(s, print_line, nullptr);
  }
  if (st != DW_OK) std::fprintf(stderr, "error: %s\n", dw_last_error());
  dw_scenario_destroy(s);
  return exit_code(st);
}
