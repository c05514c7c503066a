#include <iostream>
#include <string>
#include <vector>

#include "ntnoff/error.hpp"
#include "ntnoff/orchestrator.hpp"
#include "ntnsim/args.hpp"
#include "ntnsim/reports.hpp"
#include "ntnsim/selftest.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;

int run(const ntnsim::RunManifest& m) {
  const ntnoff::Scenario scenario = ntnsim::resolve_scenario(m);
  const auto methods = m.resolved_methods();

  std::vector<std::filesystem::path> files;
  switch (m.command) {
    case ntnsim::Command::Snapshot: {
      const auto draw = ntnoff::draw_snapshot(scenario, scenario.config().seed);
      std::vector<ntnoff::SnapshotReport> reports;
      for (auto method : methods) reports.push_back(ntnoff::run_snapshot(scenario, draw, method));
      files = ntnsim::write_reports(reports, m, scenario.config(), m.output_dir);
      break;
    }
    case ntnsim::Command::Sweep: {
      const auto sweep = ntnoff::run_sweep(scenario, m.ctau_grid, m.snapshots, methods);
      files = ntnsim::write_reports(sweep, m, scenario.config(), m.output_dir);
      break;
    }
    case ntnsim::Command::Selftest: {
      const auto failures = ntnsim::run_selftest(scenario);
      for (const auto& f : failures) std::cerr << "selftest: " << f << "\n";
      std::cout << "selftest: " << (failures.empty() ? "ok" : "FAILED") << "\n";
      return failures.empty() ? kExitOk : kExitRuntime;
    }
  }
  for (const auto& f : files) std::cout << f.string() << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  ntnsim::RunManifest manifest;
  try {
    manifest = ntnsim::parse_args(args);
  } catch (const ntnsim::UsageError& e) {
    if (e.kind() == ntnsim::UsageKind::HelpRequested) {
      std::cout << ntnsim::usage_text();
      return kExitOk;
    }
    std::cerr << "ntnsim: " << e.what() << "\n\n" << ntnsim::usage_text();
    return kExitUsage;
  }

  try {
    return run(manifest);
  } catch (const std::exception& e) {
    std::cerr << "ntnsim: " << e.what() << "\n";
    return kExitRuntime;
  }
}
