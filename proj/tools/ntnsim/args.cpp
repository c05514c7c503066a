#include "ntnsim/args.hpp"

#include <algorithm>

#include "CLI11.hpp"

namespace ntnsim {

std::string_view to_string(Command c) {
  switch (c) {
    case Command::Snapshot: return "snapshot";
    case Command::Sweep: return "sweep";
    case Command::Selftest: return "selftest";
  }
  return "unknown";
}

std::vector<ntnoff::Method> RunManifest::resolved_methods() const {
  if (!methods.empty()) return methods;
  if (command == Command::Sweep) return {ntnoff::kAllMethods.begin(), ntnoff::kAllMethods.end()};
  return {ntnoff::Method::Proposed};
}

UsageError::UsageError(UsageKind kind, const std::string& detail)
    : std::runtime_error(detail), kind_(kind) {}

namespace {

struct RawOptions {
  std::string scenario;
  std::string out = "out";
  std::optional<std::uint64_t> seed;
  std::string ctau_grid;
  int snapshots = 20;
  std::string method;
  std::vector<std::string> sets;
};

std::unique_ptr<CLI::App> make_app(RawOptions& o) {
  auto app = std::make_unique<CLI::App>("Three-tier HAPS/LEO task offloading simulator", "ntnsim");
  app->require_subcommand(1);
  app->add_option("--scenario", o.scenario, "Scenario file (flat key = value)");
  app->add_option("--out", o.out, "Output directory")->capture_default_str();
  app->add_option("--seed", o.seed, "Override the scenario seed");
  app->add_option("--ctau-grid", o.ctau_grid, "Comma-separated delay-cost grid for sweep");
  app->add_option("--snapshots", o.snapshots, "Snapshots per grid point")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app->add_option("--method", o.method, "proposed, fixed-max, no-bw-opt or all");
  app->add_option("--set", o.sets, "KEY=VALUE scenario override (repeatable)")
      ->allow_extra_args(false)
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeAll);
  app->add_subcommand("snapshot", "Run one snapshot at the scenario's delay cost")->fallthrough();
  app->add_subcommand("sweep", "Sweep the delay cost over a grid")->fallthrough();
  app->add_subcommand("selftest", "Run built-in invariant checks")->fallthrough();
  return app;
}

}  // namespace

std::string usage_text() {
  RawOptions o;
  return make_app(o)->help();
}

RunManifest parse_args(const std::vector<std::string>& args) {
  RawOptions o;
  auto app = make_app(o);
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app->parse(reversed);
  } catch (const CLI::CallForHelp&) {
    throw UsageError(UsageKind::HelpRequested, "help requested");
  } catch (const CLI::CallForAllHelp&) {
    throw UsageError(UsageKind::HelpRequested, "help requested");
  } catch (const CLI::ExtrasError& e) {
    throw UsageError(UsageKind::UnknownFlag, e.what());
  } catch (const CLI::ParseError& e) {
    throw UsageError(UsageKind::BadValue, e.what());
  }

  RunManifest m;
  const auto subs = app->get_subcommands();
  const std::string name = subs.front()->get_name();
  if (name == "sweep")
    m.command = Command::Sweep;
  else if (name == "selftest")
    m.command = Command::Selftest;
  else
    m.command = Command::Snapshot;

  if (!o.scenario.empty()) m.scenario_path = o.scenario;
  if (m.command == Command::Snapshot && !m.scenario_path)
    throw UsageError(UsageKind::MissingScenario, "snapshot requires --scenario PATH");

  m.output_dir = o.out;
  m.seed = o.seed;
  m.snapshots = o.snapshots;

  if (!o.ctau_grid.empty()) {
    m.ctau_grid.clear();
    std::size_t start = 0;
    while (true) {
      const auto pos = o.ctau_grid.find(',', start);
      const std::string item = o.ctau_grid.substr(start, pos - start);
      try {
        m.ctau_grid.push_back(parse_double(item, "--ctau-grid"));
      } catch (const ConfigError& e) {
        throw UsageError(UsageKind::BadValue, e.what());
      }
      if (pos == std::string::npos) break;
      start = pos + 1;
    }
  }

  if (!o.method.empty() && o.method != "all") {
    const auto method = ntnoff::parse_method(o.method);
    if (!method) throw UsageError(UsageKind::BadValue, "--method: unknown method '" + o.method + "'");
    m.methods = {*method};
  } else if (o.method == "all") {
    m.methods.assign(ntnoff::kAllMethods.begin(), ntnoff::kAllMethods.end());
  }

  for (const auto& s : o.sets) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0)
      throw UsageError(UsageKind::BadValue, "--set expects KEY=VALUE, got '" + s + "'");
    m.overrides.push_back({s.substr(0, eq), s.substr(eq + 1), 0});
  }
  return m;
}

ntnoff::Scenario resolve_scenario(const RunManifest& manifest) {
  ntnoff::ScenarioConfig cfg = manifest.scenario_path ? load_config_file(*manifest.scenario_path)
                                                      : ntnoff::default_scenario_config();
  apply_settings(cfg, manifest.overrides);
  if (manifest.seed) cfg.seed = *manifest.seed;
  return ntnoff::validate_scenario(cfg);
}

}  // namespace ntnsim
