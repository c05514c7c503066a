#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ntnoff/orchestrator.hpp"
#include "ntnoff/scenario.hpp"
#include "ntnsim/config_file.hpp"

namespace ntnsim {

enum class Command { Snapshot, Sweep, Selftest };
std::string_view to_string(Command c);

struct RunManifest {
  Command command = Command::Snapshot;
  std::optional<std::filesystem::path> scenario_path;
  std::filesystem::path output_dir = "out";
  std::vector<Setting> overrides;  // --set KEY=VALUE, in order
  std::optional<std::uint64_t> seed;
  std::vector<double> ctau_grid{10.0, 100.0, 1e3, 1e4, 1e5};
  int snapshots = 20;
  // Empty means the command's default: proposed for snapshot, all for sweep.
  std::vector<ntnoff::Method> methods;

  std::vector<ntnoff::Method> resolved_methods() const;
};

enum class UsageKind { UnknownFlag, MissingScenario, BadValue, HelpRequested };

class UsageError : public std::runtime_error {
 public:
  UsageError(UsageKind kind, const std::string& detail);
  UsageKind kind() const noexcept { return kind_; }

 private:
  UsageKind kind_;
};

// Arguments after the program name, e.g. {"sweep", "--ctau-grid", "10,100"}.
RunManifest parse_args(const std::vector<std::string>& args);

std::string usage_text();

// Scenario file (or built-in defaults), then --set overrides, then --seed.
ntnoff::Scenario resolve_scenario(const RunManifest& manifest);

}  // namespace ntnsim
