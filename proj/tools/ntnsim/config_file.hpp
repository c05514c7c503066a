#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ntnoff/scenario.hpp"

namespace ntnsim {

// Bad key or value in a scenario file or --set override.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, int line, const std::string& detail);

  const std::string& key() const noexcept { return key_; }
  int line() const noexcept { return line_; }  // 0 when not from a file

 private:
  std::string key_;
  int line_;
};

class IoError : public std::runtime_error {
 public:
  IoError(std::filesystem::path path, const std::string& detail);
  const std::filesystem::path& path() const noexcept { return path_; }

 private:
  std::filesystem::path path_;
};

struct Setting {
  std::string key;
  std::string value;
  int line = 0;
};

// Applies settings in order. Any `gd.<k>.pos` or `gds.ring` key replaces the
// whole GD set; explicit GD ids must then be exactly 0..n-1.
void apply_settings(ntnoff::ScenarioConfig& cfg, const std::vector<Setting>& settings);

// `key = value` lines; blank lines and lines starting with '#' are skipped.
std::vector<Setting> parse_settings(std::string_view text);

ntnoff::ScenarioConfig parse_config(std::string_view text,
                                    ntnoff::ScenarioConfig base = ntnoff::default_scenario_config());
ntnoff::ScenarioConfig load_config_file(const std::filesystem::path& path);

// Every key, one per line, in a fixed order. Numbers use the shortest form
// that reads back to the same double, so parse_config(serialize_config(c)) == c.
std::string serialize_config(const ntnoff::ScenarioConfig& cfg);

// Shortest round-trip decimal form.
std::string format_double(double v);

double parse_double(std::string_view text, const std::string& key, int line = 0);

}  // namespace ntnsim
