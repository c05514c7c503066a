#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace ntnoff {

inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s

// Cartesian position in meters; the ground plane is z = 0.
struct Position3D {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;

  bool operator==(const Position3D&) const = default;
};

double distance(const Position3D& a, const Position3D& b);

enum class PayloadClass { Large, Medium, Low };

inline constexpr PayloadClass kPayloadClasses[] = {PayloadClass::Large, PayloadClass::Medium,
                                                   PayloadClass::Low};

std::string_view to_string(PayloadClass c);
std::optional<PayloadClass> parse_payload_class(std::string_view name);
inline constexpr std::size_t index_of(PayloadClass c) { return static_cast<std::size_t>(c); }

// One computing task: d bits at mu cycles/bit that must finish within tau_max seconds.
struct Task {
  int id = 0;
  double d = 0.0;
  double mu = 0.0;
  double tau_max = 0.0;
  PayloadClass payload_class = PayloadClass::Low;

  bool operator==(const Task&) const = default;
};

// Generator parameters for one healthcare payload class.
struct PayloadClassSpec {
  PayloadClass payload_class = PayloadClass::Low;
  double mean_bits = 0.0;
  double rel_std = 0.0;
  double mu = 0.0;
  double tau_max = 0.0;
  double mix_fraction = 0.0;

  bool operator==(const PayloadClassSpec&) const = default;
};

struct CostParams {
  double c_tau = 1e3;   // virtual delay cost per second
  double c_Bu = 1e-13;  // price per Hz of GD-HAPS spectrum
  double c_Bh = 1e-13;  // price per Hz of HAPS-LEO-GW spectrum

  bool operator==(const CostParams&) const = default;
};

// Air-to-ground LoS probability and excess-loss constants.
struct AtgEnvironment {
  double a = 9.61;
  double b = 0.16;
  double eta_los_db = 1.0;
  double eta_nlos_db = 20.0;

  bool operator==(const AtgEnvironment&) const = default;
};

struct RadioParams {
  double B_u = 1.4e6;        // shared GD-HAPS channel (Hz)
  double B_h = 100e6;        // HAPS-LEO and LEO-GW channels (Hz)
  double B_u_norm = 20e6;    // bandwidth over which p_i is spread (Hz)
  double B_h_norm = 200e6;   // bandwidth over which p_h, p_s are spread (Hz)
  double f_c_access = 2.1e9;
  double f_c_feeder = 28e9;
  double N0 = 3.981071705534973e-21;  // W/Hz, -174 dBm/Hz
  double p_i = 0.5;
  double p_h = 2.0;
  double p_s = 1.0;
  int M_h_d = 16;
  int M_h_u = 64;
  int M_s = 64;
  int M_g = 256;
  double rician_K = 10.0;
  AtgEnvironment atg_env;
  double G_atm = 1.0;

  bool operator==(const RadioParams&) const = default;
};

enum class HapsSharePolicy { StaticEqualAllGDs, EqualAmongComputed };

std::string_view to_string(HapsSharePolicy p);
std::optional<HapsSharePolicy> parse_haps_share_policy(std::string_view name);

struct ComputeParams {
  double F_h = 10e9;
  double f_local = 16e6;
  HapsSharePolicy haps_share_policy = HapsSharePolicy::StaticEqualAllGDs;

  bool operator==(const ComputeParams&) const = default;
};

// Which quantity the GD-HAPS allocator minimises when it has to evict a task
// because the common cost level cannot be met.
enum class AccessPruneKey {
  LocalMargin,  // c_tau * tau_local - c_mec: the task that pins the upper cost level
  HapsMargin,   // c_tau * tau_haps - c_mec
};

std::string_view to_string(AccessPruneKey k);
std::optional<AccessPruneKey> parse_access_prune_key(std::string_view name);

struct SolverParams {
  int n_bisect = 40;
  int pricing_passes = 1;  // 1 = single pass; up to 5 re-price at allocated shares
  AccessPruneKey access_prune_key = AccessPruneKey::LocalMargin;

  bool operator==(const SolverParams&) const = default;
};

struct GroundDevice {
  int id = 0;
  Position3D pos;

  bool operator==(const GroundDevice&) const = default;
};

// Unvalidated scenario description, as read from a config file.
struct ScenarioConfig {
  std::vector<GroundDevice> gds;
  Position3D haps_pos{0.0, 0.0, 20e3};
  Position3D leo_pos{0.0, 5e3, 500e3};
  Position3D gw_pos{0.0, 10e3, 0.0};
  RadioParams radio;
  CostParams cost;
  ComputeParams compute;
  std::vector<PayloadClassSpec> task_classes;
  SolverParams solver;
  std::uint64_t seed = 1;
  double price_margin_eps = 1e-3;

  bool operator==(const ScenarioConfig&) const = default;
};

// GDs evenly spaced on a ground ring of the given radius around the origin.
std::vector<GroundDevice> ring_layout(int count, double radius_m);

// Fourteen GDs, the HAPS/LEO/GW geometry, S/Ka-band radio and healthcare task mix.
ScenarioConfig default_scenario_config();

// A validated, immutable scenario. Safe to share read-only across threads.
class Scenario {
 public:
  const ScenarioConfig& config() const noexcept { return config_; }

  const std::vector<GroundDevice>& gds() const noexcept { return config_.gds; }
  std::size_t gd_count() const noexcept { return config_.gds.size(); }
  const RadioParams& radio() const noexcept { return config_.radio; }
  const CostParams& cost() const noexcept { return config_.cost; }
  const ComputeParams& compute() const noexcept { return config_.compute; }
  const SolverParams& solver() const noexcept { return config_.solver; }
  double eps() const noexcept { return config_.price_margin_eps; }

  double wavelength_access() const noexcept { return lambda_access_; }
  double wavelength_feeder() const noexcept { return lambda_feeder_; }

  bool operator==(const Scenario&) const = default;

 private:
  friend Scenario validate_scenario(const ScenarioConfig& raw);

  ScenarioConfig config_;
  double lambda_access_ = 0.0;
  double lambda_feeder_ = 0.0;
};

// Throws ntnoff::Error naming the offending field.
Scenario validate_scenario(const ScenarioConfig& raw);
inline Scenario validate_scenario(const Scenario& s) { return validate_scenario(s.config()); }

// Copy of `base` with a different delay cost; revalidated.
Scenario with_delay_cost(const Scenario& base, double c_tau);

}  // namespace ntnoff
