#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ntnoff/bandwidth.hpp"
#include "ntnoff/channel.hpp"
#include "ntnoff/cost.hpp"
#include "ntnoff/delay.hpp"
#include "ntnoff/pricing.hpp"
#include "ntnoff/scenario.hpp"

namespace ntnoff {

enum class Method { Proposed, FixedMaxCost, NoBWOpt };
inline constexpr std::array<Method, 3> kAllMethods{Method::Proposed, Method::FixedMaxCost,
                                                   Method::NoBWOpt};
std::string_view to_string(Method m);  // proposed, fixed-max, no-bw-opt
std::optional<Method> parse_method(std::string_view name);

enum class Placement { Local, MEC, MCC };
inline constexpr std::array<Placement, 3> kAllPlacements{Placement::Local, Placement::MEC,
                                                         Placement::MCC};
std::string_view to_string(Placement p);  // local, mec, mcc

enum class Tier { GD, MEC, MCC };
inline constexpr std::array<Tier, 3> kAllTiers{Tier::GD, Tier::MEC, Tier::MCC};
std::string_view to_string(Tier t);  // gd, mec, mcc

// What a task saw when prices were quoted (last pricing pass).
struct PricingView {
  double rho = 0.0;
  double tau_access = 0.0;
  int beta_uh = 0;
  int beta_hs = 0;

  bool operator==(const PricingView&) const = default;
};

struct TaskOutcome {
  Task task;
  Placement placement = Placement::Local;
  bool deadline_miss = false;  // Local, and even local execution is too slow
  int beta_uh = 0;
  int beta_hs = 0;
  PriceQuote quote;
  double rho = 0.0;  // final access share (0 when Local)
  double tau_local = 0.0;
  double tau_haps = 0.0;
  DelayBreakdown delay;  // of the chosen placement
  PricingView at_pricing;

  bool operator==(const TaskOutcome&) const = default;
};

struct PruneRecord {
  int task_id = 0;
  std::string_view stage;  // e.g. "access-fairness", "no-bw-opt-deadline"
  std::string_view reason;

  bool operator==(const PruneRecord&) const = default;
};

struct SnapshotReport {
  Method method = Method::Proposed;
  CostParams cost;
  std::vector<TaskOutcome> tasks;
  double rho_B = 0.0;
  double tau_hs = 0.0;  // final feeder hop delays (0 when nothing reaches the cloud)
  double tau_sg = 0.0;
  double pricing_tau_hs = 0.0;  // feeder hop delays the cloud prices were based on
  double pricing_tau_sg = 0.0;
  double haps_cpu_share = 0.0;  // Hz per HAPS-computed task
  double eta = 0.0;             // common access cost level (Proposed only)
  TierCosts costs;
  std::vector<PruneRecord> prune_log;

  std::size_t offloaded_count() const;
  double real_cost(Tier t) const;

  bool operator==(const SnapshotReport&) const = default;
};

// Tasks and channel realization of one snapshot.
struct SnapshotDraw {
  std::vector<Task> tasks;
  ChannelSnapshot channels;

  bool operator==(const SnapshotDraw&) const = default;
};

// Tasks from stream (seed, 1), channels from stream (seed, 2). Independent of
// c_tau and of the method, so runs on the same seed are paired.
SnapshotDraw draw_snapshot(const Scenario& scenario, std::uint64_t seed);

// Full pipeline on a frozen draw. Task i is generated by GD i.
SnapshotReport run_snapshot(const Scenario& scenario, const SnapshotDraw& draw, Method method);

// Draws channels from the scenario seed, then runs the pipeline.
SnapshotReport run_snapshot(const Scenario& scenario, std::span<const Task> tasks, Method method);

struct RunningSummary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single value

  bool operator==(const RunningSummary&) const = default;
};

struct SweepCell {
  double c_tau = 0.0;
  Method method = Method::Proposed;
  std::array<RunningSummary, 3> real_cost;  // indexed by Tier
  // [class][placement] counts over snapshots; deadline misses counted apart.
  std::array<std::array<int, 3>, 3> placement_count{};
  std::array<int, 3> deadline_miss{};
  double offloaded_mean = 0.0;

  // Share of the class's non-missed tasks in `p`; 0 if there are none.
  double placement_fraction(PayloadClass c, Placement p) const;

  bool operator==(const SweepCell&) const = default;
};

struct SweepResult {
  std::vector<double> c_tau_grid;
  std::vector<Method> methods;
  int n_snapshots = 0;
  std::uint64_t base_seed = 0;
  std::vector<SweepCell> cells;  // grid-major, then method in `methods` order

  const SweepCell& cell(std::size_t grid_idx, std::size_t method_idx) const;

  bool operator==(const SweepResult&) const = default;
};

// Snapshot k uses seed scenario.seed + k for every grid point and method.
SweepResult run_sweep(const Scenario& scenario, std::span<const double> c_tau_grid,
                      int n_snapshots, std::span<const Method> methods = kAllMethods);

}  // namespace ntnoff
