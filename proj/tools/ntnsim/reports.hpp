#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

#include "ntnoff/orchestrator.hpp"
#include "ntnsim/args.hpp"

namespace ntnsim {

// Column headers; fixed order.
inline constexpr const char* kTierCostsHeader = "c_tau,method,tier,real_cost_mean,real_cost_std";
inline constexpr const char* kPlacementHeader = "c_tau,method,payload_class,location,fraction";
inline constexpr const char* kTasksHeader =
    "c_tau,method,id,payload_class,d,mu,tau_max,placement,deadline_miss,beta_uh,beta_hs,"
    "c_mec,c_mcc,rho,rho_B,tau_access,tau_feeder,tau_compute,tau_total";

// A single snapshot viewed as a one-sample sweep cell.
ntnoff::SweepCell cell_of(const ntnoff::SnapshotReport& report);

std::string tier_costs_csv(std::span<const ntnoff::SweepCell> cells);
std::string placement_csv(std::span<const ntnoff::SweepCell> cells);
std::string tasks_csv(std::span<const ntnoff::SnapshotReport> reports);

// Run parameters as comments, then the resolved scenario. Loading it back
// with load_config_file yields the same scenario.
std::string manifest_text(const RunManifest& manifest, const ntnoff::ScenarioConfig& cfg);

// Each returns the files written, in write order. Throws IoError.
std::vector<std::filesystem::path> write_reports(std::span<const ntnoff::SnapshotReport> reports,
                                                 const RunManifest& manifest,
                                                 const ntnoff::ScenarioConfig& cfg,
                                                 const std::filesystem::path& output_dir);
std::vector<std::filesystem::path> write_reports(const ntnoff::SweepResult& sweep,
                                                 const RunManifest& manifest,
                                                 const ntnoff::ScenarioConfig& cfg,
                                                 const std::filesystem::path& output_dir);

}  // namespace ntnsim
