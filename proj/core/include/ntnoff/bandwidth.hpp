#pragma once

#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "ntnoff/scenario.hpp"

namespace ntnoff {

// Both allocation problems reduce to per-link objectives of the form
// a / rho + b * rho, convex on rho > 0.

struct ShareCoefficients {
  double a = 0.0;  // multiplies 1 / rho (delay cost)
  double b = 0.0;  // multiplies rho (bandwidth rent)
};

// a = c_tau * |I^s| * sum_d / B_h * (1/se_hs + 1/se_sg), b = c_Bh * B_h.
// Throws Errc::ZeroSpectralEfficiency.
ShareCoefficients feeder_coefficients(std::span<const double> offloaded_bits, double B_h,
                                      double se_hs, double se_sg, double c_tau, double c_Bh);

// a = c_tau * d / (B_u * se), b = c_Bu * B_u. Throws Errc::ZeroSpectralEfficiency.
ShareCoefficients access_coefficients(const Task& task, double B_u, double se, double c_tau,
                                      double c_Bu);

// argmin of a / rho + b * rho: sqrt(a / b); +inf when b == 0 and a > 0.
double unconstrained_opt_share(double a, double b);

struct ShareInterval {
  double lo = 0.0;
  double hi = 0.0;
};

// The set {rho > 0 : a / rho + b * rho <= budget}, i.e. the roots of
// b rho^2 - budget rho + a. Empty when budget < 2 sqrt(a b). Roots are taken in
// the cancellation-free form so that a tiny a*b does not lose the lower root.
std::optional<ShareInterval> quadratic_interval(double a, double b, double budget);

enum class PruneStage {
  FeederBudget,    // HAPS forwarding costs more than it saves
  FeederDeadline,  // no feeder share <= 1 meets every deadline within budget
  AccessDeadline,  // the access channel cannot carry every task in time
  AccessFairness,  // no common cost level fits the access channel
};

std::string_view to_string(PruneStage s);

struct PruneEvent {
  int task_id = 0;
  PruneStage stage = PruneStage::FeederBudget;

  bool operator==(const PruneEvent&) const = default;
};

// ---- HAPS-LEO-GW chain ----

struct FeederTask {
  int id = 0;
  double d = 0.0;
  double tau_max = 0.0;
  double tau_access = 0.0;  // final GD->HAPS transmission delay
  double tau_haps = 0.0;    // what the HAPS would spend computing it
  double c_mcc = 0.0;
};

struct FeederParams {
  double B_h = 0.0;
  double se_hs = 0.0;
  double se_sg = 0.0;
  double prop_hs = 0.0;
  double prop_sg = 0.0;
  double c_tau = 0.0;
  double c_Bh = 0.0;
};

struct FeederAllocation {
  double rho_B = 0.0;
  std::vector<int> kept;           // ascending id
  std::vector<PruneEvent> pruned;  // in removal order
  ShareCoefficients coeffs;        // for the kept set
  double budget = 0.0;             // sum over kept of c_tau tau_haps - c_mcc
  double rho_min = 0.0;
  double rho_max = 0.0;
};

FeederAllocation allocate_feeder(std::span<const FeederTask> candidates, const FeederParams& p);

// ---- GD-HAPS access channel ----

struct AccessTask {
  int id = 0;
  double d = 0.0;
  double tau_max = 0.0;
  double tau_local = 0.0;
  double tau_haps = 0.0;
  double c_mec = 0.0;
  double se = 0.0;  // spectral efficiency of the GD->HAPS link
};

struct AccessParams {
  double B_u = 0.0;
  double c_tau = 0.0;
  double c_Bu = 0.0;
  int n_bisect = 40;
  AccessPruneKey prune_key = AccessPruneKey::LocalMargin;
};

struct AccessAllocation {
  std::map<int, double> rho;  // kept tasks only
  std::vector<int> kept;
  std::vector<PruneEvent> pruned;
  double eta = 0.0;  // common cost level reached by bisection
  double eta_min = 0.0;
  double eta_max = 0.0;
};

// Min-max fair split of the access channel. After deadline pruning and
// fairness pruning, bisects on the common cost level eta for the smallest one
// whose per-task share floors fit into the channel. Each task then gets its own
// optimum clipped to [floor, ceiling] at that level; if those optima overfill
// the channel they are pulled back toward the floors by a common factor.
AccessAllocation allocate_access(std::span<const AccessTask> candidates, const AccessParams& p);

}  // namespace ntnoff
