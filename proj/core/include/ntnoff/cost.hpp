#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ntnoff/scenario.hpp"

namespace ntnoff {

// C_i^loc = (1 - beta) c_tau tau_local + beta (c_tau tau_ih + c_Bu rho B_u + c_mec)
double gd_cost(int beta_uh, double tau_local, double tau_ih, double rho_i, double B_u,
               double c_tau, double c_Bu, double c_mec);

// Same with every c_tau-weighted term dropped: what the GD actually pays.
double gd_real_cost(int beta_uh, double rho_i, double B_u, double c_Bu, double c_mec);

// Per-task quantities entering the three tier costs.
struct TaskAccount {
  int beta_uh = 0;
  int beta_hs = 0;
  double tau_local = 0.0;   // tau_i^i
  double tau_access = 0.0;  // tau_{i,h}
  double tau_haps = 0.0;    // tau_i^h
  double rho = 0.0;         // share of the GD-HAPS channel
  double c_mec = 0.0;
  double c_mcc = 0.0;
};

struct TierInputs {
  std::span<const TaskAccount> tasks;
  double tau_hs = 0.0;  // HAPS->LEO hop incl. 2x propagation
  double tau_sg = 0.0;  // LEO->GW hop incl. 2x propagation
  double rho_B = 0.0;
  double B_u = 0.0;
  double B_h = 0.0;
  CostParams cost;
};

// Throws Errc::InconsistentOffloadFlags if some task has beta_hs = 1 without
// beta_uh = 1, or a flag outside {0, 1}.
void check_offload_flags(std::span<const TaskAccount> tasks);

// HAPS cost: bandwidth rent to the LEO, minus GD payments, plus delay cost of
// HAPS-computed tasks, plus delay and compute price of cloud-bound tasks.
double mec_cost(const TierInputs& in);

// Cloud cost (negative = utility): -c_Bh rho_B B_h - sum beta_hs c_mcc
double mcc_cost(const TierInputs& in);

struct MecPartials {
  double loc = 0.0;  // GD <-> HAPS interaction
  double mcc = 0.0;  // HAPS <-> cloud interaction
};

// mec_cost == loc + mcc for any consistent flag assignment.
MecPartials mec_partials(const TierInputs& in);

struct TierCosts {
  std::vector<double> gd_costs;
  double mec_cost = 0.0;
  double mcc_cost = 0.0;
  double mec_loc_partial = 0.0;
  double mec_mcc_partial = 0.0;

  std::vector<double> real_gd_costs;
  double real_mec = 0.0;
  double real_mcc = 0.0;

  double gd_total() const;
  double real_gd_total() const;

  bool operator==(const TierCosts&) const = default;
};

TierCosts evaluate_tier_costs(const TierInputs& in);

}  // namespace ntnoff
