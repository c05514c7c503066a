#pragma once

#include <optional>
#include <span>
#include <vector>

#include "ntnoff/scenario.hpp"

namespace ntnoff {

// Price bounds for one tier and one task.
//   surplus : the unmargined profit-extraction bound, [.]^+
//   hat     : surplus * (1 - eps), strictly below the point where the payer
//             becomes indifferent
//   bar     : deadline-derived bound (may be negative)
struct PriceBounds {
  double surplus = 0.0;
  double hat = 0.0;
  double bar = 0.0;

  bool operator==(const PriceBounds&) const = default;
};

struct PriceResult {
  double price = 0.0;  // max(0, min(hat, bar))
  PriceBounds bounds;

  // The deadline bound is negative: a zero price cannot make the task feasible.
  bool delay_critical() const { return bounds.bar < 0.0; }
};

// Cloud price to the HAPS:
//   hat = c_tau [tau_haps - tau_hs - tau_sg]^+ (1 - eps)
//   bar = c_tau (tau_max + tau_haps - 2 tau_hs - 2 tau_sg - tau_access)
PriceResult mcc_price(double tau_haps, double tau_hs, double tau_sg, double tau_access,
                      double tau_max, double c_tau, double eps);
inline PriceResult mcc_price(const Task& task, double tau_haps, double tau_hs, double tau_sg,
                             double tau_access, double c_tau, double eps) {
  return mcc_price(tau_haps, tau_hs, tau_sg, tau_access, task.tau_max, c_tau, eps);
}

// HAPS price to a GD:
//   hat = [c_tau tau_local - c_tau tau_access - c_Bu rho B_u]^+ (1 - eps)
//   bar = c_tau (tau_local - tau_haps - 2 tau_access + tau_max) - c_Bu rho B_u
PriceResult mec_price(double tau_local, double tau_access, double tau_haps, double tau_max,
                      double rho, double B_u, double c_tau, double c_Bu, double eps);
inline PriceResult mec_price(const Task& task, double tau_local, double tau_access,
                             double tau_haps, double rho, double B_u, double c_tau, double c_Bu,
                             double eps) {
  return mec_price(tau_local, tau_access, tau_haps, task.tau_max, rho, B_u, c_tau, c_Bu, eps);
}

// Marginal HAPS cost of forwarding the task to the cloud:
// c_tau (tau_hs + tau_sg - tau_haps) + price.
double haps_forward_margin(double price_mcc, double tau_haps, double tau_hs, double tau_sg,
                           double c_tau);

// 1 iff forwarding strictly lowers the HAPS cost.
int haps_offload_decision(double price_mcc, double tau_haps, double tau_hs, double tau_sg,
                          double c_tau);

// 1 iff offloading is strictly cheaper for the GD than computing locally.
int gd_offload_decision(double price_mec, double tau_local, double tau_access, double rho,
                        double B_u, double c_tau, double c_Bu);

struct PriceQuote {
  int task_id = 0;
  double c_mcc = 0.0;
  double c_mec = 0.0;
  PriceBounds mcc_bounds;
  PriceBounds mec_bounds;

  bool operator==(const PriceQuote&) const = default;
};

struct OffloadDecision {
  int task_id = 0;
  int beta_uh = 0;
  int beta_hs = 0;

  bool operator==(const OffloadDecision&) const = default;
};

// Delays of one task as seen when prices are set.
struct PricingTask {
  Task task;
  double tau_local = 0.0;
  double tau_access = 0.0;
  double tau_haps = 0.0;
  double rho = 0.0;
};

// Feeder chain at the pricing-stage share rho_B.
struct FeederState {
  double rate_hs = 0.0;
  double rate_sg = 0.0;
  double prop_hs = 0.0;
  double prop_sg = 0.0;
};

struct PricingParams {
  double c_tau = 0.0;
  double c_Bu = 0.0;
  double B_u = 0.0;
  double eps = 1e-3;
  // When set, every task is quoted this price instead of its own policy price.
  std::optional<double> fixed_mec_price;
  std::optional<double> fixed_mcc_price;
};

struct PricingOutcome {
  std::vector<PriceQuote> quotes;
  std::vector<OffloadDecision> decisions;
  double offloaded_bits = 0.0;  // sum of d over beta_uh = 1
  double tau_hs = 0.0;          // feeder hop delays used for the cloud prices
  double tau_sg = 0.0;
};

// Backward induction for one snapshot. GD-tier prices and decisions come
// first; the feeder delay is then evaluated over every task heading to the
// HAPS, and the cloud prices and HAPS forwarding decisions follow. Finally
// beta_hs := beta_hs * beta_uh. Deadlines are not enforced here.
PricingOutcome solve_pricing_game(std::span<const PricingTask> tasks, const FeederState& feeder,
                                  const PricingParams& params);

}  // namespace ntnoff
