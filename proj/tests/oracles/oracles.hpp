#pragma once

// Brute-force references for the test suite. Nothing here calls into the
// allocation or pricing code under test.

#include <functional>
#include <vector>

#include "ntnoff/cost.hpp"

namespace oracle {

struct GridSpec {
  double lo = 0.0;
  double hi = 1.0;
  long n_points = 1000;  // >= 2, endpoints included
};

struct ScalarMin {
  double rho = 0.0;
  double value = 0.0;
};

// argmin of a / rho + b * rho over the grid points.
ScalarMin grid_min_scalar(double a, double b, const GridSpec& grid);

struct BoxBound {
  double lo = 0.0;
  double hi = 1.0;
};

struct SimplexMinMax {
  std::vector<double> rho;
  double value = 0.0;  // max_i a_i / rho_i + b_i rho_i at `rho`
  bool feasible = false;
};

// Minimizes max_i (a_i / rho_i + b_i rho_i) over the boxes with sum rho <= 1.
// The first n-1 coordinates are searched on a grid that is repeatedly zoomed
// around the incumbent; the last takes whatever budget is left and is placed
// by ternary search. Every returned point satisfies the constraints.
SimplexMinMax grid_minmax_simplex(const std::vector<double>& a, const std::vector<double>& b,
                                  const std::vector<BoxBound>& bounds, int resolution = 24,
                                  int zoom_levels = 40);

// --- Feeder subset enumeration -------------------------------------------

struct FeederItem {
  double d = 0.0;
  double tau_max = 0.0;
  double tau_access = 0.0;
  double tau_haps = 0.0;
  double c_mcc = 0.0;
};

struct FeederEnv {
  double B_h = 0.0;
  double se_hs = 0.0;
  double se_sg = 0.0;
  double prop_hs = 0.0;
  double prop_sg = 0.0;
  double c_tau = 0.0;
  double c_Bh = 0.0;
};

// Written straight from the model: every task in the set waits for the whole
// batch on both hops.
double feeder_objective(const std::vector<FeederItem>& set, const FeederEnv& env, double rho_B);
double feeder_budget(const std::vector<FeederItem>& set, const FeederEnv& env);
bool feeder_point_feasible(const std::vector<FeederItem>& set, const FeederEnv& env, double rho_B,
                           double rel_tol = 1e-12);
// HAPS cost of forwarding `set` at rho_B, relative to computing it on board.
double feeder_haps_cost(const std::vector<FeederItem>& set, const FeederEnv& env, double rho_B);

struct SubsetChoice {
  std::vector<int> members;  // indices into the candidate list
  double rho_B = 0.0;
  double cost = 0.0;  // feeder_haps_cost; 0 for the empty set
  bool feasible = false;
};

// Best feasible rho_B in (0, 1] for a fixed set: grid then zoom.
SubsetChoice best_share_for_set(const std::vector<FeederItem>& all, const std::vector<int>& members,
                                const FeederEnv& env, long grid_points = 20000);

// Every subset of up to 12 candidates; returns the cheapest feasible one.
SubsetChoice enumerate_offload_subsets(const std::vector<FeederItem>& all, const FeederEnv& env,
                                       long grid_points = 4000);

// --- Access level scan ---------------------------------------------------

struct AccessItem {
  double a = 0.0;
  double b = 0.0;
  double deadline_floor = 0.0;  // share needed to meet the deadline
};

// Whether every task can sit at cost <= eta on shares that fit the channel.
// Uses the textbook quadratic formula.
bool access_level_feasible(const std::vector<AccessItem>& items, double eta);

// Smallest feasible eta on an n-point linear grid over [lo, hi]; hi if none.
double scan_smallest_level(const std::vector<AccessItem>& items, double lo, double hi, long n);

// --- Cost accounting -----------------------------------------------------

struct TierTotals {
  std::vector<double> gd;
  double mec = 0.0;
  double mcc = 0.0;
};

// Literal sums of the per-tier cost definitions.
TierTotals tier_costs_reference(const ntnoff::TierInputs& in);

}  // namespace oracle
