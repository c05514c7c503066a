#include "ntnoff/cost.hpp"

#include <numeric>
#include <string>

#include "ntnoff/error.hpp"

namespace ntnoff {

double gd_cost(int beta_uh, double tau_local, double tau_ih, double rho_i, double B_u,
               double c_tau, double c_Bu, double c_mec) {
  if (beta_uh == 0) return c_tau * tau_local;
  return c_tau * tau_ih + c_Bu * rho_i * B_u + c_mec;
}

double gd_real_cost(int beta_uh, double rho_i, double B_u, double c_Bu, double c_mec) {
  if (beta_uh == 0) return 0.0;
  return c_Bu * rho_i * B_u + c_mec;
}

void check_offload_flags(std::span<const TaskAccount> tasks) {
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const bool binary = (t.beta_uh == 0 || t.beta_uh == 1) && (t.beta_hs == 0 || t.beta_hs == 1);
    if (!binary || t.beta_hs > t.beta_uh)
      throw Error(Errc::InconsistentOffloadFlags, "tasks[" + std::to_string(i) + "]",
                  "beta_hs = 1 requires beta_uh = 1");
  }
}

double mec_cost(const TierInputs& in) {
  check_offload_flags(in.tasks);
  const auto& c = in.cost;
  double total = c.c_Bh * in.rho_B * in.B_h;
  for (const auto& t : in.tasks) {
    total -= t.beta_uh * (c.c_Bu * t.rho * in.B_u + t.c_mec);
    total += (t.beta_uh - t.beta_hs) * c.c_tau * t.tau_haps;
    total += t.beta_hs * (c.c_tau * (in.tau_hs + in.tau_sg) + t.c_mcc);
  }
  return total;
}

double mcc_cost(const TierInputs& in) {
  double total = -in.cost.c_Bh * in.rho_B * in.B_h;
  for (const auto& t : in.tasks) total -= t.beta_hs * t.c_mcc;
  return total;
}

MecPartials mec_partials(const TierInputs& in) {
  check_offload_flags(in.tasks);
  const auto& c = in.cost;
  MecPartials p;
  p.mcc = c.c_Bh * in.rho_B * in.B_h;
  for (const auto& t : in.tasks) {
    p.loc += t.beta_uh * (c.c_tau * t.tau_haps - c.c_Bu * t.rho * in.B_u - t.c_mec);
    p.mcc += t.beta_hs * (c.c_tau * (in.tau_hs + in.tau_sg - t.tau_haps) + t.c_mcc);
  }
  return p;
}

double TierCosts::gd_total() const {
  return std::accumulate(gd_costs.begin(), gd_costs.end(), 0.0);
}

double TierCosts::real_gd_total() const {
  return std::accumulate(real_gd_costs.begin(), real_gd_costs.end(), 0.0);
}

TierCosts evaluate_tier_costs(const TierInputs& in) {
  TierCosts out;
  const auto& c = in.cost;
  out.gd_costs.reserve(in.tasks.size());
  out.real_gd_costs.reserve(in.tasks.size());
  for (const auto& t : in.tasks) {
    out.gd_costs.push_back(
        gd_cost(t.beta_uh, t.tau_local, t.tau_access, t.rho, in.B_u, c.c_tau, c.c_Bu, t.c_mec));
    out.real_gd_costs.push_back(gd_real_cost(t.beta_uh, t.rho, in.B_u, c.c_Bu, t.c_mec));
  }
  out.mec_cost = mec_cost(in);
  out.mcc_cost = mcc_cost(in);
  const MecPartials p = mec_partials(in);
  out.mec_loc_partial = p.loc;
  out.mec_mcc_partial = p.mcc;

  TierInputs real = in;
  real.cost.c_tau = 0.0;
  out.real_mec = mec_cost(real);
  out.real_mcc = mcc_cost(real);
  return out;
}

}  // namespace ntnoff
