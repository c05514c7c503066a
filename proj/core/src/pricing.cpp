#include "ntnoff/pricing.hpp"

#include <algorithm>

#include "ntnoff/delay.hpp"

namespace ntnoff {

namespace {

PriceResult finish(double surplus, double bar, double eps) {
  PriceResult r;
  r.bounds.surplus = std::max(0.0, surplus);
  r.bounds.hat = r.bounds.surplus * (1.0 - eps);
  r.bounds.bar = bar;
  r.price = std::max(0.0, std::min(r.bounds.hat, r.bounds.bar));
  return r;
}

}  // namespace

PriceResult mcc_price(double tau_haps, double tau_hs, double tau_sg, double tau_access,
                      double tau_max, double c_tau, double eps) {
  const double surplus = c_tau * (tau_haps - tau_hs - tau_sg);
  const double bar = c_tau * (tau_max + tau_haps - 2.0 * tau_hs - 2.0 * tau_sg - tau_access);
  return finish(surplus, bar, eps);
}

PriceResult mec_price(double tau_local, double tau_access, double tau_haps, double tau_max,
                      double rho, double B_u, double c_tau, double c_Bu, double eps) {
  const double bandwidth = c_Bu * rho * B_u;
  const double surplus = c_tau * tau_local - c_tau * tau_access - bandwidth;
  const double bar = c_tau * (tau_local - tau_haps - 2.0 * tau_access + tau_max) - bandwidth;
  return finish(surplus, bar, eps);
}

double haps_forward_margin(double price_mcc, double tau_haps, double tau_hs, double tau_sg,
                           double c_tau) {
  return c_tau * (tau_hs + tau_sg - tau_haps) + price_mcc;
}

int haps_offload_decision(double price_mcc, double tau_haps, double tau_hs, double tau_sg,
                          double c_tau) {
  return haps_forward_margin(price_mcc, tau_haps, tau_hs, tau_sg, c_tau) < 0.0 ? 1 : 0;
}

int gd_offload_decision(double price_mec, double tau_local, double tau_access, double rho,
                        double B_u, double c_tau, double c_Bu) {
  const double offload = c_tau * tau_access + c_Bu * rho * B_u + price_mec;
  return offload < c_tau * tau_local ? 1 : 0;
}

PricingOutcome solve_pricing_game(std::span<const PricingTask> tasks, const FeederState& feeder,
                                  const PricingParams& params) {
  PricingOutcome out;
  out.quotes.resize(tasks.size());
  out.decisions.resize(tasks.size());

  // HAPS <-> GD game.
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const PriceResult mec = mec_price(t.task, t.tau_local, t.tau_access, t.tau_haps, t.rho,
                                      params.B_u, params.c_tau, params.c_Bu, params.eps);
    auto& q = out.quotes[i];
    q.task_id = t.task.id;
    q.mec_bounds = mec.bounds;
    q.c_mec = params.fixed_mec_price.value_or(mec.price);

    auto& dec = out.decisions[i];
    dec.task_id = t.task.id;
    dec.beta_uh = gd_offload_decision(q.c_mec, t.tau_local, t.tau_access, t.rho, params.B_u,
                                      params.c_tau, params.c_Bu);
    if (dec.beta_uh) out.offloaded_bits += t.task.d;
  }

  // Feeder delay seen by the cloud, over everything the HAPS may forward.
  out.tau_hs = feeder_hop_delay(out.offloaded_bits, feeder.rate_hs, feeder.prop_hs);
  out.tau_sg = feeder_hop_delay(out.offloaded_bits, feeder.rate_sg, feeder.prop_sg);

  // Cloud <-> HAPS game.
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& t = tasks[i];
    const PriceResult mcc =
        mcc_price(t.task, t.tau_haps, out.tau_hs, out.tau_sg, t.tau_access, params.c_tau,
                  params.eps);
    auto& q = out.quotes[i];
    q.mcc_bounds = mcc.bounds;
    q.c_mcc = params.fixed_mcc_price.value_or(mcc.price);

    auto& dec = out.decisions[i];
    dec.beta_hs =
        haps_offload_decision(q.c_mcc, t.tau_haps, out.tau_hs, out.tau_sg, params.c_tau);
    dec.beta_hs *= dec.beta_uh;
  }
  return out;
}

}  // namespace ntnoff
