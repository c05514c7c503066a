#include <gtest/gtest.h>

#include "ntnoff/delay.hpp"
#include "ntnoff/orchestrator.hpp"
#include "ntnoff/pricing.hpp"
#include "ntnoff/random.hpp"

using namespace ntnoff;

TEST(CloudPrice, ClampsWhenForwardingIsSlower) {
  const auto r = mcc_price(1e-3, 1.6e-3, 1.7e-3, 0.0, 0.5, 1000.0, 1e-3);
  EXPECT_EQ(r.bounds.surplus, 0.0);
  EXPECT_EQ(r.bounds.hat, 0.0);
  EXPECT_EQ(r.price, 0.0);
}

TEST(CloudPrice, MarginedSurplusBinds) {
  const auto r = mcc_price(4.1e-3, 1.7e-3, 1.7e-3, 2.9e-2, 0.5, 1000.0, 1e-3);
  EXPECT_NEAR(r.bounds.hat, 0.6993, 1e-9);
  EXPECT_NEAR(r.bounds.bar, 468.3, 1e-9);
  EXPECT_NEAR(r.price, 0.6993, 1e-9);
  EXPECT_FALSE(r.delay_critical());
}

TEST(CloudPrice, NegativeDeadlineBoundGivesZeroPrice) {
  const auto r = mcc_price(4.1e-3, 1.7e-3, 1.7e-3, 0.5, 0.01, 1000.0, 1e-3);
  EXPECT_LT(r.bounds.bar, 0.0);
  EXPECT_TRUE(r.delay_critical());
  EXPECT_EQ(r.price, 0.0);
}

TEST(HapsPrice, ClampsWhenLocalIsFaster) {
  const auto r = mec_price(0.01, 0.02, 0.001, 0.5, 0.1, 1.4e6, 1000.0, 0.0, 1e-3);
  EXPECT_EQ(r.bounds.hat, 0.0);
  EXPECT_EQ(r.price, 0.0);
}

TEST(HapsPrice, MarginedSurplusBinds) {
  const double rho = 1.0 / 14.0;  // rho * B_u * c_Bu = 1e-8
  const auto r = mec_price(0.082, 0.0293, 0.0041, 0.5, rho, 1.4e6, 1000.0, 1e-13, 1e-3);
  EXPECT_NEAR(r.bounds.hat, (82.0 - 29.3 - 1e-8) * 0.999, 1e-9);
  EXPECT_NEAR(r.bounds.hat, 52.65, 0.01);
  EXPECT_NEAR(r.bounds.bar, 519.3, 1e-6);
  EXPECT_DOUBLE_EQ(r.price, r.bounds.hat);
}

TEST(HapsDecision, FollowsStrictMargin) {
  const double tau_h = 4.1e-3, hs = 1.7e-3, sg = 1.7e-3, c_tau = 1000.0;
  const auto r = mcc_price(tau_h, hs, sg, 0.0, 0.5, c_tau, 1e-3);
  EXPECT_NEAR(haps_forward_margin(r.price, tau_h, hs, sg, c_tau), -1e-3 * c_tau * (tau_h - hs - sg),
              1e-12);
  EXPECT_EQ(haps_offload_decision(r.price, tau_h, hs, sg, c_tau), 1);
  EXPECT_EQ(haps_offload_decision(0.0, 1e-3, hs, sg, c_tau), 0);
  // Exactly representable: 4 * (0.125 + 0.125 - 0.5) + 1 == 0.
  EXPECT_EQ(haps_forward_margin(1.0, 0.5, 0.125, 0.125, 4.0), 0.0);
  EXPECT_EQ(haps_offload_decision(1.0, 0.5, 0.125, 0.125, 4.0), 0);
}

TEST(GdDecision, FollowsStrictMargin) {
  const double rho = 1.0 / 14.0;
  const auto r = mec_price(0.082, 0.0293, 0.0041, 0.5, rho, 1.4e6, 1000.0, 1e-13, 1e-3);
  EXPECT_EQ(gd_offload_decision(r.price, 0.082, 0.0293, rho, 1.4e6, 1000.0, 1e-13), 1);
  EXPECT_EQ(gd_offload_decision(0.0, 0.082, 0.0293, rho, 1.4e6, 0.0, 1e-13), 0);
  // Exactly representable tie: 4 * 0.5 == 4 * 0.25 + 1.
  EXPECT_EQ(gd_offload_decision(1.0, 0.5, 0.25, 0.0, 1.4e6, 4.0, 0.0), 0);
}

TEST(PricingGame, QuotesEveryTaskAndKeepsFlagsConsistent) {
  RandomStream rng(9);
  std::vector<PricingTask> tasks;
  for (int i = 0; i < 10; ++i) {
    PricingTask t;
    t.task = {i, 1e3 + 9e4 * rng.uniform(), 50.0 + 450.0 * rng.uniform(), 0.5,
              PayloadClass::Large};
    t.tau_local = 0.2 * rng.uniform();
    t.tau_access = 0.05 * rng.uniform();
    t.tau_haps = 0.02 * rng.uniform();
    t.rho = 0.1;
    tasks.push_back(t);
  }
  const FeederState feeder{5e6, 8e6, 1.6e-3, 1.7e-3};
  const PricingParams params{1000.0, 1e-13, 1.4e6, 1e-3, {}, {}};
  const auto out = solve_pricing_game(tasks, feeder, params);
  ASSERT_EQ(out.quotes.size(), tasks.size());
  ASSERT_EQ(out.decisions.size(), tasks.size());
  double bits = 0.0;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const auto& q = out.quotes[i];
    const auto& d = out.decisions[i];
    EXPECT_EQ(q.task_id, tasks[i].task.id);
    EXPECT_GE(q.c_mec, 0.0);
    EXPECT_GE(q.c_mcc, 0.0);
    EXPECT_LE(d.beta_hs, d.beta_uh);
    if (d.beta_uh == 1) bits += tasks[i].task.d;
    const auto mec = mec_price(tasks[i].task, tasks[i].tau_local, tasks[i].tau_access,
                               tasks[i].tau_haps, tasks[i].rho, 1.4e6, 1000.0, 1e-13, 1e-3);
    EXPECT_EQ(q.c_mec, mec.price);
    EXPECT_EQ(d.beta_uh, gd_offload_decision(q.c_mec, tasks[i].tau_local, tasks[i].tau_access,
                                             tasks[i].rho, 1.4e6, 1000.0, 1e-13));
  }
  EXPECT_DOUBLE_EQ(out.offloaded_bits, bits);
  EXPECT_DOUBLE_EQ(out.tau_hs, feeder_hop_delay(bits, feeder.rate_hs, feeder.prop_hs));
  EXPECT_DOUBLE_EQ(out.tau_sg, feeder_hop_delay(bits, feeder.rate_sg, feeder.prop_sg));
}

TEST(PricingGame, FixedPricesOverridePolicies) {
  PricingTask t;
  t.task = {0, 82000.0, 500.0, 0.5, PayloadClass::Large};
  t.tau_local = 2.0;
  t.tau_access = 0.03;
  t.tau_haps = 0.004;
  t.rho = 0.1;
  PricingParams params{1000.0, 1e-13, 1.4e6, 1e-3, 123.0, 0.25};
  const auto out = solve_pricing_game(std::span<const PricingTask>(&t, 1), {1e9, 1e9, 0, 0}, params);
  EXPECT_EQ(out.quotes[0].c_mec, 123.0);
  EXPECT_EQ(out.quotes[0].c_mcc, 0.25);
  EXPECT_EQ(out.decisions[0].beta_uh, 1);
  EXPECT_EQ(out.decisions[0].beta_hs, 1);
}

TEST(PricingGame, LowPayloadStaysLocalWithFastLocalCpu) {
  auto cfg = default_scenario_config();
  cfg.compute.f_local = 1e9;
  const Scenario s = validate_scenario(cfg);
  const auto draw = draw_snapshot(s, 1);
  const auto report = run_snapshot(s, draw, Method::Proposed);
  int lows = 0;
  for (const auto& t : report.tasks) {
    if (t.task.payload_class != PayloadClass::Low) continue;
    ++lows;
    EXPECT_EQ(t.at_pricing.beta_uh, 0) << "task " << t.task.id;
    EXPECT_EQ(t.quote.task_id, t.task.id);
  }
  EXPECT_GT(lows, 0);
}

TEST(PricingGame, LargePayloadGoesToTheCloudUnderDefaults) {
  const Scenario s = validate_scenario(default_scenario_config());
  const auto report = run_snapshot(s, draw_snapshot(s, 1), Method::Proposed);
  const auto& t = report.tasks.at(12);
  ASSERT_EQ(t.task.payload_class, PayloadClass::Large);
  EXPECT_EQ(t.at_pricing.beta_uh, 1);
  EXPECT_EQ(t.at_pricing.beta_hs, 1);
}
