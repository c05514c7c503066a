#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>

#include "ntnoff/bandwidth.hpp"
#include "ntnoff/error.hpp"
#include "ntnoff/random.hpp"
#include "oracles/oracles.hpp"

using namespace ntnoff;

namespace {

double objective(double a, double b, double rho) { return a / rho + b * rho; }

FeederParams feeder_params(double se = 2.0) {
  return {1e8, se, se, 1.6e-3, 1.7e-3, 1000.0, 1e-13};
}

oracle::FeederEnv env_of(const FeederParams& p) {
  return {p.B_h, p.se_hs, p.se_sg, p.prop_hs, p.prop_sg, p.c_tau, p.c_Bh};
}

std::vector<oracle::FeederItem> items_of(std::span<const FeederTask> tasks) {
  std::vector<oracle::FeederItem> v;
  for (const auto& t : tasks) v.push_back({t.d, t.tau_max, t.tau_access, t.tau_haps, t.c_mcc});
  return v;
}

std::vector<FeederTask> random_feeder_tasks(RandomStream& rng, int n, double c_tau) {
  std::vector<FeederTask> v;
  for (int i = 0; i < n; ++i) {
    FeederTask t;
    t.id = i;
    t.d = 1e3 + 1e5 * rng.uniform();
    t.tau_max = 0.005 + 0.1 * rng.uniform();
    t.tau_access = 0.004 * rng.uniform();
    t.tau_haps = 0.001 + 0.05 * rng.uniform();
    t.c_mcc = 0.5 * c_tau * t.tau_haps * rng.uniform();
    v.push_back(t);
  }
  return v;
}

AccessParams access_params(double c_Bu = 1e-13, int n_bisect = 40) {
  return {1.4e6, 1000.0, c_Bu, n_bisect, AccessPruneKey::LocalMargin};
}

double deadline_floor(const AccessTask& t, const AccessParams& p) {
  return t.d / (p.B_u * t.se) / (t.tau_max - t.tau_haps);
}

}  // namespace

TEST(Coefficients, Feeder) {
  const std::vector<double> none;
  EXPECT_EQ(feeder_coefficients(none, 1e8, 4.0, 4.0, 1.0, 1e-13).a, 0.0);
  const std::vector<double> two{82000.0, 82000.0};
  const auto c = feeder_coefficients(two, 1e8, 4.0, 4.0, 1.0, 1e-13);
  EXPECT_NEAR(c.a, 1.64e-3, 1e-18);
  EXPECT_NEAR(c.b, 1e-5, 1e-20);
  try {
    feeder_coefficients(two, 1e8, 0.0, 4.0, 1.0, 1e-13);
    FAIL() << "expected ZeroSpectralEfficiency";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ZeroSpectralEfficiency);
  }
}

TEST(Coefficients, Access) {
  const Task t{0, 82000.0, 500.0, 0.5, PayloadClass::Large};
  const auto c = access_coefficients(t, 1.4e6, 4.0, 1000.0, 1e-13);
  EXPECT_NEAR(c.a, 14.642857142857142, 1e-12);
  EXPECT_NEAR(c.b, 1.4e-7, 1e-22);
  EXPECT_EQ(access_coefficients(t, 1.4e6, 4.0, 0.0, 1e-13).a, 0.0);
  EXPECT_THROW(access_coefficients(t, 1.4e6, 0.0, 1000.0, 1e-13), Error);
}

TEST(ScalarOptimum, ClosedForms) {
  EXPECT_DOUBLE_EQ(unconstrained_opt_share(0.3, 0.3), 1.0);
  EXPECT_NEAR(unconstrained_opt_share(4e-4, 1e-2), 0.2, 1e-15);
  EXPECT_EQ(unconstrained_opt_share(0.0, 1.0), 0.0);
  EXPECT_TRUE(std::isinf(unconstrained_opt_share(1.0, 0.0)));
}

TEST(ScalarOptimum, MatchesMillionPointGrid) {
  RandomStream rng(5);
  for (int rep = 0; rep < 20; ++rep) {
    const double a = std::pow(10.0, -6.0 + 6.0 * rng.uniform());
    const double b = std::pow(10.0, -6.0 + 6.0 * rng.uniform());
    const double opt = unconstrained_opt_share(a, b);
    const oracle::GridSpec grid{0.0, 10.0 * opt, 1000000};
    const auto g = oracle::grid_min_scalar(a, b, grid);
    const double step = grid.hi / static_cast<double>(grid.n_points - 1);
    EXPECT_NEAR(opt, g.rho, step);
    EXPECT_LE(objective(a, b, opt), g.value * (1.0 + 1e-12));
  }
}

TEST(Quadratic, Interval) {
  const auto iv = quadratic_interval(0.04, 1.0, 0.5);
  ASSERT_TRUE(iv.has_value());
  EXPECT_NEAR(iv->lo, 0.1, 1e-15);
  EXPECT_NEAR(iv->hi, 0.4, 1e-15);

  const double a = 0.09, b = 4.0;
  const double tangent = 2.0 * std::sqrt(a * b);
  const auto t = quadratic_interval(a, b, tangent);
  ASSERT_TRUE(t.has_value());
  EXPECT_NEAR(t->lo, std::sqrt(a / b), 1e-12);
  EXPECT_NEAR(t->hi, std::sqrt(a / b), 1e-12);
  EXPECT_FALSE(quadratic_interval(a, b, tangent * (1.0 - 1e-9)).has_value());
}

TEST(Quadratic, TinyProductKeepsLowerRoot) {
  const auto iv = quadratic_interval(1e-12, 1e-13, 1.0);
  ASSERT_TRUE(iv.has_value());
  EXPECT_NEAR(iv->lo, 1e-12, 1e-24);
  EXPECT_NEAR(objective(1e-12, 1e-13, iv->lo), 1.0, 1e-12);
}

TEST(Feeder, EmptySet) {
  const auto r = allocate_feeder({}, feeder_params());
  EXPECT_EQ(r.rho_B, 0.0);
  EXPECT_TRUE(r.kept.empty());
  EXPECT_TRUE(r.pruned.empty());
}

TEST(Feeder, InteriorOptimum) {
  auto p = feeder_params(4.0);
  p.c_tau = 1.0;
  p.c_Bh = 1e-11;  // b = 1e-3
  p.prop_hs = p.prop_sg = 0.0;
  const std::vector<FeederTask> one{{0, 2e4, 10.0, 0.0, 1.0, 0.0}};
  const auto r = allocate_feeder(one, p);
  ASSERT_EQ(r.kept, std::vector<int>{0});
  EXPECT_NEAR(r.rho_B, std::sqrt(r.coeffs.a / r.coeffs.b), 1e-15);
  EXPECT_GT(r.rho_B, r.rho_min);
  EXPECT_LT(r.rho_B, std::min(1.0, r.rho_max));
}

TEST(Feeder, NegativeHeadroomIsAlwaysPruned) {
  const auto p = feeder_params();
  std::vector<FeederTask> tasks{{0, 2e4, 0.2, 0.001, 0.05, 1.0},
                                {1, 2e4, 0.005, 0.002, 0.05, 1.0},
                                {2, 2e4, 0.2, 0.001, 0.05, 1.0}};
  const auto r = allocate_feeder(tasks, p);
  ASSERT_EQ(r.pruned.size(), 1u);
  EXPECT_EQ(r.pruned[0], (PruneEvent{1, PruneStage::FeederDeadline}));
  EXPECT_EQ(r.kept, (std::vector<int>{0, 2}));
}

TEST(Feeder, HandTracedPruningOrder) {
  // Task 2 is quoted far more than forwarding saves and drives the joint
  // budget negative, so it leaves first; task 0 then has no headroom left
  // after the round-trip propagation and cannot be served at any share.
  const auto p = feeder_params();
  std::vector<FeederTask> tasks{{0, 5e4, 0.0066, 0.0, 0.05, 1.0},
                                {1, 5e4, 0.3, 0.0, 0.05, 1.0},
                                {2, 5e4, 0.3, 0.0, 0.0001, 200.0}};
  const auto r = allocate_feeder(tasks, p);
  ASSERT_EQ(r.pruned.size(), 2u);
  EXPECT_EQ(r.pruned[0], (PruneEvent{2, PruneStage::FeederBudget}));
  EXPECT_EQ(r.pruned[1], (PruneEvent{0, PruneStage::FeederDeadline}));
  EXPECT_EQ(r.kept, std::vector<int>{1});
  EXPECT_GT(r.rho_B, 0.0);
  EXPECT_LE(r.rho_B, 1.0);
}

TEST(Feeder, MatchesSubsetOracleOnSurvivingSet) {
  RandomStream rng(2718);
  int compared = 0;
  for (int rep = 0; rep < 60; ++rep) {
    const auto p = feeder_params(0.3 + 3.0 * rng.uniform());
    const auto tasks = random_feeder_tasks(rng, 5, p.c_tau);
    const auto r = allocate_feeder(tasks, p);
    const auto env = env_of(p);
    const auto all = items_of(tasks);
    const auto best = oracle::enumerate_offload_subsets(all, env, 2000);
    if (r.kept.empty()) {
      EXPECT_EQ(r.rho_B, 0.0);
      continue;
    }
    const auto ref = oracle::best_share_for_set(all, r.kept, env);
    ASSERT_TRUE(ref.feasible) << "rep " << rep;
    std::vector<oracle::FeederItem> kept;
    for (int id : r.kept) kept.push_back(all[static_cast<std::size_t>(id)]);
    EXPECT_TRUE(oracle::feeder_point_feasible(kept, env, r.rho_B, 1e-9)) << "rep " << rep;
    const double ours = oracle::feeder_haps_cost(kept, env, r.rho_B);
    EXPECT_LE(std::abs(ours - ref.cost), 1e-6 * std::max(1.0, std::abs(ref.cost))) << "rep " << rep;
    EXPECT_GE(ours, best.cost - 1e-6 * std::max(1.0, std::abs(best.cost)));
    ++compared;
  }
  EXPECT_GE(compared, 20);
}

TEST(Access, EmptySet) {
  const auto r = allocate_access({}, access_params());
  EXPECT_TRUE(r.rho.empty());
  EXPECT_TRUE(r.kept.empty());
}

TEST(Access, SingleTaskInteriorOptimum) {
  AccessParams p{1.0, 1.0, 1.0, 40, AccessPruneKey::LocalMargin};
  const std::vector<AccessTask> one{{0, 0.25, 1e9, 1e6, 0.0, 0.0, 1.0}};
  const auto r = allocate_access(one, p);
  ASSERT_EQ(r.rho.size(), 1u);
  EXPECT_NEAR(r.rho.at(0), 0.5, 1e-12);
}

TEST(Access, TwoIdenticalTasksSplitEvenly) {
  AccessParams p{1.0, 1.0, 1.0, 40, AccessPruneKey::LocalMargin};
  const std::vector<AccessTask> two{{0, 0.64, 1e9, 1e6, 0.0, 0.0, 1.0},
                                    {1, 0.64, 1e9, 1e6, 0.0, 0.0, 1.0}};
  const auto r = allocate_access(two, p);
  ASSERT_EQ(r.rho.size(), 2u);
  EXPECT_NEAR(r.rho.at(0), 0.5, 1e-6);
  EXPECT_NEAR(r.rho.at(1), 0.5, 1e-6);
  EXPECT_NEAR(r.eta, 0.64 / 0.5 + 0.5, 1e-6);
  const auto g = oracle::grid_minmax_simplex({0.64, 0.64}, {1.0, 1.0}, {{0.0, 1.0}, {0.0, 1.0}});
  EXPECT_NEAR(g.value, r.eta, 1e-6);
}

TEST(Access, DeadlineBelowComputeDelayIsPruned) {
  const auto p = access_params();
  const std::vector<AccessTask> tasks{{0, 2e4, 0.05, 0.5, 0.001, 1.0, 3.0},
                                      {1, 2e4, 0.001, 0.5, 0.002, 1.0, 3.0}};
  const auto r = allocate_access(tasks, p);
  ASSERT_EQ(r.pruned.size(), 1u);
  EXPECT_EQ(r.pruned[0], (PruneEvent{1, PruneStage::AccessDeadline}));
  EXPECT_EQ(r.kept, std::vector<int>{0});
}

TEST(Access, RejectsZeroBisectionSteps) {
  EXPECT_THROW(allocate_access({}, access_params(1e-13, 0)), Error);
}

TEST(Access, MinMaxMatchesGridOracle) {
  RandomStream rng(161);
  for (int n : {4, 6}) {
    for (int rep = 0; rep < (n == 4 ? 8 : 3); ++rep) {
      const auto p = access_params(rng.uniform() < 0.5 ? 1e-13 : 1e-5);
      std::vector<AccessTask> tasks;
      for (int i = 0; i < n; ++i)
        tasks.push_back({i, 1e3 + 8e4 * rng.uniform(), 0.2 + 0.3 * rng.uniform(),
                         0.3 + rng.uniform(), 0.01 * rng.uniform(), 10.0 * rng.uniform(),
                         1.0 + 6.0 * rng.uniform()});
      const auto r = allocate_access(tasks, p);
      if (r.kept.empty()) continue;
      std::vector<double> a, b;
      std::vector<oracle::BoxBound> box;
      double ours = 0.0, total = 0.0;
      for (int id : r.kept) {
        const auto& t = tasks[static_cast<std::size_t>(id)];
        const auto c = access_coefficients({id, t.d, 0, t.tau_max, PayloadClass::Low}, p.B_u, t.se,
                                           p.c_tau, p.c_Bu);
        a.push_back(c.a);
        b.push_back(c.b);
        box.push_back({deadline_floor(t, p), 1.0});
        const double rho = r.rho.at(id);
        ours = std::max(ours, objective(c.a, c.b, rho));
        total += rho;
      }
      EXPECT_LE(total, 1.0 + 1e-9);
      const auto g = oracle::grid_minmax_simplex(a, b, box, n == 4 ? 16 : 8, 30);
      ASSERT_TRUE(g.feasible);
      const double eps = std::ldexp(r.eta_max - r.eta_min, -p.n_bisect);
      EXPECT_LE(ours, g.value + eps + 1e-9 * std::max(1.0, g.value)) << "n " << n << " rep " << rep;
    }
  }
}

TEST(PruneStageNames, Stable) {
  EXPECT_EQ(to_string(PruneStage::FeederBudget), "feeder-budget");
  EXPECT_EQ(to_string(PruneStage::FeederDeadline), "feeder-deadline");
  EXPECT_EQ(to_string(PruneStage::AccessDeadline), "access-deadline");
  EXPECT_EQ(to_string(PruneStage::AccessFairness), "access-fairness");
}
