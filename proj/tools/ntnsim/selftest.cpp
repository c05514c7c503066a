#include "ntnsim/selftest.hpp"

#include <cmath>

#include "ntnoff/orchestrator.hpp"

namespace ntnsim {

std::vector<std::string> run_selftest(const ntnoff::Scenario& scenario, int n_snapshots) {
  std::vector<std::string> failures;
  auto fail = [&](std::uint64_t seed, ntnoff::Method m, const std::string& what) {
    failures.push_back("seed " + std::to_string(seed) + ", " + std::string(to_string(m)) + ": " +
                       what);
  };

  for (int k = 0; k < n_snapshots; ++k) {
    const std::uint64_t seed = scenario.config().seed + static_cast<std::uint64_t>(k);
    const auto draw = ntnoff::draw_snapshot(scenario, seed);
    for (auto m : ntnoff::kAllMethods) {
      const auto r = ntnoff::run_snapshot(scenario, draw, m);
      double rho_sum = 0.0;
      for (const auto& t : r.tasks) {
        rho_sum += t.rho;
        if (t.beta_hs > t.beta_uh) fail(seed, m, "cloud flag without access flag");
        if (t.quote.c_mec < 0.0 || t.quote.c_mcc < 0.0) fail(seed, m, "negative price");
        if (!t.deadline_miss && t.delay.total > t.task.tau_max * (1.0 + 1e-9))
          fail(seed, m, "task " + std::to_string(t.task.id) + " misses its deadline");
      }
      if (rho_sum > 1.0 + 1e-9) fail(seed, m, "access shares exceed the channel");
      if (r.rho_B < 0.0 || r.rho_B > 1.0) fail(seed, m, "feeder share outside [0, 1]");
      const double total = r.costs.real_gd_total() + r.costs.real_mec + r.costs.real_mcc;
      const double scale = std::abs(r.costs.real_gd_total()) + std::abs(r.costs.real_mec) +
                           std::abs(r.costs.real_mcc) + 1e-300;
      if (std::abs(total) > 1e-12 * scale) fail(seed, m, "real costs do not cancel");
    }
  }
  return failures;
}

}  // namespace ntnsim
