#include "ntnoff/taskgen.hpp"

#include <algorithm>
#include <cmath>

#include "ntnoff/error.hpp"

namespace ntnoff {

std::vector<PayloadClassSpec> default_class_specs() {
  constexpr double third = 1.0 / 3.0;
  return {
      {PayloadClass::Large, 82'000.0, 0.1, 500.0, 0.5, third},
      {PayloadClass::Medium, 20'000.0, 0.1, 50.0, 0.05, third},
      {PayloadClass::Low, 200.0, 0.1, 50.0, 0.001, third},
  };
}

std::vector<Task> generate_tasks(std::span<const PayloadClassSpec> specs, int n_gds,
                                 RandomStream& rng) {
  if (n_gds < 1) throw Error(Errc::InvalidArgument, "n_gds", "at least one GD is required");
  if (specs.empty()) throw Error(Errc::InvalidTaskClass, "specs", "no payload classes");

  double total_mix = 0.0;
  for (const auto& s : specs) total_mix += s.mix_fraction;
  if (!(total_mix > 0.0)) throw Error(Errc::InvalidTaskClass, "mix_fraction", "all zero");

  std::vector<Task> tasks;
  tasks.reserve(static_cast<std::size_t>(n_gds));
  for (int i = 0; i < n_gds; ++i) {
    // Class draw: walk the cumulative mix; the last class with nonzero weight
    // absorbs rounding at the top end.
    const double u = rng.uniform() * total_mix;
    const PayloadClassSpec* chosen = nullptr;
    double acc = 0.0;
    for (const auto& s : specs) {
      if (s.mix_fraction <= 0.0) continue;
      chosen = &s;
      acc += s.mix_fraction;
      if (u < acc) break;
    }

    const double z = rng.normal();
    const double floor_bits = std::max(1.0, std::ceil(0.1 * chosen->mean_bits));
    const double raw = chosen->mean_bits * (1.0 + chosen->rel_std * z);
    const double bits = std::max(floor_bits, std::round(raw));

    tasks.push_back(Task{i, bits, chosen->mu, chosen->tau_max, chosen->payload_class});
  }
  return tasks;
}

}  // namespace ntnoff
