#pragma once

#include "ntnoff/scenario.hpp"

namespace ntnoff {

struct DelayBreakdown {
  double tx_access = 0.0;  // GD -> HAPS transmission
  double tx_feeder = 0.0;  // HAPS -> LEO -> GW, both hops with round-trip propagation
  double compute = 0.0;    // local or HAPS computing; zero at the cloud
  double total = 0.0;

  bool operator==(const DelayBreakdown&) const = default;
};

// One-way: |a - b| / c.
double propagation_delay(const Position3D& a, const Position3D& b);

// d / R. Throws Errc::ZeroRate when R <= 0 and d > 0.
double access_tx_delay(double bits, double rate);
inline double access_tx_delay(const Task& task, double rate) { return access_tx_delay(task.d, rate); }

// Sum of both feeder hops. Every offloaded task waits for the whole batch
// (sum of offloaded bits), plus twice the one-way propagation of each hop.
double feeder_delay(double offloaded_bits_sum, double rate_hs, double rate_sg, double prop_hs,
                    double prop_sg);

// One hop of the above: bits / rate + 2 * prop.
double feeder_hop_delay(double offloaded_bits_sum, double rate, double prop);

// d * mu / f.
double compute_delay(double bits, double mu, double cpu_hz);
inline double compute_delay(const Task& task, double cpu_hz) {
  return compute_delay(task.d, task.mu, cpu_hz);
}

}  // namespace ntnoff
