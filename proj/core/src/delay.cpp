#include "ntnoff/delay.hpp"

#include "ntnoff/error.hpp"

namespace ntnoff {

double propagation_delay(const Position3D& a, const Position3D& b) {
  return distance(a, b) / kSpeedOfLight;
}

double access_tx_delay(double bits, double rate) {
  if (bits <= 0.0) return 0.0;
  if (!(rate > 0.0)) throw Error(Errc::ZeroRate, "rate", "access link has no capacity");
  return bits / rate;
}

double feeder_hop_delay(double offloaded_bits_sum, double rate, double prop) {
  double tx = 0.0;
  if (offloaded_bits_sum > 0.0) {
    if (!(rate > 0.0)) throw Error(Errc::ZeroRate, "rate", "feeder link has no capacity");
    tx = offloaded_bits_sum / rate;
  }
  return tx + 2.0 * prop;
}

double feeder_delay(double offloaded_bits_sum, double rate_hs, double rate_sg, double prop_hs,
                    double prop_sg) {
  return feeder_hop_delay(offloaded_bits_sum, rate_hs, prop_hs) +
         feeder_hop_delay(offloaded_bits_sum, rate_sg, prop_sg);
}

double compute_delay(double bits, double mu, double cpu_hz) {
  if (!(cpu_hz > 0.0)) throw Error(Errc::NonPositiveCompute, "cpu_hz", "must be > 0");
  return bits * mu / cpu_hz;
}

}  // namespace ntnoff
