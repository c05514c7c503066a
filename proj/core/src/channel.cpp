#include "ntnoff/channel.hpp"

#include <cmath>
#include <numbers>

#include "ntnoff/delay.hpp"
#include "ntnoff/error.hpp"

namespace ntnoff {

double elevation_deg(const Position3D& ground, const Position3D& air) {
  const double horizontal = std::hypot(air.x - ground.x, air.y - ground.y);
  return std::atan2(air.z - ground.z, horizontal) * 180.0 / std::numbers::pi;
}

double los_probability(double elevation_deg, const AtgEnvironment& env) {
  return 1.0 / (1.0 + env.a * std::exp(-env.b * (elevation_deg - env.a)));
}

double free_space_loss(double distance_m, double carrier_hz) {
  const double x = 4.0 * std::numbers::pi * distance_m * carrier_hz / kSpeedOfLight;
  return x * x;
}

AtgDraw atg_pathloss_draw(const Position3D& gd_pos, const Position3D& haps_pos, double carrier_hz,
                          const AtgEnvironment& env, RandomStream& rng) {
  const double d = distance(gd_pos, haps_pos);
  if (!(d > 0.0)) throw Error(Errc::CoincidentNodes, "gd_pos", "GD and HAPS coincide");

  const double p_los = los_probability(elevation_deg(gd_pos, haps_pos), env);
  const bool los = rng.uniform() < p_los;
  const double excess_db = los ? env.eta_los_db : env.eta_nlos_db;
  const double loss = free_space_loss(d, carrier_hz) * std::pow(10.0, excess_db / 10.0);
  return {1.0 / loss, los};
}

double rician_mrc_gain(int n_elements, double K, RandomStream& rng) {
  if (n_elements < 1) throw Error(Errc::InvalidAntennaCount, "n_elements", "must be >= 1");
  if (!(K >= 0.0)) throw Error(Errc::InvalidArgument, "K", "must be >= 0");

  const bool pure_los = K >= kPureLosK;
  const double los_amp = pure_los ? 1.0 : std::sqrt(K / (K + 1.0));
  // CN(0,1) has per-component variance 1/2.
  const double scatter_sd = pure_los ? 0.0 : std::sqrt(1.0 / (K + 1.0)) * std::sqrt(0.5);

  double gain = 0.0;
  for (int m = 0; m < n_elements; ++m) {
    const double re = los_amp + scatter_sd * rng.normal();
    const double im = scatter_sd * rng.normal();
    gain += re * re + im * im;
  }
  return gain;
}

double los_mimo_gain(int M_j, int M_k, double wavelength, double G_atm, const Position3D& pos_j,
                     const Position3D& pos_k) {
  const double d = distance(pos_j, pos_k);
  if (!(d > 0.0)) throw Error(Errc::CoincidentNodes, "pos_k", "link endpoints coincide");
  const double amp = wavelength * G_atm / (4.0 * std::numbers::pi * d);
  return static_cast<double>(M_j) * static_cast<double>(M_k) * amp * amp;
}

double psd_snr(double gain, double power_w, double norm_bandwidth_hz, double N0) {
  return gain * (power_w / norm_bandwidth_hz) / N0;
}

double spectral_efficiency(double snr) { return std::log2(1.0 + snr); }

double link_rate(double rho, double B_total, double snr) {
  if (rho <= 0.0) return 0.0;
  return rho * B_total * spectral_efficiency(snr);
}

ChannelSnapshot draw_channels(const Scenario& scenario, RandomStream& rng) {
  const auto& cfg = scenario.config();
  const auto& radio = scenario.radio();

  ChannelSnapshot snap;
  snap.access.reserve(scenario.gd_count());
  for (const auto& gd : scenario.gds()) {
    const AtgDraw pl = atg_pathloss_draw(gd.pos, cfg.haps_pos, radio.f_c_access, radio.atg_env, rng);
    const double fading = rician_mrc_gain(radio.M_h_d, radio.rician_K, rng);
    const double g = pl.gain * fading;
    snap.access.push_back({gd.id, g, psd_snr(g, radio.p_i, radio.B_u_norm, radio.N0), pl.los});
  }

  const double lambda = scenario.wavelength_feeder();
  const double g_hs =
      los_mimo_gain(radio.M_h_u, radio.M_s, lambda, radio.G_atm, cfg.haps_pos, cfg.leo_pos);
  const double g_sg =
      los_mimo_gain(radio.M_s, radio.M_g, lambda, radio.G_atm, cfg.leo_pos, cfg.gw_pos);
  const double snr_hs = psd_snr(g_hs, radio.p_h, radio.B_h_norm, radio.N0);
  const double snr_sg = psd_snr(g_sg, radio.p_s, radio.B_h_norm, radio.N0);
  snap.haps_leo = {FeederLink::HapsLeo, g_hs, snr_hs, spectral_efficiency(snr_hs)};
  snap.leo_gw = {FeederLink::LeoGw, g_sg, snr_sg, spectral_efficiency(snr_sg)};
  snap.prop_hs = propagation_delay(cfg.haps_pos, cfg.leo_pos);
  snap.prop_sg = propagation_delay(cfg.leo_pos, cfg.gw_pos);
  return snap;
}

}  // namespace ntnoff
