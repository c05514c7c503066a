#pragma once

#include <vector>

#include "ntnoff/random.hpp"
#include "ntnoff/scenario.hpp"

namespace ntnoff {

// --- Air-to-ground access link -------------------------------------------

// Elevation of `air` seen from `ground`, in degrees.
double elevation_deg(const Position3D& ground, const Position3D& air);

// P_LoS(theta) = 1 / (1 + a * exp(-b * (theta - a))), theta in degrees.
double los_probability(double elevation_deg, const AtgEnvironment& env);

// (4 pi d f / c)^2, linear.
double free_space_loss(double distance_m, double carrier_hz);

struct AtgDraw {
  double gain = 0.0;  // inverse of free-space loss times excess loss
  bool los = true;
};

// Draws the LoS state (one uniform from `rng`) and returns the linear gain.
AtgDraw atg_pathloss_draw(const Position3D& gd_pos, const Position3D& haps_pos, double carrier_hz,
                          const AtgEnvironment& env, RandomStream& rng);

inline double atg_pathloss(const Position3D& gd_pos, const Position3D& haps_pos,
                           double carrier_hz, const AtgEnvironment& env, RandomStream& rng) {
  return atg_pathloss_draw(gd_pos, haps_pos, carrier_hz, env, rng).gain;
}

// ||h||^2 for an n-element Rician channel with unit average power per element
// and zero LoS phase. K >= 1e12 is treated as pure LoS (no scatter); the scatter
// variates are still consumed so the stream position does not depend on K.
double rician_mrc_gain(int n_elements, double K, RandomStream& rng);

inline constexpr double kPureLosK = 1e12;

// --- LoS-MIMO feeder links ----------------------------------------------

// g = M_j * M_k * (lambda * G / (4 pi |r_j - r_k|))^2
double los_mimo_gain(int M_j, int M_k, double wavelength, double G_atm, const Position3D& pos_j,
                     const Position3D& pos_k);

// --- Rates ---------------------------------------------------------------

// g * (p / B_norm) / N0: SNR per Hz under a constant power spectral density.
double psd_snr(double gain, double power_w, double norm_bandwidth_hz, double N0);

// log2(1 + psd_snr), bits/s/Hz.
double spectral_efficiency(double psd_snr);

// R = rho * B_total * log2(1 + psd_snr); linear in rho.
double link_rate(double rho, double B_total, double psd_snr);

// --- Snapshot channel state ------------------------------------------------

struct AccessLinkState {
  int gd_id = 0;
  double gain = 0.0;
  double psd_snr = 0.0;
  bool los = true;

  double spectral_eff() const { return spectral_efficiency(psd_snr); }
  bool operator==(const AccessLinkState&) const = default;
};

enum class FeederLink { HapsLeo, LeoGw };

struct FeederLinkState {
  FeederLink link = FeederLink::HapsLeo;
  double gain = 0.0;
  double psd_snr = 0.0;
  double spectral_eff = 0.0;

  bool operator==(const FeederLinkState&) const = default;
};

struct ChannelSnapshot {
  std::vector<AccessLinkState> access;  // one per GD, scenario order
  FeederLinkState haps_leo;
  FeederLinkState leo_gw;
  double prop_hs = 0.0;  // one-way propagation delays (s)
  double prop_sg = 0.0;

  bool operator==(const ChannelSnapshot&) const = default;
};

// Per GD: one LoS draw followed by M_h_d complex scatter draws. Feeder links
// are deterministic. The result is frozen for the whole snapshot.
ChannelSnapshot draw_channels(const Scenario& scenario, RandomStream& rng);

}  // namespace ntnoff
