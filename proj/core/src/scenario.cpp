#include "ntnoff/scenario.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "ntnoff/error.hpp"
#include "ntnoff/taskgen.hpp"

namespace ntnoff {

double distance(const Position3D& a, const Position3D& b) {
  return std::hypot(a.x - b.x, a.y - b.y, a.z - b.z);
}

std::string_view to_string(PayloadClass c) {
  switch (c) {
    case PayloadClass::Large: return "large";
    case PayloadClass::Medium: return "medium";
    case PayloadClass::Low: return "low";
  }
  return "?";
}

std::optional<PayloadClass> parse_payload_class(std::string_view name) {
  for (auto c : kPayloadClasses)
    if (to_string(c) == name) return c;
  return std::nullopt;
}

std::string_view to_string(HapsSharePolicy p) {
  switch (p) {
    case HapsSharePolicy::StaticEqualAllGDs: return "static-equal";
    case HapsSharePolicy::EqualAmongComputed: return "equal-among-computed";
  }
  return "?";
}

std::optional<HapsSharePolicy> parse_haps_share_policy(std::string_view name) {
  if (name == "static-equal") return HapsSharePolicy::StaticEqualAllGDs;
  if (name == "equal-among-computed") return HapsSharePolicy::EqualAmongComputed;
  return std::nullopt;
}

std::string_view to_string(AccessPruneKey k) {
  switch (k) {
    case AccessPruneKey::LocalMargin: return "local-margin";
    case AccessPruneKey::HapsMargin: return "haps-margin";
  }
  return "?";
}

std::optional<AccessPruneKey> parse_access_prune_key(std::string_view name) {
  if (name == "local-margin") return AccessPruneKey::LocalMargin;
  if (name == "haps-margin") return AccessPruneKey::HapsMargin;
  return std::nullopt;
}

std::vector<GroundDevice> ring_layout(int count, double radius_m) {
  std::vector<GroundDevice> gds;
  gds.reserve(static_cast<std::size_t>(std::max(count, 0)));
  for (int k = 0; k < count; ++k) {
    const double angle = 2.0 * std::numbers::pi * k / count;
    gds.push_back({k, {radius_m * std::cos(angle), radius_m * std::sin(angle), 0.0}});
  }
  return gds;
}

ScenarioConfig default_scenario_config() {
  ScenarioConfig cfg;
  cfg.gds = ring_layout(14, 1000.0);
  cfg.task_classes = default_class_specs();
  return cfg;
}

namespace {

void require_finite(double v, const std::string& field) {
  if (!std::isfinite(v)) throw Error(Errc::NonFiniteValue, field, "must be finite");
}

void require_positive(double v, Errc code, const std::string& field) {
  require_finite(v, field);
  if (!(v > 0.0)) throw Error(code, field, "must be > 0");
}

void require_position(const Position3D& p, const std::string& field) {
  require_finite(p.x, field + ".x");
  require_finite(p.y, field + ".y");
  require_finite(p.z, field + ".z");
}

}  // namespace

Scenario validate_scenario(const ScenarioConfig& raw) {
  if (raw.gds.empty()) throw Error(Errc::EmptyGDSet, "gds", "at least one GD is required");

  require_position(raw.haps_pos, "nodes.haps");
  require_position(raw.leo_pos, "nodes.leo");
  require_position(raw.gw_pos, "nodes.gw");
  for (std::size_t k = 0; k < raw.gds.size(); ++k)
    require_position(raw.gds[k].pos, "gd." + std::to_string(k) + ".pos");

  // Pairwise distinct node positions (GDs, HAPS, LEO, GW).
  std::vector<std::pair<std::string, Position3D>> nodes;
  nodes.emplace_back("nodes.haps", raw.haps_pos);
  nodes.emplace_back("nodes.leo", raw.leo_pos);
  nodes.emplace_back("nodes.gw", raw.gw_pos);
  for (std::size_t k = 0; k < raw.gds.size(); ++k)
    nodes.emplace_back("gd." + std::to_string(k) + ".pos", raw.gds[k].pos);
  for (std::size_t i = 0; i < nodes.size(); ++i)
    for (std::size_t j = i + 1; j < nodes.size(); ++j)
      if (nodes[i].second == nodes[j].second)
        throw Error(Errc::CoincidentNodes, nodes[j].first, "coincides with " + nodes[i].first);

  const auto& r = raw.radio;
  require_positive(r.B_u, Errc::NonPositiveBandwidth, "radio.B_u");
  require_positive(r.B_h, Errc::NonPositiveBandwidth, "radio.B_h");
  require_positive(r.B_u_norm, Errc::NonPositiveBandwidth, "radio.B_u_norm");
  require_positive(r.B_h_norm, Errc::NonPositiveBandwidth, "radio.B_h_norm");
  require_positive(r.f_c_access, Errc::InvalidArgument, "radio.f_c_access");
  require_positive(r.f_c_feeder, Errc::InvalidArgument, "radio.f_c_feeder");
  require_positive(r.N0, Errc::NonPositivePower, "radio.N0");
  require_positive(r.p_i, Errc::NonPositivePower, "radio.p_i");
  require_positive(r.p_h, Errc::NonPositivePower, "radio.p_h");
  require_positive(r.p_s, Errc::NonPositivePower, "radio.p_s");
  if (r.M_h_d < 1) throw Error(Errc::InvalidAntennaCount, "radio.M_h_d", "must be >= 1");
  if (r.M_h_u < 1) throw Error(Errc::InvalidAntennaCount, "radio.M_h_u", "must be >= 1");
  if (r.M_s < 1) throw Error(Errc::InvalidAntennaCount, "radio.M_s", "must be >= 1");
  if (r.M_g < 1) throw Error(Errc::InvalidAntennaCount, "radio.M_g", "must be >= 1");
  require_finite(r.rician_K, "radio.rician_K");
  if (r.rician_K < 0.0) throw Error(Errc::InvalidArgument, "radio.rician_K", "must be >= 0");
  require_finite(r.atg_env.a, "radio.atg.a");
  require_finite(r.atg_env.b, "radio.atg.b");
  require_finite(r.atg_env.eta_los_db, "radio.atg.eta_los_db");
  require_finite(r.atg_env.eta_nlos_db, "radio.atg.eta_nlos_db");
  require_positive(r.G_atm, Errc::InvalidArgument, "radio.G_atm");

  const auto& c = raw.cost;
  require_finite(c.c_tau, "cost.c_tau");
  require_finite(c.c_Bu, "cost.c_Bu");
  require_finite(c.c_Bh, "cost.c_Bh");
  if (c.c_tau < 0.0) throw Error(Errc::NegativeCost, "cost.c_tau", "must be >= 0");
  if (c.c_Bu < 0.0) throw Error(Errc::NegativeCost, "cost.c_Bu", "must be >= 0");
  if (c.c_Bh < 0.0) throw Error(Errc::NegativeCost, "cost.c_Bh", "must be >= 0");

  require_positive(raw.compute.F_h, Errc::NonPositiveCompute, "compute.F_h");
  require_positive(raw.compute.f_local, Errc::NonPositiveCompute, "compute.f_local");

  require_finite(raw.price_margin_eps, "pricing.eps");
  if (!(raw.price_margin_eps > 0.0 && raw.price_margin_eps < 1.0))
    throw Error(Errc::InvalidMargin, "pricing.eps", "must lie in (0, 1)");

  if (raw.task_classes.empty())
    throw Error(Errc::InvalidTaskClass, "tasks", "no payload classes configured");
  double mix = 0.0;
  for (const auto& s : raw.task_classes) {
    const std::string prefix = "tasks." + std::string(to_string(s.payload_class));
    require_positive(s.mean_bits, Errc::InvalidTaskClass, prefix + ".mean_bits");
    require_positive(s.mu, Errc::InvalidTaskClass, prefix + ".mu");
    require_positive(s.tau_max, Errc::InvalidTaskClass, prefix + ".tau_max");
    require_finite(s.rel_std, prefix + ".rel_std");
    if (s.rel_std < 0.0) throw Error(Errc::InvalidTaskClass, prefix + ".rel_std", "must be >= 0");
    require_finite(s.mix_fraction, prefix + ".mix");
    if (s.mix_fraction < 0.0 || s.mix_fraction > 1.0)
      throw Error(Errc::InvalidTaskClass, prefix + ".mix", "must lie in [0, 1]");
    mix += s.mix_fraction;
  }
  if (std::abs(mix - 1.0) > 1e-9)
    throw Error(Errc::InvalidTaskClass, "tasks.*.mix", "fractions must sum to 1");

  if (raw.solver.n_bisect < 1)
    throw Error(Errc::InvalidSolverParam, "solver.n_bisect", "must be >= 1");
  if (raw.solver.pricing_passes < 1 || raw.solver.pricing_passes > 5)
    throw Error(Errc::InvalidSolverParam, "solver.pricing_passes", "must lie in [1, 5]");

  Scenario s;
  s.config_ = raw;
  s.lambda_access_ = kSpeedOfLight / r.f_c_access;
  s.lambda_feeder_ = kSpeedOfLight / r.f_c_feeder;
  return s;
}

Scenario with_delay_cost(const Scenario& base, double c_tau) {
  ScenarioConfig cfg = base.config();
  cfg.cost.c_tau = c_tau;
  return validate_scenario(cfg);
}

}  // namespace ntnoff
