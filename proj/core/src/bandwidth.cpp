#include "ntnoff/bandwidth.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "ntnoff/error.hpp"

namespace ntnoff {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_positive_se(double se, const char* field) {
  if (!(se > 0.0) || !std::isfinite(se))
    throw Error(Errc::ZeroSpectralEfficiency, field, "spectral efficiency must be > 0");
}

// Index of the smallest key; ties go to the lowest id.
template <typename T, typename Key>
std::size_t argmin_by(const std::vector<T>& items, Key key) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < items.size(); ++i) {
    const double ki = key(items[i]);
    const double kb = key(items[best]);
    if (ki < kb || (ki == kb && items[i].id < items[best].id)) best = i;
  }
  return best;
}

template <typename T>
std::vector<int> ids_of(const std::vector<T>& items) {
  std::vector<int> ids;
  ids.reserve(items.size());
  for (const auto& t : items) ids.push_back(t.id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

double clip(double x, double lo, double hi) { return std::max(lo, std::min(x, hi)); }

}  // namespace

std::string_view to_string(PruneStage s) {
  switch (s) {
    case PruneStage::FeederBudget: return "feeder-budget";
    case PruneStage::FeederDeadline: return "feeder-deadline";
    case PruneStage::AccessDeadline: return "access-deadline";
    case PruneStage::AccessFairness: return "access-fairness";
  }
  return "unknown";
}

ShareCoefficients feeder_coefficients(std::span<const double> offloaded_bits, double B_h,
                                      double se_hs, double se_sg, double c_tau, double c_Bh) {
  require_positive_se(se_hs, "se_hs");
  require_positive_se(se_sg, "se_sg");
  const double sum_d = std::accumulate(offloaded_bits.begin(), offloaded_bits.end(), 0.0);
  const double n = static_cast<double>(offloaded_bits.size());
  return {c_tau * n * sum_d / B_h * (1.0 / se_hs + 1.0 / se_sg), c_Bh * B_h};
}

ShareCoefficients access_coefficients(const Task& task, double B_u, double se, double c_tau,
                                      double c_Bu) {
  require_positive_se(se, "se");
  return {c_tau * task.d / (B_u * se), c_Bu * B_u};
}

double unconstrained_opt_share(double a, double b) {
  if (a <= 0.0) return 0.0;
  if (b <= 0.0) return kInf;
  return std::sqrt(a / b);
}

std::optional<ShareInterval> quadratic_interval(double a, double b, double budget) {
  const double tangent = 2.0 * std::sqrt(a * b);
  if (budget < tangent) return std::nullopt;
  const double root = std::sqrt(std::max(0.0, budget * budget - 4.0 * a * b));
  const double s = budget + root;
  ShareInterval iv;
  iv.lo = (a > 0.0) ? 2.0 * a / s : 0.0;
  iv.hi = (b > 0.0) ? s / (2.0 * b) : kInf;
  return iv;
}

// ---------------------------------------------------------------------------

namespace {

struct FeederEval {
  double tx_unit = 0.0;  // sum_d / B_h * (1/se_hs + 1/se_sg)
  ShareCoefficients coeffs;
  double budget = 0.0;
  double rho_min = 0.0;
  double rho_max = 0.0;
  bool budget_ok = false;
};

FeederEval evaluate_feeder(const std::vector<FeederTask>& set, const FeederParams& p) {
  FeederEval st;
  double sum_d = 0.0;
  double min_headroom = kInf;
  const double prop2 = 2.0 * (p.prop_hs + p.prop_sg);
  for (const auto& t : set) {
    sum_d += t.d;
    st.budget += p.c_tau * t.tau_haps - t.c_mcc;
    min_headroom = std::min(min_headroom, t.tau_max - t.tau_access - prop2);
  }
  st.tx_unit = sum_d / p.B_h * (1.0 / p.se_hs + 1.0 / p.se_sg);
  st.coeffs = {p.c_tau * static_cast<double>(set.size()) * st.tx_unit, p.c_Bh * p.B_h};

  const auto iv = quadratic_interval(st.coeffs.a, st.coeffs.b, st.budget);
  st.budget_ok = iv.has_value();
  const double deadline_min = (min_headroom > 0.0) ? st.tx_unit / min_headroom : kInf;
  if (iv) {
    st.rho_min = std::max(deadline_min, iv->lo);
    st.rho_max = iv->hi;
  } else {
    st.rho_min = deadline_min;
    st.rho_max = 0.0;
  }
  return st;
}

bool feeder_deadline_ok(const FeederEval& st) {
  return !(st.rho_min > 1.0 || st.rho_min > st.rho_max);
}

}  // namespace

FeederAllocation allocate_feeder(std::span<const FeederTask> candidates, const FeederParams& p) {
  require_positive_se(p.se_hs, "se_hs");
  require_positive_se(p.se_sg, "se_sg");

  FeederAllocation out;
  std::vector<FeederTask> set(candidates.begin(), candidates.end());

  auto remove_at = [&](std::size_t idx, PruneStage stage) {
    out.pruned.push_back({set[idx].id, stage});
    set.erase(set.begin() + static_cast<std::ptrdiff_t>(idx));
  };

  // Pruning for deadlines changes the budget, so alternate until both hold.
  while (!set.empty()) {
    FeederEval st = evaluate_feeder(set, p);
    if (!st.budget_ok) {
      remove_at(argmin_by(set, [&](const FeederTask& t) { return p.c_tau * t.tau_haps - t.c_mcc; }),
                PruneStage::FeederBudget);
      continue;
    }
    if (!feeder_deadline_ok(st)) {
      remove_at(argmin_by(set, [](const FeederTask& t) { return t.tau_max - t.tau_access; }),
                PruneStage::FeederDeadline);
      continue;
    }
    out.coeffs = st.coeffs;
    out.budget = st.budget;
    out.rho_min = st.rho_min;
    out.rho_max = st.rho_max;
    out.rho_B = std::min(1.0, clip(unconstrained_opt_share(st.coeffs.a, st.coeffs.b),
                                   st.rho_min, std::min(st.rho_max, 1.0)));
    break;
  }

  out.kept = ids_of(set);
  if (set.empty()) out.rho_B = 0.0;
  return out;
}

// ---------------------------------------------------------------------------

namespace {

struct AccessTerm {
  int id = 0;
  ShareCoefficients coeffs;
  double deadline_min = 0.0;  // share needed to meet the deadline
  double local_margin = 0.0;  // c_tau tau_local - c_mec
  double haps_margin = 0.0;   // c_tau tau_haps - c_mec
  double deadline_headroom = 0.0;
};

// Lower and upper share at cost level eta, before the channel cap.
ShareInterval share_window(const AccessTerm& t, double eta) {
  const auto iv = quadratic_interval(t.coeffs.a, t.coeffs.b, eta);
  if (!iv) return {kInf, 0.0};
  return {std::max(iv->lo, t.deadline_min), iv->hi};
}

bool level_feasible(const std::vector<AccessTerm>& set, double eta) {
  double total = 0.0;
  for (const auto& t : set) {
    const ShareInterval w = share_window(t, eta);
    if (w.lo > w.hi) return false;
    total += w.lo;
  }
  return total <= 1.0;
}

double eta_lower(const std::vector<AccessTerm>& set) {
  double v = 0.0;
  for (const auto& t : set) v = std::max(v, 2.0 * std::sqrt(t.coeffs.a * t.coeffs.b));
  return v;
}

double eta_upper(const std::vector<AccessTerm>& set) {
  double v = kInf;
  for (const auto& t : set) v = std::min(v, t.local_margin);
  return v;
}

}  // namespace

AccessAllocation allocate_access(std::span<const AccessTask> candidates, const AccessParams& p) {
  if (p.n_bisect < 1) throw Error(Errc::InvalidSolverParam, "n_bisect", "must be >= 1");

  std::vector<AccessTerm> set;
  set.reserve(candidates.size());
  for (const auto& c : candidates) {
    require_positive_se(c.se, "se");
    AccessTerm t;
    t.id = c.id;
    t.coeffs = {p.c_tau * c.d / (p.B_u * c.se), p.c_Bu * p.B_u};
    t.deadline_headroom = c.tau_max - c.tau_haps;
    const double unit_tx = c.d / (p.B_u * c.se);
    t.deadline_min = (t.deadline_headroom > 0.0) ? unit_tx / t.deadline_headroom : kInf;
    t.local_margin = p.c_tau * c.tau_local - c.c_mec;
    t.haps_margin = p.c_tau * c.tau_haps - c.c_mec;
    set.push_back(t);
  }

  AccessAllocation out;
  auto remove_at = [&](std::size_t idx, PruneStage stage) {
    out.pruned.push_back({set[idx].id, stage});
    set.erase(set.begin() + static_cast<std::ptrdiff_t>(idx));
  };

  // Deadlines alone must fit into the channel.
  auto deadline_total = [&] {
    double s = 0.0;
    for (const auto& t : set) s += t.deadline_min;
    return s;
  };
  while (!set.empty() && deadline_total() > 1.0)
    remove_at(argmin_by(set, [](const AccessTerm& t) { return t.deadline_headroom; }),
              PruneStage::AccessDeadline);

  // Some common cost level no higher than what local execution costs must fit.
  auto fairness_key = [&](const AccessTerm& t) {
    return p.prune_key == AccessPruneKey::LocalMargin ? t.local_margin : t.haps_margin;
  };
  while (!set.empty()) {
    const double lo = eta_lower(set);
    const double hi = eta_upper(set);
    if (lo <= hi && level_feasible(set, hi)) break;
    remove_at(argmin_by(set, fairness_key), PruneStage::AccessFairness);
  }

  out.kept = ids_of(set);
  if (set.empty()) return out;

  out.eta_min = eta_lower(set);
  out.eta_max = eta_upper(set);
  double eta = out.eta_min;
  if (!level_feasible(set, eta)) {
    double lo = out.eta_min;
    double hi = out.eta_max;
    for (int k = 0; k < p.n_bisect; ++k) {
      const double mid = 0.5 * (lo + hi);
      if (level_feasible(set, mid))
        hi = mid;
      else
        lo = mid;
    }
    eta = hi;
  }
  out.eta = eta;

  std::vector<double> floor(set.size());
  std::vector<double> target(set.size());
  double floor_sum = 0.0;
  double target_sum = 0.0;
  for (std::size_t i = 0; i < set.size(); ++i) {
    const ShareInterval w = share_window(set[i], eta);
    floor[i] = w.lo;
    target[i] = clip(unconstrained_opt_share(set[i].coeffs.a, set[i].coeffs.b), w.lo,
                     std::min(w.hi, 1.0));
    floor_sum += floor[i];
    target_sum += target[i];
  }
  double scale = 1.0;
  if (target_sum > 1.0) scale = (1.0 - floor_sum) / (target_sum - floor_sum);
  for (std::size_t i = 0; i < set.size(); ++i)
    out.rho[set[i].id] = floor[i] + scale * (target[i] - floor[i]);
  return out;
}

}  // namespace ntnoff
