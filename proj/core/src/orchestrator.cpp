#include "ntnoff/orchestrator.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "ntnoff/error.hpp"
#include "ntnoff/random.hpp"
#include "ntnoff/taskgen.hpp"

namespace ntnoff {

std::string_view to_string(Method m) {
  switch (m) {
    case Method::Proposed: return "proposed";
    case Method::FixedMaxCost: return "fixed-max";
    case Method::NoBWOpt: return "no-bw-opt";
  }
  return "unknown";
}

std::optional<Method> parse_method(std::string_view name) {
  for (Method m : kAllMethods)
    if (to_string(m) == name) return m;
  return std::nullopt;
}

std::string_view to_string(Placement p) {
  switch (p) {
    case Placement::Local: return "local";
    case Placement::MEC: return "mec";
    case Placement::MCC: return "mcc";
  }
  return "unknown";
}

std::string_view to_string(Tier t) {
  switch (t) {
    case Tier::GD: return "gd";
    case Tier::MEC: return "mec";
    case Tier::MCC: return "mcc";
  }
  return "unknown";
}

std::size_t SnapshotReport::offloaded_count() const {
  return static_cast<std::size_t>(std::count_if(
      tasks.begin(), tasks.end(), [](const TaskOutcome& t) { return t.placement != Placement::Local; }));
}

double SnapshotReport::real_cost(Tier t) const {
  switch (t) {
    case Tier::GD: return costs.real_gd_total();
    case Tier::MEC: return costs.real_mec;
    case Tier::MCC: return costs.real_mcc;
  }
  return 0.0;
}

SnapshotDraw draw_snapshot(const Scenario& scenario, std::uint64_t seed) {
  SnapshotDraw draw;
  RandomStream task_rng(seed, kTaskStream);
  draw.tasks = generate_tasks(scenario.config().task_classes,
                              static_cast<int>(scenario.gd_count()), task_rng);
  RandomStream channel_rng(seed, kChannelStream);
  draw.channels = draw_channels(scenario, channel_rng);
  return draw;
}

namespace {

constexpr std::string_view kReasonAccessDeadline =
    "access channel cannot meet every deadline; least headroom removed";
constexpr std::string_view kReasonAccessFairness =
    "no common cost level below local execution fits the access channel";
constexpr std::string_view kReasonFeederBudget = "forwarding costs the HAPS more than it saves";
constexpr std::string_view kReasonFeederDeadline =
    "no feeder share within budget meets every deadline";
constexpr std::string_view kReasonEqualAccess = "equal access share misses the deadline";
constexpr std::string_view kReasonFullFeeder = "full feeder channel misses the deadline";

PruneRecord record_of(const PruneEvent& e) {
  switch (e.stage) {
    case PruneStage::AccessDeadline: return {e.task_id, to_string(e.stage), kReasonAccessDeadline};
    case PruneStage::AccessFairness: return {e.task_id, to_string(e.stage), kReasonAccessFairness};
    case PruneStage::FeederBudget: return {e.task_id, to_string(e.stage), kReasonFeederBudget};
    case PruneStage::FeederDeadline: return {e.task_id, to_string(e.stage), kReasonFeederDeadline};
  }
  return {e.task_id, "unknown", ""};
}

struct PriceFix {
  std::optional<double> mec;
  std::optional<double> mcc;
};

// Per-snapshot constants shared by every stage.
struct Link {
  const Scenario& sc;
  const SnapshotDraw& draw;
  std::size_t n = 0;
  std::vector<double> se;  // access spectral efficiency per task
  std::vector<double> tau_local;
  double se_hs = 0.0;
  double se_sg = 0.0;

  Link(const Scenario& s, const SnapshotDraw& d) : sc(s), draw(d), n(d.tasks.size()) {
    if (d.channels.access.size() != n)
      throw Error(Errc::InvalidArgument, "tasks", "one task per GD required");
    for (std::size_t i = 0; i < n; ++i)
      if (d.tasks[i].id != static_cast<int>(i))
        throw Error(Errc::InvalidArgument, "tasks", "task ids must be 0..n-1 in GD order");
    se.resize(n);
    tau_local.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      se[i] = d.channels.access[i].spectral_eff();
      tau_local[i] = compute_delay(d.tasks[i], s.compute().f_local);
    }
    se_hs = d.channels.haps_leo.spectral_eff;
    se_sg = d.channels.leo_gw.spectral_eff;
  }

  double access_rate(std::size_t i, double rho) const {
    return rho * sc.radio().B_u * se[i];
  }
  double feeder_hs_rate(double rho_B) const { return rho_B * sc.radio().B_h * se_hs; }
  double feeder_sg_rate(double rho_B) const { return rho_B * sc.radio().B_h * se_sg; }
};

struct PricingStage {
  PricingOutcome outcome;
  std::vector<PricingTask> inputs;
  double haps_cpu = 0.0;
};

PricingStage price(const Link& L, const std::vector<double>& rho, double rho_B, const PriceFix& fix) {
  const auto& sc = L.sc;
  PricingParams pp;
  pp.c_tau = sc.cost().c_tau;
  pp.c_Bu = sc.cost().c_Bu;
  pp.B_u = sc.radio().B_u;
  pp.eps = sc.eps();
  pp.fixed_mec_price = fix.mec;
  pp.fixed_mcc_price = fix.mcc;

  FeederState feeder{L.feeder_hs_rate(rho_B), L.feeder_sg_rate(rho_B), L.draw.channels.prop_hs,
                     L.draw.channels.prop_sg};

  PricingStage st;
  st.inputs.resize(L.n);
  for (std::size_t i = 0; i < L.n; ++i) {
    auto& in = st.inputs[i];
    in.task = L.draw.tasks[i];
    in.tau_local = L.tau_local[i];
    in.rho = rho[i];
    in.tau_access = access_tx_delay(in.task, L.access_rate(i, rho[i]));
  }

  auto run_with = [&](double cpu) {
    st.haps_cpu = cpu;
    for (auto& in : st.inputs) in.tau_haps = compute_delay(in.task, cpu);
    st.outcome = solve_pricing_game(st.inputs, feeder, pp);
  };

  const double F_h = sc.compute().F_h;
  run_with(F_h / static_cast<double>(L.n));
  if (sc.compute().haps_share_policy == HapsSharePolicy::EqualAmongComputed) {
    // The HAPS splits its CPU among the tasks it keeps; iterate to a fixed
    // point of that count, then freeze it for the rest of the snapshot.
    std::size_t prev = L.n + 1;
    for (int iter = 0; iter < 20; ++iter) {
      std::size_t kept = 0;
      for (const auto& d : st.outcome.decisions) kept += (d.beta_uh == 1 && d.beta_hs == 0);
      if (kept == prev) break;
      prev = kept;
      run_with(F_h / static_cast<double>(std::max<std::size_t>(kept, 1)));
    }
  }
  return st;
}

struct Allocation {
  std::vector<int> beta_uh;
  std::vector<int> beta_hs;
  std::vector<double> rho;
  double rho_B = 0.0;
  double eta = 0.0;
  std::vector<PruneRecord> log;
};

// Optimized split of both channels.
void allocate_optimized(const Link& L, const PricingStage& ps, Allocation& a) {
  const auto& sc = L.sc;
  AccessParams ap;
  ap.B_u = sc.radio().B_u;
  ap.c_tau = sc.cost().c_tau;
  ap.c_Bu = sc.cost().c_Bu;
  ap.n_bisect = sc.solver().n_bisect;
  ap.prune_key = sc.solver().access_prune_key;

  std::vector<AccessTask> access;
  for (std::size_t i = 0; i < L.n; ++i) {
    if (!a.beta_uh[i]) continue;
    const auto& in = ps.inputs[i];
    access.push_back({in.task.id, in.task.d, in.task.tau_max, in.tau_local, in.tau_haps,
                      ps.outcome.quotes[i].c_mec, L.se[i]});
  }
  const AccessAllocation acc = allocate_access(access, ap);
  a.eta = acc.eta;
  for (const auto& e : acc.pruned) {
    a.log.push_back(record_of(e));
    a.beta_uh[static_cast<std::size_t>(e.task_id)] = 0;
    a.beta_hs[static_cast<std::size_t>(e.task_id)] = 0;
  }
  for (const auto& [id, r] : acc.rho) a.rho[static_cast<std::size_t>(id)] = r;

  FeederParams fp;
  fp.B_h = sc.radio().B_h;
  fp.se_hs = L.se_hs;
  fp.se_sg = L.se_sg;
  fp.prop_hs = L.draw.channels.prop_hs;
  fp.prop_sg = L.draw.channels.prop_sg;
  fp.c_tau = sc.cost().c_tau;
  fp.c_Bh = sc.cost().c_Bh;

  std::vector<FeederTask> feeder;
  for (std::size_t i = 0; i < L.n; ++i) {
    if (!a.beta_hs[i]) continue;
    const auto& in = ps.inputs[i];
    feeder.push_back({in.task.id, in.task.d, in.task.tau_max,
                      access_tx_delay(in.task, L.access_rate(i, a.rho[i])), in.tau_haps,
                      ps.outcome.quotes[i].c_mcc});
  }
  const FeederAllocation fa = allocate_feeder(feeder, fp);
  for (const auto& e : fa.pruned) {
    a.log.push_back(record_of(e));
    a.beta_hs[static_cast<std::size_t>(e.task_id)] = 0;
  }
  a.rho_B = fa.rho_B;
}

// Equal shares with deadline pruning only.
void allocate_equal(const Link& L, const PricingStage& ps, Allocation& a) {
  auto remove_worst = [&](std::vector<std::size_t>& set, auto headroom) {
    std::size_t best = 0;
    for (std::size_t k = 1; k < set.size(); ++k)
      if (headroom(set[k]) < headroom(set[best])) best = k;
    const std::size_t idx = set[best];
    set.erase(set.begin() + static_cast<std::ptrdiff_t>(best));
    return idx;
  };

  std::vector<std::size_t> access;
  for (std::size_t i = 0; i < L.n; ++i)
    if (a.beta_uh[i]) access.push_back(i);
  auto access_ok = [&](std::size_t i, double rho) {
    return access_tx_delay(L.draw.tasks[i], L.access_rate(i, rho)) + ps.inputs[i].tau_haps <=
           L.draw.tasks[i].tau_max;
  };
  while (!access.empty()) {
    const double share = 1.0 / static_cast<double>(access.size());
    if (std::all_of(access.begin(), access.end(), [&](std::size_t i) { return access_ok(i, share); }))
      break;
    const std::size_t idx = remove_worst(access, [&](std::size_t i) {
      return L.draw.tasks[i].tau_max - ps.inputs[i].tau_haps;
    });
    a.log.push_back({static_cast<int>(idx), "equal-access-deadline", kReasonEqualAccess});
    a.beta_uh[idx] = 0;
    a.beta_hs[idx] = 0;
  }
  for (std::size_t i : access) a.rho[i] = 1.0 / static_cast<double>(access.size());

  std::vector<std::size_t> cloud;
  for (std::size_t i = 0; i < L.n; ++i)
    if (a.beta_hs[i]) cloud.push_back(i);
  auto tau_access = [&](std::size_t i) {
    return access_tx_delay(L.draw.tasks[i], L.access_rate(i, a.rho[i]));
  };
  while (!cloud.empty()) {
    double bits = 0.0;
    for (std::size_t i : cloud) bits += L.draw.tasks[i].d;
    const double fd = feeder_delay(bits, L.feeder_hs_rate(1.0), L.feeder_sg_rate(1.0),
                                   L.draw.channels.prop_hs, L.draw.channels.prop_sg);
    if (std::all_of(cloud.begin(), cloud.end(), [&](std::size_t i) {
          return tau_access(i) + fd <= L.draw.tasks[i].tau_max;
        }))
      break;
    const std::size_t idx =
        remove_worst(cloud, [&](std::size_t i) { return L.draw.tasks[i].tau_max - tau_access(i); });
    a.log.push_back({static_cast<int>(idx), "full-feeder-deadline", kReasonFullFeeder});
    a.beta_hs[idx] = 0;
  }
  a.rho_B = cloud.empty() ? 0.0 : 1.0;
}

SnapshotReport assemble(const Link& L, Method method, const PricingStage& ps,
                        const Allocation& a) {
  const auto& sc = L.sc;
  SnapshotReport r;
  r.method = method;
  r.cost = sc.cost();
  r.rho_B = a.rho_B;
  r.eta = a.eta;
  r.haps_cpu_share = ps.haps_cpu;
  r.pricing_tau_hs = ps.outcome.tau_hs;
  r.pricing_tau_sg = ps.outcome.tau_sg;
  r.prune_log = a.log;

  double cloud_bits = 0.0;
  for (std::size_t i = 0; i < L.n; ++i)
    if (a.beta_hs[i]) cloud_bits += L.draw.tasks[i].d;
  if (cloud_bits > 0.0) {
    r.tau_hs = feeder_hop_delay(cloud_bits, L.feeder_hs_rate(a.rho_B), L.draw.channels.prop_hs);
    r.tau_sg = feeder_hop_delay(cloud_bits, L.feeder_sg_rate(a.rho_B), L.draw.channels.prop_sg);
  }

  std::vector<TaskAccount> accounts(L.n);
  r.tasks.resize(L.n);
  for (std::size_t i = 0; i < L.n; ++i) {
    const auto& in = ps.inputs[i];
    auto& t = r.tasks[i];
    t.task = in.task;
    t.beta_uh = a.beta_uh[i];
    t.beta_hs = a.beta_hs[i];
    t.quote = ps.outcome.quotes[i];
    t.rho = t.beta_uh ? a.rho[i] : 0.0;
    t.tau_local = in.tau_local;
    t.tau_haps = in.tau_haps;
    t.at_pricing = {in.rho, in.tau_access, ps.outcome.decisions[i].beta_uh,
                    ps.outcome.decisions[i].beta_hs};

    DelayBreakdown& d = t.delay;
    if (!t.beta_uh) {
      t.placement = Placement::Local;
      d.compute = in.tau_local;
      t.deadline_miss = in.tau_local > in.task.tau_max;
    } else {
      d.tx_access = access_tx_delay(in.task, L.access_rate(i, t.rho));
      if (t.beta_hs) {
        t.placement = Placement::MCC;
        d.tx_feeder = r.tau_hs + r.tau_sg;
      } else {
        t.placement = Placement::MEC;
        d.compute = in.tau_haps;
      }
    }
    d.total = d.tx_access + d.tx_feeder + d.compute;

    auto& acc = accounts[i];
    acc.beta_uh = t.beta_uh;
    acc.beta_hs = t.beta_hs;
    acc.tau_local = in.tau_local;
    acc.tau_access = d.tx_access;
    acc.tau_haps = in.tau_haps;
    acc.rho = t.rho;
    acc.c_mec = t.quote.c_mec;
    acc.c_mcc = t.quote.c_mcc;
  }

  TierInputs ti;
  ti.tasks = accounts;
  ti.tau_hs = r.tau_hs;
  ti.tau_sg = r.tau_sg;
  ti.rho_B = a.rho_B;
  ti.B_u = sc.radio().B_u;
  ti.B_h = sc.radio().B_h;
  ti.cost = sc.cost();
  r.costs = evaluate_tier_costs(ti);
  return r;
}

SnapshotReport run_pipeline(const Link& L, Method method, const PriceFix& fix) {
  std::vector<double> rho(L.n, 1.0 / static_cast<double>(L.n));
  double rho_B = 1.0;

  const int passes = L.sc.solver().pricing_passes;
  SnapshotReport report;
  for (int pass = 0; pass < passes; ++pass) {
    const PricingStage ps = price(L, rho, rho_B, fix);
    Allocation a;
    a.rho.assign(L.n, 0.0);
    for (const auto& d : ps.outcome.decisions) {
      a.beta_uh.push_back(d.beta_uh);
      a.beta_hs.push_back(d.beta_hs);
    }
    if (method == Method::NoBWOpt)
      allocate_equal(L, ps, a);
    else
      allocate_optimized(L, ps, a);
    report = assemble(L, method, ps, a);

    // Later passes quote prices at the shares just allocated.
    for (std::size_t i = 0; i < L.n; ++i)
      rho[i] = a.beta_uh[i] ? a.rho[i] : 1.0 / static_cast<double>(L.n);
    rho_B = a.rho_B > 0.0 ? a.rho_B : 1.0;
  }
  return report;
}

}  // namespace

SnapshotReport run_snapshot(const Scenario& scenario, const SnapshotDraw& draw, Method method) {
  if (draw.tasks.empty()) throw Error(Errc::EmptyGDSet, "tasks", "no tasks to schedule");
  const Link L(scenario, draw);

  if (method != Method::FixedMaxCost) return run_pipeline(L, method, {});

  // Uniform per-tier price at the highest quote the policy produced.
  const SnapshotReport base = run_pipeline(L, Method::Proposed, {});
  PriceFix fix{0.0, 0.0};
  for (const auto& t : base.tasks) {
    fix.mec = std::max(*fix.mec, t.quote.c_mec);
    fix.mcc = std::max(*fix.mcc, t.quote.c_mcc);
  }
  return run_pipeline(L, Method::FixedMaxCost, fix);
}

SnapshotReport run_snapshot(const Scenario& scenario, std::span<const Task> tasks, Method method) {
  SnapshotDraw draw;
  draw.tasks.assign(tasks.begin(), tasks.end());
  RandomStream rng(scenario.config().seed, kChannelStream);
  draw.channels = draw_channels(scenario, rng);
  return run_snapshot(scenario, draw, method);
}

// ---------------------------------------------------------------------------

double SweepCell::placement_fraction(PayloadClass c, Placement p) const {
  const auto& row = placement_count[index_of(c)];
  const int total = std::accumulate(row.begin(), row.end(), 0);
  if (total == 0) return 0.0;
  return static_cast<double>(row[static_cast<std::size_t>(p)]) / total;
}

const SweepCell& SweepResult::cell(std::size_t grid_idx, std::size_t method_idx) const {
  return cells.at(grid_idx * methods.size() + method_idx);
}

namespace {

RunningSummary summarize(const std::vector<double>& xs) {
  RunningSummary s;
  if (xs.empty()) return s;
  const double n = static_cast<double>(xs.size());
  s.mean = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.std = std::sqrt(ss / (n - 1.0));
  }
  return s;
}

}  // namespace

SweepResult run_sweep(const Scenario& scenario, std::span<const double> c_tau_grid,
                      int n_snapshots, std::span<const Method> methods) {
  if (c_tau_grid.empty()) throw Error(Errc::InvalidArgument, "c_tau_grid", "must be nonempty");
  if (n_snapshots < 1) throw Error(Errc::InvalidArgument, "n_snapshots", "must be >= 1");
  if (methods.empty()) throw Error(Errc::InvalidArgument, "methods", "must be nonempty");

  SweepResult out;
  out.c_tau_grid.assign(c_tau_grid.begin(), c_tau_grid.end());
  out.methods.assign(methods.begin(), methods.end());
  out.n_snapshots = n_snapshots;
  out.base_seed = scenario.config().seed;

  std::vector<SnapshotDraw> draws;
  draws.reserve(static_cast<std::size_t>(n_snapshots));
  for (int k = 0; k < n_snapshots; ++k)
    draws.push_back(draw_snapshot(scenario, out.base_seed + static_cast<std::uint64_t>(k)));

  for (double c_tau : c_tau_grid) {
    const Scenario sc = with_delay_cost(scenario, c_tau);
    for (Method m : methods) {
      SweepCell cell;
      cell.c_tau = c_tau;
      cell.method = m;
      std::array<std::vector<double>, 3> samples;
      double offloaded = 0.0;
      for (const auto& draw : draws) {
        const SnapshotReport r = run_snapshot(sc, draw, m);
        for (Tier t : kAllTiers) samples[static_cast<std::size_t>(t)].push_back(r.real_cost(t));
        for (const auto& t : r.tasks) {
          const std::size_t c = index_of(t.task.payload_class);
          if (t.deadline_miss)
            ++cell.deadline_miss[c];
          else
            ++cell.placement_count[c][static_cast<std::size_t>(t.placement)];
        }
        offloaded += static_cast<double>(r.offloaded_count());
      }
      for (std::size_t t = 0; t < 3; ++t) cell.real_cost[t] = summarize(samples[t]);
      cell.offloaded_mean = offloaded / n_snapshots;
      out.cells.push_back(cell);
    }
  }
  return out;
}

}  // namespace ntnoff
