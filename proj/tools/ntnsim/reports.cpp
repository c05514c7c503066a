#include "ntnsim/reports.hpp"

#include <fstream>
#include <system_error>

namespace ntnsim {

using ntnoff::SnapshotReport;
using ntnoff::SweepCell;

namespace {

std::string str(std::string_view s) { return std::string(s); }

class Csv {
 public:
  explicit Csv(const char* header) { out_ = std::string(header) + "\n"; }

  Csv& field(const std::string& s) {
    if (!first_) out_ += ',';
    out_ += s;
    first_ = false;
    return *this;
  }
  Csv& field(double v) { return field(format_double(v)); }
  Csv& field(int v) { return field(std::to_string(v)); }
  void end_row() {
    out_ += '\n';
    first_ = true;
  }
  const std::string& text() const { return out_; }

 private:
  std::string out_;
  bool first_ = true;
};

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError(path, "cannot open for writing");
  out << content;
  out.close();
  if (!out) throw IoError(path, "write failed");
}

void ensure_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw IoError(dir, "cannot create output directory");
}

}  // namespace

SweepCell cell_of(const SnapshotReport& r) {
  SweepCell c;
  c.c_tau = r.cost.c_tau;
  c.method = r.method;
  for (auto t : ntnoff::kAllTiers) c.real_cost[static_cast<std::size_t>(t)] = {r.real_cost(t), 0.0};
  for (const auto& t : r.tasks) {
    const auto k = ntnoff::index_of(t.task.payload_class);
    if (t.deadline_miss)
      ++c.deadline_miss[k];
    else
      ++c.placement_count[k][static_cast<std::size_t>(t.placement)];
  }
  c.offloaded_mean = static_cast<double>(r.offloaded_count());
  return c;
}

std::string tier_costs_csv(std::span<const SweepCell> cells) {
  Csv csv(kTierCostsHeader);
  for (const auto& c : cells)
    for (auto t : ntnoff::kAllTiers) {
      const auto& s = c.real_cost[static_cast<std::size_t>(t)];
      csv.field(c.c_tau).field(str(to_string(c.method))).field(str(to_string(t)));
      csv.field(s.mean).field(s.std).end_row();
    }
  return csv.text();
}

std::string placement_csv(std::span<const SweepCell> cells) {
  Csv csv(kPlacementHeader);
  for (const auto& c : cells)
    for (auto pc : ntnoff::kPayloadClasses)
      for (auto p : ntnoff::kAllPlacements) {
        csv.field(c.c_tau).field(str(to_string(c.method)));
        csv.field(str(to_string(pc))).field(str(to_string(p)));
        csv.field(c.placement_fraction(pc, p)).end_row();
      }
  return csv.text();
}

std::string tasks_csv(std::span<const SnapshotReport> reports) {
  Csv csv(kTasksHeader);
  for (const auto& r : reports)
    for (const auto& t : r.tasks) {
      csv.field(r.cost.c_tau).field(str(to_string(r.method))).field(t.task.id);
      csv.field(str(to_string(t.task.payload_class))).field(t.task.d).field(t.task.mu);
      csv.field(t.task.tau_max).field(str(to_string(t.placement)));
      csv.field(t.deadline_miss ? 1 : 0).field(t.beta_uh).field(t.beta_hs);
      csv.field(t.quote.c_mec).field(t.quote.c_mcc).field(t.rho).field(r.rho_B);
      csv.field(t.delay.tx_access).field(t.delay.tx_feeder).field(t.delay.compute);
      csv.field(t.delay.total).end_row();
    }
  return csv.text();
}

std::string manifest_text(const RunManifest& m, const ntnoff::ScenarioConfig& cfg) {
  std::string out = "# ntnsim run manifest\n";
  out += "# command = " + str(to_string(m.command)) + "\n";
  std::string methods;
  for (auto method : m.resolved_methods())
    methods += (methods.empty() ? "" : ",") + str(to_string(method));
  out += "# methods = " + methods + "\n";
  if (m.command == Command::Sweep) {
    std::string grid;
    for (double v : m.ctau_grid) grid += (grid.empty() ? "" : ",") + format_double(v);
    out += "# ctau_grid = " + grid + "\n";
    out += "# snapshots = " + std::to_string(m.snapshots) + "\n";
  }
  out += serialize_config(cfg);
  return out;
}

std::vector<std::filesystem::path> write_reports(std::span<const SnapshotReport> reports,
                                                 const RunManifest& manifest,
                                                 const ntnoff::ScenarioConfig& cfg,
                                                 const std::filesystem::path& dir) {
  ensure_dir(dir);
  std::vector<SweepCell> cells;
  for (const auto& r : reports) cells.push_back(cell_of(r));
  const std::vector<std::pair<std::string, std::string>> files{
      {"tier_costs.csv", tier_costs_csv(cells)},
      {"placement.csv", placement_csv(cells)},
      {"tasks.csv", tasks_csv(reports)},
      {"manifest.txt", manifest_text(manifest, cfg)}};
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : files) {
    write_file(dir / name, content);
    written.push_back(dir / name);
  }
  return written;
}

std::vector<std::filesystem::path> write_reports(const ntnoff::SweepResult& sweep,
                                                 const RunManifest& manifest,
                                                 const ntnoff::ScenarioConfig& cfg,
                                                 const std::filesystem::path& dir) {
  ensure_dir(dir);
  const std::vector<std::pair<std::string, std::string>> files{
      {"tier_costs.csv", tier_costs_csv(sweep.cells)},
      {"placement.csv", placement_csv(sweep.cells)},
      {"manifest.txt", manifest_text(manifest, cfg)}};
  std::vector<std::filesystem::path> written;
  for (const auto& [name, content] : files) {
    write_file(dir / name, content);
    written.push_back(dir / name);
  }
  return written;
}

}  // namespace ntnsim
