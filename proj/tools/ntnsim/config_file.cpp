#include "ntnsim/config_file.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "ntnoff/error.hpp"

namespace ntnsim {

using ntnoff::ScenarioConfig;

ConfigError::ConfigError(std::string key, int line, const std::string& detail)
    : std::runtime_error((line > 0 ? "line " + std::to_string(line) + ": " : std::string()) +
                         key + ": " + detail),
      key_(std::move(key)),
      line_(line) {}

IoError::IoError(std::filesystem::path path, const std::string& detail)
    : std::runtime_error(path.string() + ": " + detail), path_(std::move(path)) {}

namespace {

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto b = s.find_first_not_of(ws);
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(ws);
  return s.substr(b, e - b + 1);
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename Int>
Int parse_int(std::string_view text, const std::string& key, int line) {
  Int v{};
  const auto t = trim(text);
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
    throw ConfigError(key, line, "expected an integer, got '" + std::string(text) + "'");
  return v;
}

ntnoff::Position3D parse_position(std::string_view text, const std::string& key, int line) {
  const auto parts = split(text, ',');
  if (parts.size() != 3) throw ConfigError(key, line, "expected x,y,z");
  return {parse_double(parts[0], key, line), parse_double(parts[1], key, line),
          parse_double(parts[2], key, line)};
}

std::string format_position(const ntnoff::Position3D& p) {
  return format_double(p.x) + "," + format_double(p.y) + "," + format_double(p.z);
}

struct Field {
  std::function<void(ScenarioConfig&, std::string_view, const std::string&, int)> set;
  std::function<std::string(const ScenarioConfig&)> get;
};

template <typename Member>
Field number_field(Member member) {
  return {[member](ScenarioConfig& c, std::string_view v, const std::string& k, int l) {
            std::invoke(member, c) = parse_double(v, k, l);
          },
          [member](const ScenarioConfig& c) { return format_double(std::invoke(member, c)); }};
}

template <typename Member>
Field int_field(Member member) {
  return {[member](ScenarioConfig& c, std::string_view v, const std::string& k, int l) {
            std::invoke(member, c) = parse_int<int>(v, k, l);
          },
          [member](const ScenarioConfig& c) { return std::to_string(std::invoke(member, c)); }};
}

template <typename Member>
Field position_field(Member member) {
  return {[member](ScenarioConfig& c, std::string_view v, const std::string& k, int l) {
            std::invoke(member, c) = parse_position(v, k, l);
          },
          [member](const ScenarioConfig& c) { return format_position(std::invoke(member, c)); }};
}

ntnoff::PayloadClassSpec& class_spec(ScenarioConfig& c, ntnoff::PayloadClass pc,
                                     const std::string& key, int line) {
  for (auto& s : c.task_classes)
    if (s.payload_class == pc) return s;
  throw ConfigError(key, line, "payload class not configured");
}

const ntnoff::PayloadClassSpec* find_class(const ScenarioConfig& c, ntnoff::PayloadClass pc) {
  for (const auto& s : c.task_classes)
    if (s.payload_class == pc) return &s;
  return nullptr;
}

// Ordered key table; the order is the serialization order.
const std::vector<std::pair<std::string, Field>>& fields() {
  static const auto table = [] {
    std::vector<std::pair<std::string, Field>> t;
    auto add = [&](std::string key, Field f) { t.emplace_back(std::move(key), std::move(f)); };

    add("seed", {[](ScenarioConfig& c, std::string_view v, const std::string& k, int l) {
                   c.seed = parse_int<std::uint64_t>(v, k, l);
                 },
                 [](const ScenarioConfig& c) { return std::to_string(c.seed); }});
    add("pricing.eps", number_field(&ScenarioConfig::price_margin_eps));

    add("nodes.haps", position_field(&ScenarioConfig::haps_pos));
    add("nodes.leo", position_field(&ScenarioConfig::leo_pos));
    add("nodes.gw", position_field(&ScenarioConfig::gw_pos));

    auto radio = [](auto m) { return [m](auto& c) -> auto& { return c.radio.*m; }; };
    using R = ntnoff::RadioParams;
    add("radio.B_u", number_field(radio(&R::B_u)));
    add("radio.B_h", number_field(radio(&R::B_h)));
    add("radio.B_u_norm", number_field(radio(&R::B_u_norm)));
    add("radio.B_h_norm", number_field(radio(&R::B_h_norm)));
    add("radio.f_c_access", number_field(radio(&R::f_c_access)));
    add("radio.f_c_feeder", number_field(radio(&R::f_c_feeder)));
    add("radio.N0", number_field(radio(&R::N0)));
    add("radio.p_i", number_field(radio(&R::p_i)));
    add("radio.p_h", number_field(radio(&R::p_h)));
    add("radio.p_s", number_field(radio(&R::p_s)));
    add("radio.M_h_d", int_field(radio(&R::M_h_d)));
    add("radio.M_h_u", int_field(radio(&R::M_h_u)));
    add("radio.M_s", int_field(radio(&R::M_s)));
    add("radio.M_g", int_field(radio(&R::M_g)));
    add("radio.rician_K", number_field(radio(&R::rician_K)));
    add("radio.G_atm", number_field(radio(&R::G_atm)));

    auto atg = [](auto m) { return [m](auto& c) -> auto& { return c.radio.atg_env.*m; }; };
    using A = ntnoff::AtgEnvironment;
    add("radio.atg.a", number_field(atg(&A::a)));
    add("radio.atg.b", number_field(atg(&A::b)));
    add("radio.atg.eta_los_db", number_field(atg(&A::eta_los_db)));
    add("radio.atg.eta_nlos_db", number_field(atg(&A::eta_nlos_db)));

    auto cost = [](auto m) { return [m](auto& c) -> auto& { return c.cost.*m; }; };
    using C = ntnoff::CostParams;
    add("cost.c_tau", number_field(cost(&C::c_tau)));
    add("cost.c_Bu", number_field(cost(&C::c_Bu)));
    add("cost.c_Bh", number_field(cost(&C::c_Bh)));

    auto compute = [](auto m) { return [m](auto& c) -> auto& { return c.compute.*m; }; };
    using P = ntnoff::ComputeParams;
    add("compute.F_h", number_field(compute(&P::F_h)));
    add("compute.f_local", number_field(compute(&P::f_local)));
    add("compute.haps_share_policy",
        {[](ScenarioConfig& c, std::string_view v, const std::string& k, int l) {
           const auto p = ntnoff::parse_haps_share_policy(trim(v));
           if (!p) throw ConfigError(k, l, "expected static-equal or equal-among-computed");
           c.compute.haps_share_policy = *p;
         },
         [](const ScenarioConfig& c) {
           return std::string(ntnoff::to_string(c.compute.haps_share_policy));
         }});

    auto solver = [](auto m) { return [m](auto& c) -> auto& { return c.solver.*m; }; };
    using S = ntnoff::SolverParams;
    add("solver.n_bisect", int_field(solver(&S::n_bisect)));
    add("solver.pricing_passes", int_field(solver(&S::pricing_passes)));
    add("solver.access_prune_key",
        {[](ScenarioConfig& c, std::string_view v, const std::string& k, int l) {
           const auto p = ntnoff::parse_access_prune_key(trim(v));
           if (!p) throw ConfigError(k, l, "expected local-margin or haps-margin");
           c.solver.access_prune_key = *p;
         },
         [](const ScenarioConfig& c) {
           return std::string(ntnoff::to_string(c.solver.access_prune_key));
         }});

    using T = ntnoff::PayloadClassSpec;
    const std::pair<const char*, double T::*> class_members[] = {
        {"mean_bits", &T::mean_bits}, {"rel_std", &T::rel_std}, {"mu", &T::mu},
        {"tau_max", &T::tau_max},     {"mix", &T::mix_fraction}};
    for (auto pc : ntnoff::kPayloadClasses) {
      for (const auto& [name, member] : class_members) {
        const std::string key = "tasks." + std::string(ntnoff::to_string(pc)) + "." + name;
        add(key, {[pc, member](ScenarioConfig& c, std::string_view v, const std::string& k, int l) {
                    class_spec(c, pc, k, l).*member = parse_double(v, k, l);
                  },
                  [pc, member](const ScenarioConfig& c) {
                    const auto* s = find_class(c, pc);
                    return s ? format_double(s->*member) : std::string();
                  }});
      }
    }
    return t;
  }();
  return table;
}

const Field* lookup(const std::string& key) {
  for (const auto& [k, f] : fields())
    if (k == key) return &f;
  return nullptr;
}

}  // namespace

std::string format_double(double v) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

double parse_double(std::string_view text, const std::string& key, int line) {
  const auto t = trim(text);
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw ConfigError(key, line, "expected a number, got '" + std::string(text) + "'");
  return v;
}

std::vector<Setting> parse_settings(std::string_view text) {
  std::vector<Setting> out;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto end = text.find('\n', start);
    const auto raw = text.substr(start, end == std::string_view::npos ? end : end - start);
    ++line_no;
    const auto line = trim(raw);
    if (!line.empty() && line.front() != '#') {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos)
        throw ConfigError(std::string(line), line_no, "expected key = value");
      out.push_back({std::string(trim(line.substr(0, eq))), std::string(trim(line.substr(eq + 1))),
                     line_no});
    }
    if (end == std::string_view::npos) break;
    start = end + 1;
  }
  return out;
}

void apply_settings(ScenarioConfig& cfg, const std::vector<Setting>& settings) {
  std::map<int, ntnoff::Position3D> explicit_gds;
  std::optional<std::vector<ntnoff::GroundDevice>> ring;
  for (const auto& s : settings) {
    if (s.key == "gds.ring") {
      const auto parts = split(s.value, ',');
      if (parts.size() != 2) throw ConfigError(s.key, s.line, "expected COUNT,RADIUS");
      const int count = parse_int<int>(parts[0], s.key, s.line);
      if (count < 1) throw ConfigError(s.key, s.line, "count must be >= 1");
      ring = ntnoff::ring_layout(count, parse_double(parts[1], s.key, s.line));
      continue;
    }
    if (s.key.starts_with("gd.") && s.key.ends_with(".pos")) {
      const std::string_view id_text =
          std::string_view(s.key).substr(3, s.key.size() - 3 - std::string_view(".pos").size());
      const int id = parse_int<int>(id_text, s.key, s.line);
      if (id < 0) throw ConfigError(s.key, s.line, "GD id must be >= 0");
      explicit_gds[id] = parse_position(s.value, s.key, s.line);
      continue;
    }
    const Field* f = lookup(s.key);
    if (!f) throw ConfigError(s.key, s.line, "unknown key");
    f->set(cfg, s.value, s.key, s.line);
  }

  if (ring && !explicit_gds.empty())
    throw ConfigError("gds.ring", 0, "cannot be combined with gd.<k>.pos keys");
  if (ring) cfg.gds = *ring;
  if (!explicit_gds.empty()) {
    cfg.gds.clear();
    int expected = 0;
    for (const auto& [id, pos] : explicit_gds) {
      if (id != expected)
        throw ConfigError("gd." + std::to_string(expected) + ".pos", 0, "GD ids must be 0..n-1");
      cfg.gds.push_back({id, pos});
      ++expected;
    }
  }
}

ScenarioConfig parse_config(std::string_view text, ScenarioConfig base) {
  apply_settings(base, parse_settings(text));
  return base;
}

ScenarioConfig load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(path, "cannot open scenario file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::string serialize_config(const ScenarioConfig& cfg) {
  std::string out;
  for (const auto& [key, field] : fields()) {
    const std::string value = field.get(cfg);
    if (value.empty()) continue;
    out += key + " = " + value + "\n";
  }
  for (const auto& gd : cfg.gds)
    out += "gd." + std::to_string(gd.id) + ".pos = " + format_position(gd.pos) + "\n";
  return out;
}

}  // namespace ntnsim
