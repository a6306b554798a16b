#include "d2d/io.hpp"

#include <charconv>
#include <cmath>
#include <ctime>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "d2d/version.hpp"

namespace d2d {

namespace {

using nlohmann::json;

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

[[noreturn]] void bad_value(const std::string& key, const char* expected,
                            const std::string& got) {
  throw std::invalid_argument("config: key '" + key + "' expects " + expected +
                              ", got '" + got + "'");
}

double parse_double(const std::string& key, const char* expected, const std::string& raw) {
  const std::string v = trim(raw);
  double out = 0.0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, expected, raw);
  return out;
}

long long parse_int(const std::string& key, const char* expected, const std::string& raw) {
  const std::string v = trim(raw);
  long long out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, expected, raw);
  return out;
}

std::uint64_t parse_u64(const std::string& key, const char* expected,
                        const std::string& raw) {
  const std::string v = trim(raw);
  std::uint64_t out = 0;
  const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
  if (ec != std::errc{} || ptr != v.data() + v.size()) bad_value(key, expected, raw);
  return out;
}

std::vector<std::string> split_csv(const std::string& raw) {
  std::vector<std::string> out;
  std::stringstream ss(raw);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const std::string t = trim(item);
    if (!t.empty()) out.push_back(t);
  }
  return out;
}

std::vector<double> parse_double_list(const std::string& key, const char* expected,
                                      const std::string& raw) {
  std::vector<double> out;
  for (const std::string& tok : split_csv(raw)) out.push_back(parse_double(key, expected, tok));
  if (out.empty()) bad_value(key, expected, raw);
  return out;
}

SchemeSpec scheme_from_name(const std::string& key, const std::string& name) {
  if (name == "no_ac") return SchemeSpec::no_ac();
  if (name == "channel_aware") return SchemeSpec::channel_aware();
  if (name == "sir_fixed") return SchemeSpec::sir_fixed(0.0);
  if (name == "sir_unconditional") return SchemeSpec::sir_unconditional();
  if (name == "sir_conditional") return SchemeSpec::sir_conditional();
  if (name == "exhaustive") return SchemeSpec::exhaustive();
  bad_value(key, "one of no_ac|channel_aware|sir_fixed|sir_unconditional|sir_conditional|exhaustive",
            name);
}

struct PlanBuilder {
  ExperimentPlan plan;
  bool density_sweep_set = false;
  bool fixed_g_set = false;
  double fixed_g_db = 0.0;
  std::vector<double> search_grid_db;

  PlanBuilder() {
    plan.schemes = {SchemeSpec::no_ac(), SchemeSpec::channel_aware(),
                    SchemeSpec::sir_unconditional(), SchemeSpec::sir_conditional()};
    plan.density_sweep = {plan.cfg.d2d_density_per_m2};
    plan.beta_sweep_db = {5.0};
  }

  void apply(const std::string& key, const std::string& value) {
    NetworkConfig& cfg = plan.cfg;
    if (key == "network.cell_radius_m") {
      cfg.cell_radius_m = parse_double(key, "meters (positive real)", value);
    } else if (key == "network.d2d_density_per_m2") {
      cfg.d2d_density_per_m2 = parse_double(key, "links per square meter (positive real)", value);
      if (!density_sweep_set) plan.density_sweep = {cfg.d2d_density_per_m2};
    } else if (key == "network.d2d_link_distance_m") {
      cfg.d2d_link_distance_m = parse_double(key, "meters (positive real)", value);
    } else if (key == "network.cellular_power_mw") {
      cfg.cellular_power_mw = parse_double(key, "milliwatts (positive real)", value);
    } else if (key == "network.d2d_power_mw") {
      cfg.d2d_power_mw = parse_double(key, "milliwatts (positive real)", value);
    } else if (key == "network.pathloss_exponent") {
      cfg.pathloss_exponent = parse_double(key, "a dimensionless real > 2", value);
    } else if (key == "network.guard_ring_factor") {
      cfg.guard_ring_factor = parse_double(key, "a factor >= 1", value);
    } else if (key == "sim.realizations") {
      plan.n_realizations = static_cast<int>(parse_int(key, "a positive integer", value));
    } else if (key == "sim.master_seed") {
      plan.master_seed = parse_u64(key, "an unsigned 64-bit integer", value);
    } else if (key == "sim.threads") {
      plan.n_threads = static_cast<int>(parse_int(key, "an integer (0 = auto)", value));
    } else if (key == "sweep.density_per_m2") {
      plan.density_sweep = parse_double_list(key, "comma-separated densities per square meter", value);
      density_sweep_set = true;
    } else if (key == "sweep.beta_db") {
      plan.beta_sweep_db = parse_double_list(key, "comma-separated target SIRs in dB", value);
    } else if (key == "schemes") {
      plan.schemes.clear();
      for (const std::string& name : split_csv(value))
        plan.schemes.push_back(scheme_from_name(key, name));
      if (plan.schemes.empty()) bad_value(key, "a comma-separated scheme list", value);
    } else if (key == "scheme.fixed_g_db") {
      fixed_g_db = parse_double(key, "an SIR threshold in dB", value);
      fixed_g_set = true;
    } else if (key == "search.grid_db") {
      search_grid_db = parse_double_list(key, "comma-separated SIR thresholds in dB", value);
    } else {
      throw std::invalid_argument("config: unknown key '" + key + "'");
    }
  }

  ExperimentPlan finish() {
    if (fixed_g_set) {
      const double g = db_to_linear(fixed_g_db);
      for (SchemeSpec& s : plan.schemes)
        if (s.kind == SchemeKind::sir_threshold && s.source == ThresholdSource::fixed)
          s.fixed_g_linear = g;
    }
    if (!search_grid_db.empty()) {
      std::vector<double> grid;
      grid.reserve(search_grid_db.size());
      for (const double db : search_grid_db) grid.push_back(db_to_linear(db));
      for (SchemeSpec& s : plan.schemes)
        if (s.kind == SchemeKind::exhaustive) s.search_grid_override = grid;
    }
    validate(plan.cfg);
    if (plan.n_realizations < 1)
      throw std::invalid_argument("config: sim.realizations must be >= 1");
    if (plan.density_sweep.empty()) plan.density_sweep = {plan.cfg.d2d_density_per_m2};
    for (const double d : plan.density_sweep)
      if (!(d > 0.0))
        throw std::invalid_argument("config: sweep.density_per_m2 entries must be > 0");
    if (plan.beta_sweep_db.empty())
      throw std::invalid_argument("config: sweep.beta_db must be nonempty");
    if (plan.schemes.empty()) throw std::invalid_argument("config: schemes must be nonempty");
    return plan;
  }
};

const char* kind_name(SchemeKind k) {
  switch (k) {
    case SchemeKind::no_ac: return "no_ac";
    case SchemeKind::channel_aware: return "channel_aware";
    case SchemeKind::sir_threshold: return "sir_threshold";
    case SchemeKind::exhaustive: return "exhaustive";
  }
  return "no_ac";
}

SchemeKind kind_from_name(const std::string& s) {
  if (s == "no_ac") return SchemeKind::no_ac;
  if (s == "channel_aware") return SchemeKind::channel_aware;
  if (s == "sir_threshold") return SchemeKind::sir_threshold;
  if (s == "exhaustive") return SchemeKind::exhaustive;
  throw std::invalid_argument("json: unknown scheme kind '" + s + "'");
}

const char* source_name(ThresholdSource s) {
  switch (s) {
    case ThresholdSource::fixed: return "fixed";
    case ThresholdSource::unconditional_optimal: return "unconditional_optimal";
    case ThresholdSource::conditional_optimal: return "conditional_optimal";
  }
  return "fixed";
}

ThresholdSource source_from_name(const std::string& s) {
  if (s == "fixed") return ThresholdSource::fixed;
  if (s == "unconditional_optimal") return ThresholdSource::unconditional_optimal;
  if (s == "conditional_optimal") return ThresholdSource::conditional_optimal;
  throw std::invalid_argument("json: unknown threshold source '" + s + "'");
}

json number_or_null(double v) {
  if (std::isnan(v)) return nullptr;
  return v;
}

double double_or_nan(const json& j) {
  if (j.is_null()) return std::numeric_limits<double>::quiet_NaN();
  return j.get<double>();
}

json plan_to_json(const ExperimentPlan& plan) {
  json schemes = json::array();
  for (const SchemeSpec& s : plan.schemes) {
    schemes.push_back({{"kind", kind_name(s.kind)},
                       {"source", source_name(s.source)},
                       {"fixed_g_linear", s.fixed_g_linear},
                       {"search_grid_override", s.search_grid_override}});
  }
  const NetworkConfig& c = plan.cfg;
  return {{"network",
           {{"cell_radius_m", c.cell_radius_m},
            {"d2d_density_per_m2", c.d2d_density_per_m2},
            {"d2d_link_distance_m", c.d2d_link_distance_m},
            {"cellular_power_mw", c.cellular_power_mw},
            {"d2d_power_mw", c.d2d_power_mw},
            {"pathloss_exponent", c.pathloss_exponent},
            {"guard_ring_factor", c.guard_ring_factor}}},
          {"schemes", schemes},
          {"density_sweep", plan.density_sweep},
          {"beta_sweep_db", plan.beta_sweep_db},
          {"n_realizations", plan.n_realizations},
          {"master_seed", plan.master_seed},
          {"n_threads", plan.n_threads}};
}

ExperimentPlan plan_from_json(const json& j) {
  ExperimentPlan plan;
  const json& n = j.at("network");
  plan.cfg.cell_radius_m = n.at("cell_radius_m").get<double>();
  plan.cfg.d2d_density_per_m2 = n.at("d2d_density_per_m2").get<double>();
  plan.cfg.d2d_link_distance_m = n.at("d2d_link_distance_m").get<double>();
  plan.cfg.cellular_power_mw = n.at("cellular_power_mw").get<double>();
  plan.cfg.d2d_power_mw = n.at("d2d_power_mw").get<double>();
  plan.cfg.pathloss_exponent = n.at("pathloss_exponent").get<double>();
  plan.cfg.guard_ring_factor = n.at("guard_ring_factor").get<double>();
  for (const json& s : j.at("schemes")) {
    SchemeSpec spec;
    spec.kind = kind_from_name(s.at("kind").get<std::string>());
    spec.source = source_from_name(s.at("source").get<std::string>());
    spec.fixed_g_linear = s.at("fixed_g_linear").get<double>();
    spec.search_grid_override = s.at("search_grid_override").get<std::vector<double>>();
    plan.schemes.push_back(std::move(spec));
  }
  plan.density_sweep = j.at("density_sweep").get<std::vector<double>>();
  plan.beta_sweep_db = j.at("beta_sweep_db").get<std::vector<double>>();
  plan.n_realizations = j.at("n_realizations").get<int>();
  plan.master_seed = j.at("master_seed").get<std::uint64_t>();
  plan.n_threads = j.at("n_threads").get<int>();
  return plan;
}

json report_to_json(const MetricsReport& r) {
  json out = {{"scheme_id", r.scheme_id},
              {"lambda", r.lambda},
              {"beta_db", r.beta_db},
              {"g_used_linear", r.g_used_linear},
              {"ps_analytic", r.ps_analytic},
              {"ps_empirical", r.empirical_ps},
              {"coverage_prob", r.coverage_prob},
              {"ase", r.ase},
              {"avg_sum_rate", r.avg_sum_rate},
              {"coverage_stderr", number_or_null(r.coverage_stderr)},
              {"ase_stderr", number_or_null(r.ase_stderr)},
              {"rate_stderr", number_or_null(r.rate_stderr)},
              {"ps_stderr", number_or_null(r.ps_stderr)},
              {"n_realizations", r.n_realizations},
              {"seed", r.seed}};
  // Display value; the linear field above is the lossless one.
  out["g_used_db"] = r.g_used_linear > 0.0 ? json(linear_to_db(r.g_used_linear)) : json(nullptr);
  return out;
}

MetricsReport report_from_json(const json& j) {
  MetricsReport r;
  r.scheme_id = j.at("scheme_id").get<std::string>();
  r.lambda = j.at("lambda").get<double>();
  r.beta_db = j.at("beta_db").get<double>();
  r.g_used_linear = j.at("g_used_linear").get<double>();
  r.ps_analytic = j.at("ps_analytic").get<double>();
  r.empirical_ps = j.at("ps_empirical").get<double>();
  r.coverage_prob = j.at("coverage_prob").get<double>();
  r.ase = j.at("ase").get<double>();
  r.avg_sum_rate = j.at("avg_sum_rate").get<double>();
  r.coverage_stderr = double_or_nan(j.at("coverage_stderr"));
  r.ase_stderr = double_or_nan(j.at("ase_stderr"));
  r.rate_stderr = double_or_nan(j.at("rate_stderr"));
  r.ps_stderr = double_or_nan(j.at("ps_stderr"));
  r.n_realizations = j.at("n_realizations").get<int>();
  r.seed = j.at("seed").get<std::uint64_t>();
  return r;
}

}  // namespace

ExperimentPlan parse_config_text(const std::string& text, const ConfigOverrides& overrides) {
  PlanBuilder builder;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    const std::string t = trim(line);
    if (t.empty()) continue;
    const auto eq = t.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config: line " + std::to_string(line_no) +
                                  " is not 'key = value': '" + t + "'");
    builder.apply(trim(t.substr(0, eq)), trim(t.substr(eq + 1)));
  }
  for (const auto& [key, value] : overrides) builder.apply(key, value);
  return builder.finish();
}

ExperimentPlan parse_config_file(const std::string& path, const ConfigOverrides& overrides) {
  if (path.empty()) return parse_config_text("", overrides);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("config: cannot read '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str(), overrides);
}

RunManifest make_manifest(const ExperimentPlan& plan, std::vector<std::string> output_paths) {
  RunManifest m;
  m.plan = plan;
  m.tool_version = kVersion;
  m.output_paths = std::move(output_paths);
  const std::time_t now = std::time(nullptr);
  std::tm tm_utc{};
  gmtime_r(&now, &tm_utc);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm_utc);
  m.timestamp_utc = buf;
  return m;
}

std::string format_full(double value) {
  char buf[64];
  const auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  if (ec != std::errc{}) return "nan";
  return std::string(buf, ptr);
}

std::string reports_to_csv(const std::vector<MetricsReport>& reports) {
  std::string out =
      "scheme_id,lambda,beta_db,g_used_db,ps_analytic,ps_empirical,coverage_prob,"
      "ase,avg_sum_rate,coverage_stderr,ase_stderr,rate_stderr,n_realizations,seed\n";
  for (const MetricsReport& r : reports) {
    out += r.scheme_id;
    out += ',';
    out += format_full(r.lambda);
    out += ',';
    out += format_full(r.beta_db);
    out += ',';
    if (r.g_used_linear > 0.0) out += format_full(linear_to_db(r.g_used_linear));
    out += ',';
    out += format_full(r.ps_analytic);
    out += ',';
    out += format_full(r.empirical_ps);
    out += ',';
    out += format_full(r.coverage_prob);
    out += ',';
    out += format_full(r.ase);
    out += ',';
    out += format_full(r.avg_sum_rate);
    out += ',';
    out += format_full(r.coverage_stderr);
    out += ',';
    out += format_full(r.ase_stderr);
    out += ',';
    out += format_full(r.rate_stderr);
    out += ',';
    out += std::to_string(r.n_realizations);
    out += ',';
    out += std::to_string(r.seed);
    out += '\n';
  }
  return out;
}

std::string reports_to_json(const std::vector<MetricsReport>& reports,
                            const RunManifest& manifest) {
  json j;
  j["manifest"] = {{"plan", plan_to_json(manifest.plan)},
                   {"tool_version", manifest.tool_version},
                   {"timestamp_utc", manifest.timestamp_utc},
                   {"output_paths", manifest.output_paths}};
  json rows = json::array();
  for (const MetricsReport& r : reports) rows.push_back(report_to_json(r));
  j["reports"] = rows;
  return j.dump(2) + "\n";
}

JsonExport parse_reports_json(const std::string& text) {
  const json j = json::parse(text);
  JsonExport out;
  const json& m = j.at("manifest");
  out.manifest.plan = plan_from_json(m.at("plan"));
  out.manifest.tool_version = m.at("tool_version").get<std::string>();
  out.manifest.timestamp_utc = m.at("timestamp_utc").get<std::string>();
  out.manifest.output_paths = m.at("output_paths").get<std::vector<std::string>>();
  for (const json& r : j.at("reports")) out.reports.push_back(report_from_json(r));
  return out;
}

void export_reports(const std::vector<MetricsReport>& reports, ExportFormat format,
                    const std::string& path, const RunManifest& manifest) {
  if (reports.empty()) throw std::invalid_argument("export_reports: no reports");
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("export_reports: cannot write '" + path + "'");
  if (format == ExportFormat::csv)
    out << reports_to_csv(reports);
  else
    out << reports_to_json(reports, manifest);
  out.flush();
  if (!out) throw std::runtime_error("export_reports: write failed for '" + path + "'");
}

}  // namespace d2d
