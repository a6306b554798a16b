#pragma once

#include <string>
#include <utility>
#include <vector>

#include "d2d/harness.hpp"

namespace d2d {

struct RunManifest {
  ExperimentPlan plan;
  std::string tool_version;
  std::string timestamp_utc;  // ISO 8601, e.g. 2026-08-08T12:00:00Z
  std::vector<std::string> output_paths;

  bool operator==(const RunManifest&) const = default;
};

enum class ExportFormat { csv, json };

using ConfigOverrides = std::vector<std::pair<std::string, std::string>>;

// Flat key = value configuration with dotted section names and '#' comments.
// Precedence: built-in defaults, then file values, then overrides. Throws
// std::invalid_argument naming the offending key and the expected unit.
ExperimentPlan parse_config_text(const std::string& text,
                                 const ConfigOverrides& overrides = {});
// Empty path applies defaults plus overrides only.
ExperimentPlan parse_config_file(const std::string& path,
                                 const ConfigOverrides& overrides = {});

// Stamps the current UTC time and library version.
RunManifest make_manifest(const ExperimentPlan& plan,
                          std::vector<std::string> output_paths);

// Full-precision decimal (17 significant digits), locale-independent.
std::string format_full(double value);

// CSV with one row per report. Column order is part of the public contract:
// scheme_id,lambda,beta_db,g_used_db,ps_analytic,ps_empirical,coverage_prob,
// ase,avg_sum_rate,coverage_stderr,ase_stderr,rate_stderr,n_realizations,seed.
// g_used_db is empty when the scheme applies no SIR threshold (g = 0).
std::string reports_to_csv(const std::vector<MetricsReport>& reports);

std::string reports_to_json(const std::vector<MetricsReport>& reports,
                            const RunManifest& manifest);

struct JsonExport {
  RunManifest manifest;
  std::vector<MetricsReport> reports;
};

JsonExport parse_reports_json(const std::string& text);

// Writes the chosen format to path (trailing newline included). The manifest
// is embedded in JSON exports and ignored for CSV.
void export_reports(const std::vector<MetricsReport>& reports, ExportFormat format,
                    const std::string& path, const RunManifest& manifest);

}  // namespace d2d
