#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "urnwalk/exact/recurrence.hpp"
#include "urnwalk/exact/series.hpp"
#include "urnwalk/montecarlo.hpp"
#include "urnwalk/numeric.hpp"

// Machine-readable outputs. CSV headers and JSON field names are part of the
// public interface and only change with a major version.
namespace urnwalk::io {

using Json = nlohmann::ordered_json;

/// Exact values render as "p/q" unless decimal digits are requested.
struct Rendering {
  std::optional<int> decimal_digits;
};

std::string render(const ExactRational& q, const Rendering& how);
std::string render(double x, const Rendering& how);

/// Columns n, term, partial_sum.
template <class Scalar>
std::string series_csv(const exact::SeriesTable<Scalar>& table, const Rendering& how);
template <class Scalar>
Json series_json(const exact::SeriesTable<Scalar>& table, const Rendering& how);

/// Columns replica, outcome ("hit"/"censored"), time.
std::string samples_csv(std::span<const mc::HittingSample> samples);

/// Fields replicas, hits, censored, mean, variance, median, q90, q99, seed, cap, pmf.
Json stats_json(const mc::SampleStats& stats, const mc::SimConfig& cfg);

/// Columns time, frequency.
std::string occupancy_csv(const std::map<std::int64_t, double>& freq);
Json occupancy_json(const std::map<std::int64_t, double>& freq);

Json diagnosis_json(const exact::RecurrenceDiagnosis& dx);
/// Columns n, partial_sum, with the summary fields as leading "# key: value" lines.
std::string diagnosis_csv(const exact::RecurrenceDiagnosis& dx);

/// Everything needed to regenerate an output.
struct RunManifest {
  std::vector<std::string> command;  // resolved argv, subcommand first
  Json config;
  std::optional<std::uint64_t> seed;
  std::string version;
  std::string timestamp;  // UTC, ISO 8601
};

Json manifest_json(const RunManifest& m);
/// "# manifest: {...}" line that heads CSV and path outputs.
std::string manifest_comment(const RunManifest& m);
/// Finds a manifest in a CSV/path output (comment line) or a JSON output ("manifest" key).
Json extract_manifest(const std::string& text);

}  // namespace urnwalk::io
