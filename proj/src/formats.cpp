#include "urnwalk/formats.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace urnwalk::io {

namespace {
constexpr std::string_view kManifestPrefix = "# manifest: ";

Json number_or_null(double x) {
  if (std::isnan(x) || std::isinf(x)) return nullptr;
  return x;
}

Json urn_json(const UrnSpec& urn) {
  Json j;
  j["scheme"] = describe(urn.scheme);
  j["white"] = urn.white;
  j["blue"] = urn.blue;
  return j;
}
}  // namespace

std::string render(const ExactRational& q, const Rendering& how) {
  if (how.decimal_digits) return to_decimal_string(q, *how.decimal_digits);
  return to_fraction_string(q);
}

std::string render(double x, const Rendering&) { return to_decimal_string(x); }

template <class Scalar>
std::string series_csv(const exact::SeriesTable<Scalar>& table, const Rendering& how) {
  std::string out = "n,term,partial_sum\n";
  for (const auto& row : table.rows)
    out += std::to_string(row.n) + "," + render(row.term, how) + "," + render(row.partial_sum, how) + "\n";
  return out;
}

template <class Scalar>
Json series_json(const exact::SeriesTable<Scalar>& table, const Rendering& how) {
  Json j;
  j["kind"] = std::string(exact::to_string(table.kind));
  j["mode"] = std::is_same_v<Scalar, ExactRational> ? "exact" : "log";
  j["dims"] = Json::array();
  for (const auto& urn : table.dims) j["dims"].push_back(urn_json(urn));
  j["rows"] = Json::array();
  for (const auto& row : table.rows)
    j["rows"].push_back(
        {{"n", row.n}, {"term", render(row.term, how)}, {"partial_sum", render(row.partial_sum, how)}});
  return j;
}

template std::string series_csv<ExactRational>(const exact::SeriesTable<ExactRational>&,
                                               const Rendering&);
template std::string series_csv<double>(const exact::SeriesTable<double>&, const Rendering&);
template Json series_json<ExactRational>(const exact::SeriesTable<ExactRational>&,
                                         const Rendering&);
template Json series_json<double>(const exact::SeriesTable<double>&, const Rendering&);

std::string samples_csv(std::span<const mc::HittingSample> samples) {
  std::string out = "replica,outcome,time\n";
  for (const auto& s : samples)
    out += std::to_string(s.replica) + (s.outcome.hit ? ",hit," : ",censored,") +
           std::to_string(s.outcome.time) + "\n";
  return out;
}

Json stats_json(const mc::SampleStats& stats, const mc::SimConfig& cfg) {
  Json j;
  j["replicas"] = stats.replicas;
  j["hits"] = stats.hits;
  j["censored"] = stats.censored;
  j["mean"] = number_or_null(stats.mean);
  j["variance"] = number_or_null(stats.variance);
  j["median"] = number_or_null(stats.median);
  j["q90"] = number_or_null(stats.q90);
  j["q99"] = number_or_null(stats.q99);
  j["seed"] = cfg.seed;
  j["cap"] = cfg.cap;
  Json pmf = Json::object();
  for (const auto& [t, p] : stats.pmf) pmf[std::to_string(t)] = p;
  j["pmf"] = std::move(pmf);
  return j;
}

std::string occupancy_csv(const std::map<std::int64_t, double>& freq) {
  std::string out = "time,frequency\n";
  for (const auto& [t, f] : freq) out += std::to_string(t) + "," + to_decimal_string(f) + "\n";
  return out;
}

Json occupancy_json(const std::map<std::int64_t, double>& freq) {
  Json rows = Json::array();
  for (const auto& [t, f] : freq) rows.push_back({{"time", t}, {"frequency", f}});
  Json j;
  j["occupancy"] = std::move(rows);
  return j;
}

Json diagnosis_json(const exact::RecurrenceDiagnosis& dx) {
  Json j;
  j["urn"] = urn_json(dx.urn);
  j["dims"] = dx.dims;
  j["classification"] = dx.classification;
  j["horizon"] = dx.horizon;
  j["reference"] = dx.reference;
  j["tail_exponent"] = dx.tail_exponent;
  j["diverges"] = dx.diverges;
  j["increment"] = dx.increment;
  j["threshold"] = dx.threshold;
  j["envelope_constant"] = number_or_null(dx.diverges ? std::nan("") : dx.envelope_constant);
  j["tail_bound"] = number_or_null(dx.tail_bound);
  j["signature_holds"] = dx.signature_holds;
  j["checkpoints"] = Json::array();
  for (const auto& c : dx.checkpoints)
    j["checkpoints"].push_back({{"n", c.n}, {"partial_sum", c.partial_sum}});
  if (dx.hitting_mass) {
    j["hitting_mass"] = *dx.hitting_mass;
    j["hitting_horizon"] = dx.hitting_horizon;
  } else {
    j["hitting_mass"] = nullptr;
  }
  return j;
}

std::string diagnosis_csv(const exact::RecurrenceDiagnosis& dx) {
  const Json j = diagnosis_json(dx);
  std::string out;
  for (const auto& [key, value] : j.items()) {
    if (key == "checkpoints") continue;
    out += "# " + key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) + "\n";
  }
  out += "n,partial_sum\n";
  for (const auto& c : dx.checkpoints)
    out += std::to_string(c.n) + "," + to_decimal_string(c.partial_sum) + "\n";
  return out;
}

Json manifest_json(const RunManifest& m) {
  Json j;
  j["tool"] = "urnwalk";
  j["version"] = m.version;
  j["timestamp"] = m.timestamp;
  j["command"] = m.command;
  j["config"] = m.config;
  j["seed"] = m.seed ? Json(*m.seed) : Json(nullptr);
  return j;
}

std::string manifest_comment(const RunManifest& m) {
  return std::string(kManifestPrefix) + manifest_json(m).dump() + "\n";
}

Json extract_manifest(const std::string& text) {
  if (text.starts_with(kManifestPrefix)) {
    const auto end = text.find('\n');
    return Json::parse(text.substr(kManifestPrefix.size(), end - kManifestPrefix.size()));
  }
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object())
    throw std::invalid_argument("no manifest found (expected a '# manifest:' line or a JSON object)");
  if (j.contains("manifest")) return j["manifest"];
  if (j.contains("command")) return j;
  throw std::invalid_argument("JSON document carries no manifest");
}

}  // namespace urnwalk::io
