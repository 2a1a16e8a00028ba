#include "urnwalk/cli.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "urnwalk/exact/combinatorics.hpp"
#include "urnwalk/exact/recurrence.hpp"
#include "urnwalk/exact/series.hpp"
#include "urnwalk/formats.hpp"
#include "urnwalk/montecarlo.hpp"
#include "urnwalk/walk.hpp"

namespace urnwalk::cli {

namespace {

using io::Json;

struct Options {
  std::string scheme = "polya";
  std::int64_t white = 1;
  std::optional<std::int64_t> blue;  // 0 for friedman, 1 otherwise
  std::size_t dims = 1;
  std::string p = "1/2";
  std::optional<std::int64_t> max_n;
  std::string mode = "exact";
  std::string format = "csv";
  std::optional<int> decimal_digits;
  std::string kind = "return_series";
  std::int64_t replicas = 10'000;
  std::int64_t cap = mc::kDefaultCap;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;
  std::int64_t horizon = 10;
  std::int64_t reference = 100;
  std::string samples_out;
  std::string in = "-";
  bool inverse = false;
  std::string out;
};

struct Invalid : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string utc_timestamp() {
  const auto now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

UrnSpec resolve_urn(const Options& o) {
  const SchemeKind kind = parse_scheme(o.scheme);
  UrnScheme scheme = UrnScheme::polya();
  switch (kind) {
    case SchemeKind::PolyaEggenberger: break;
    case SchemeKind::Friedman: scheme = UrnScheme::friedman(); break;
    case SchemeKind::Bernoulli: {
      const ExactRational p = parse_rational(o.p);
      const auto& num = boost::multiprecision::numerator(p);
      const auto& den = boost::multiprecision::denominator(p);
      if (num < 0 || num > den || den > std::numeric_limits<std::int64_t>::max())
        throw Invalid("--p must be a rational in [0,1], got '" + o.p + "'");
      scheme = UrnScheme::bernoulli(num.convert_to<std::int64_t>(), den.convert_to<std::int64_t>());
      break;
    }
  }
  UrnSpec urn{scheme, o.white, *o.blue};
  validate(urn);
  return urn;
}

std::vector<std::string> urn_args(const Options& o) {
  std::vector<std::string> args{"--scheme", o.scheme, "--white", std::to_string(o.white),
                                "--blue", std::to_string(*o.blue), "--dims", std::to_string(o.dims)};
  if (o.scheme == "bernoulli") {
    args.push_back("--p");
    args.push_back(o.p);
  }
  return args;
}

Json urn_config(const Options& o) {
  Json j;
  j["scheme"] = o.scheme;
  j["white"] = o.white;
  j["blue"] = *o.blue;
  j["dims"] = o.dims;
  if (o.scheme == "bernoulli") j["p"] = o.p;
  return j;
}

void append(std::vector<std::string>& v, std::initializer_list<std::string> more) {
  v.insert(v.end(), more.begin(), more.end());
}

void emit(const Options& o, const std::string& text, std::ostream& out) {
  if (o.out.empty()) {
    out << text;
    return;
  }
  std::ofstream file(o.out, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + o.out + "' for writing");
  file << text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path + "' for writing");
  file << text;
}

std::string with_manifest(const Options& o, const io::RunManifest& m, const std::string& csv,
                          Json body) {
  if (o.format == "csv") return io::manifest_comment(m) + csv;
  Json doc;
  doc["manifest"] = io::manifest_json(m);
  for (auto& [key, value] : body.items()) doc[key] = value;
  return doc.dump(2) + "\n";
}

void check_format(const Options& o) {
  if (o.format != "csv" && o.format != "json")
    throw Invalid("--format must be csv or json, got '" + o.format + "'");
}

// exact return-prob | hitting-pmf | eulerian | series
std::string run_exact(const std::string& which, Options o) {
  check_format(o);
  if (o.mode != "exact" && o.mode != "log")
    throw Invalid("--mode must be exact or log, got '" + o.mode + "'");
  const std::int64_t max_n = o.max_n.value_or(10);
  if (max_n < 1) throw Invalid("--max-n must be at least 1");
  if (o.decimal_digits && *o.decimal_digits < 0) throw Invalid("--decimal-digits must be nonnegative");
  const io::Rendering how{o.decimal_digits};

  io::RunManifest m{{"exact", which}, {}, std::nullopt, std::string(kVersion), utc_timestamp()};
  m.config["subcommand"] = "exact " + which;

  if (which == "eulerian") {
    append(m.command, {"--max-n", std::to_string(max_n), "--mode", o.mode, "--format", o.format});
    m.config["max_n"] = max_n;
    m.config["mode"] = o.mode;
    std::string csv = "k,term,partial_sum\n";
    Json rows = Json::array();
    auto add = [&](std::size_t k, const std::string& term, const std::string& sum) {
      csv += std::to_string(k) + "," + term + "," + sum + "\n";
      rows.push_back({{"k", k}, {"term", term}, {"partial_sum", sum}});
    };
    if (o.mode == "exact") {
      const auto row = exact::eulerian_row(max_n);
      BigCount sum = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        sum += row[k];
        add(k, row[k].str(), sum.str());
      }
    } else {
      const auto row = exact::eulerian_row_normalized(max_n);
      double sum = 0;
      for (std::size_t k = 0; k < row.size(); ++k) {
        sum += row[k];
        add(k, to_decimal_string(row[k]), to_decimal_string(sum));
      }
    }
    Json body;
    body["n"] = max_n;
    body["mode"] = o.mode;
    body["rows"] = std::move(rows);
    return with_manifest(o, m, csv, std::move(body));
  }

  const UrnSpec urn = resolve_urn(o);
  if (o.dims < 1) throw Invalid("--dims must be at least 1");
  const exact::SeriesKind kind = which == "return-prob"   ? exact::SeriesKind::ReturnSeries
                                 : which == "hitting-pmf" ? exact::SeriesKind::HittingMass
                                                          : exact::parse_series_kind(o.kind);
  if (kind != exact::SeriesKind::ReturnSeries && o.dims != 1)
    throw Invalid(std::string(exact::to_string(kind)) + " needs --dims 1");

  const auto urn_flags = urn_args(o);
  m.command.insert(m.command.end(), urn_flags.begin(), urn_flags.end());
  append(m.command, {"--max-n", std::to_string(max_n), "--mode", o.mode, "--format", o.format});
  if (which == "series") append(m.command, {"--kind", std::string(exact::to_string(kind))});
  if (o.decimal_digits) append(m.command, {"--decimal-digits", std::to_string(*o.decimal_digits)});
  m.config.update(urn_config(o));
  m.config["kind"] = std::string(exact::to_string(kind));
  m.config["max_n"] = max_n;
  m.config["mode"] = o.mode;
  if (o.decimal_digits) m.config["decimal_digits"] = *o.decimal_digits;

  const std::vector<UrnSpec> dims(o.dims, urn);
  if (o.mode == "exact") {
    const auto table = exact::series_partial_sums<ExactRational>(kind, dims, max_n);
    return with_manifest(o, m, io::series_csv(table, how), io::series_json(table, how));
  }
  const auto table = exact::series_partial_sums<double>(kind, dims, max_n);
  return with_manifest(o, m, io::series_csv(table, how), io::series_json(table, how));
}

// simulate hitting | occupancy
std::string run_simulate(const std::string& which, const Options& o) {
  check_format(o);
  if (!o.seed) throw Invalid("simulate requires --seed (no implicit entropy)");
  const UrnSpec urn = resolve_urn(o);
  if (o.dims < 1) throw Invalid("--dims must be at least 1");
  const auto cfg = mc::SimConfig::uniform(urn, o.dims, o.replicas, o.cap, *o.seed);
  cfg.validate();
  if (which == "occupancy" && (o.horizon < 1 || o.horizon > o.cap))
    throw Invalid("--horizon must lie in [1, cap]");

  io::RunManifest m{{"simulate", which}, {}, *o.seed, std::string(kVersion), utc_timestamp()};
  const auto urn_flags = urn_args(o);
  m.command.insert(m.command.end(), urn_flags.begin(), urn_flags.end());
  append(m.command, {"--replicas", std::to_string(o.replicas), "--cap", std::to_string(o.cap),
                     "--seed", std::to_string(*o.seed), "--format", o.format});
  m.config["subcommand"] = "simulate " + which;
  m.config.update(urn_config(o));
  m.config["replicas"] = o.replicas;
  m.config["cap"] = o.cap;
  m.config["seed"] = *o.seed;

  if (which == "hitting") {
    const auto result = mc::run_replications(cfg, o.workers);
    const std::string samples = io::samples_csv(result.samples);
    if (!o.samples_out.empty()) write_file(o.samples_out, io::manifest_comment(m) + samples);
    return with_manifest(o, m, samples, io::stats_json(result.stats, cfg));
  }
  append(m.command, {"--horizon", std::to_string(o.horizon)});
  m.config["horizon"] = o.horizon;
  const auto freq = mc::empirical_return_frequency(cfg, o.horizon, o.workers);
  return with_manifest(o, m, io::occupancy_csv(freq), io::occupancy_json(freq));
}

// diagnose recurrence
std::string run_diagnose(const Options& o) {
  check_format(o);
  const UrnSpec urn = resolve_urn(o);
  if (o.dims < 1) throw Invalid("--dims must be at least 1");
  const std::int64_t horizon = o.max_n.value_or(10'000);
  if (o.reference < 1 || horizon <= o.reference)
    throw Invalid("need 1 <= --reference < --max-n");

  io::RunManifest m{{"diagnose", "recurrence"}, {}, std::nullopt, std::string(kVersion), utc_timestamp()};
  const auto urn_flags = urn_args(o);
  m.command.insert(m.command.end(), urn_flags.begin(), urn_flags.end());
  append(m.command, {"--max-n", std::to_string(horizon), "--reference", std::to_string(o.reference),
                     "--format", o.format});
  m.config["subcommand"] = "diagnose recurrence";
  m.config.update(urn_config(o));
  m.config["max_n"] = horizon;
  m.config["reference"] = o.reference;

  const auto dx = exact::diagnose_recurrence(urn, o.dims, horizon, o.reference);
  return with_manifest(o, m, io::diagnosis_csv(dx), io::diagnosis_json(dx));
}

// transform rotate2d
std::string run_transform(const Options& o) {
  io::RunManifest m{{"transform", "rotate2d", "--in", o.in}, {}, std::nullopt,
                    std::string(kVersion), utc_timestamp()};
  if (o.inverse) m.command.push_back("--inverse");
  m.config["subcommand"] = "transform rotate2d";
  m.config["in"] = o.in;
  m.config["inverse"] = o.inverse;

  PathFile file;
  if (o.in == "-") {
    file = parse_path(std::cin);
  } else {
    std::ifstream in(o.in);
    if (!in) throw Invalid("cannot open path file '" + o.in + "'");
    file = parse_path(in);
  }
  std::vector<Point2> mapped;
  try {
    mapped = o.inverse ? map_from_simple_2d(file.points) : map_to_simple_2d(file.points);
  } catch (const InvalidPath& e) {
    const std::string what = e.what();
    throw Invalid("line " + std::to_string(file.lines[e.index]) + ": " +
                  what.substr(what.find(": ") + 2));
  }
  return io::manifest_comment(m) + format_path(mapped);
}

void add_urn_flags(CLI::App* sub, Options& o) {
  sub->add_option("--scheme", o.scheme, "Urn scheme")
      ->check(CLI::IsMember({"bernoulli", "polya", "friedman"}))
      ->capture_default_str();
  sub->add_option("-w,--white", o.white, "Initial white balls")->capture_default_str();
  sub->add_option("-b,--blue", o.blue, "Initial blue balls [default: 0 for friedman, else 1]");
  sub->add_option("-d,--dims", o.dims, "Dimensions")->capture_default_str();
  sub->add_option("--p", o.p, "White probability of the bernoulli scheme, as p/q")
      ->capture_default_str();
}

void add_output_flags(CLI::App* sub, Options& o) {
  sub->add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
  sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
}

int run_parsed(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Urn-driven random walks: exact return and hitting probabilities, "
               "Monte Carlo hitting times, recurrence diagnostics",
               "urnwalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  auto* exact_cmd = app.add_subcommand("exact", "Exact tables")->require_subcommand(1);
  std::vector<std::pair<std::string, CLI::App*>> leaves;
  for (const char* name : {"return-prob", "hitting-pmf", "eulerian", "series"}) {
    auto* sub = exact_cmd->add_subcommand(name);
    add_urn_flags(sub, o);
    add_output_flags(sub, o);
    sub->add_option("--max-n", o.max_n, "Number of rows (eulerian: row index)");
    sub->add_option("--mode", o.mode, "exact rationals or log-space floats")
        ->check(CLI::IsMember({"exact", "log"}))
        ->capture_default_str();
    sub->add_option("--decimal-digits", o.decimal_digits, "Render exact values as decimals");
    if (std::string_view(name) == "series")
      sub->add_option("--kind", o.kind, "return_series, expected_hitting or hitting_mass")
          ->capture_default_str();
    leaves.emplace_back(std::string("exact ") + name, sub);
  }
  exact_cmd->get_subcommand("return-prob")->description("P(X_2n = 0) with partial sums");
  exact_cmd->get_subcommand("hitting-pmf")->description("P(H_0 = 2n) with partial sums");
  exact_cmd->get_subcommand("eulerian")->description("Eulerian row A(n, k)");
  exact_cmd->get_subcommand("series")->description("Recurrence series partial sums");

  auto* sim_cmd = app.add_subcommand("simulate", "Monte Carlo replications")->require_subcommand(1);
  for (const char* name : {"hitting", "occupancy"}) {
    auto* sub = sim_cmd->add_subcommand(name);
    add_urn_flags(sub, o);
    add_output_flags(sub, o);
    sub->add_option("--replicas", o.replicas, "Number of replicas")->capture_default_str();
    sub->add_option("--cap", o.cap, "Maximum steps per replica")->capture_default_str();
    sub->add_option("--seed", o.seed, "Master seed (required)");
    sub->add_option("--workers", o.workers, "Worker threads; never changes output")
        ->capture_default_str();
    if (std::string_view(name) == "hitting")
      sub->add_option("--samples-out", o.samples_out, "Also write per-replica samples CSV");
    else
      sub->add_option("--horizon", o.horizon, "Last time checked")->capture_default_str();
    leaves.emplace_back(std::string("simulate ") + name, sub);
  }
  sim_cmd->get_subcommand("hitting")->description("First return times to the origin");
  sim_cmd->get_subcommand("occupancy")->description("Fraction of replicas at the origin per time");

  auto* diag_cmd = app.add_subcommand("diagnose", "Recurrence diagnostics")->require_subcommand(1);
  {
    auto* sub = diag_cmd->add_subcommand("recurrence", "Return-series divergence or convergence");
    add_urn_flags(sub, o);
    add_output_flags(sub, o);
    sub->add_option("--max-n", o.max_n, "Series horizon (default 10000)");
    sub->add_option("--reference", o.reference, "Reference index for increments")
        ->capture_default_str();
    leaves.emplace_back("diagnose recurrence", sub);
  }

  auto* tr_cmd = app.add_subcommand("transform", "Path transforms")->require_subcommand(1);
  {
    auto* sub = tr_cmd->add_subcommand("rotate2d", "Diagonal walk path to simple walk path");
    sub->add_option("--in", o.in, "Path file, '-' for stdin")->capture_default_str();
    sub->add_flag("--inverse", o.inverse, "Map a simple walk path back to the diagonal walk");
    sub->add_option("--out", o.out, "Write output to PATH instead of stdout");
    leaves.emplace_back("transform rotate2d", sub);
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  if (!o.blue) o.blue = o.scheme == "friedman" ? 0 : 1;

  const auto selected = std::find_if(leaves.begin(), leaves.end(),
                                     [](const auto& leaf) { return leaf.second->parsed(); });
  const std::string& name = selected->first;
  std::string text;
  if (name.starts_with("exact "))
    text = run_exact(name.substr(6), o);
  else if (name.starts_with("simulate "))
    text = run_simulate(name.substr(9), o);
  else if (name == "diagnose recurrence")
    text = run_diagnose(o);
  else
    text = run_transform(o);
  emit(o, text, out);
  return 0;
}

std::vector<std::string> command_from_manifest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Invalid("cannot open manifest source '" + path + "'");
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  Json manifest;
  try {
    manifest = io::extract_manifest(text);
  } catch (const nlohmann::json::exception& e) {
    throw Invalid("'" + path + "': malformed manifest: " + e.what());
  }
  if (!manifest.contains("command") || !manifest["command"].is_array())
    throw Invalid("'" + path + "': manifest has no command");
  return manifest["command"].get<std::vector<std::string>>();
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    if (!args.empty() && args.front() == "--from-manifest") {
      if (args.size() < 2) throw Invalid("--from-manifest needs a PATH");
      auto command = command_from_manifest(args[1]);
      if (!command.empty() && command.front() == "--from-manifest")
        throw Invalid("manifest command cannot itself be --from-manifest");
      command.insert(command.end(), args.begin() + 2, args.end());
      return run_parsed(command, out, err);
    }
    return run_parsed(args, out, err);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace urnwalk::cli
