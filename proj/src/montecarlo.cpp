#include "urnwalk/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <thread>

namespace urnwalk::mc {

SimConfig SimConfig::uniform(const UrnSpec& urn, std::size_t d, std::int64_t replicas,
                             std::int64_t cap, std::uint64_t seed) {
  return SimConfig{std::vector<UrnSpec>(d, urn), replicas, cap, seed};
}

void SimConfig::validate() const {
  if (dims.empty()) throw std::invalid_argument("simulation needs at least one dimension");
  for (std::size_t i = 0; i < dims.size(); ++i) {
    try {
      urnwalk::validate(dims[i]);
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("dimension " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (replicas < 1) throw std::invalid_argument("replicas must be at least 1");
  if (cap < 2) throw std::invalid_argument("cap must be at least 2");
}

bool uses_forced_first_draw(std::span<const UrnSpec> dims) {
  return dims.size() == 1 && dims[0].scheme.kind() == SchemeKind::Friedman &&
         dims[0].white == 1 && dims[0].blue == 0;
}

namespace {

unsigned effective_workers(std::int64_t replicas, unsigned workers) {
  return std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(
                                                      std::min<std::int64_t>(replicas, 1024))));
}

// Runs body(worker, r) for every replica; replica r goes to worker r % workers.
template <class Body>
void for_each_replica(std::int64_t replicas, unsigned workers, Body&& body) {
  workers = effective_workers(replicas, workers);
  if (workers == 1) {
    for (std::int64_t r = 0; r < replicas; ++r) body(0u, r);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::int64_t r = w; r < replicas; r += workers) body(w, r);
    });
}

double nearest_rank(const std::vector<std::int64_t>& sorted, double q) {
  const auto n = static_cast<double>(sorted.size());
  auto rank = static_cast<std::size_t>(std::ceil(q * n));
  rank = std::clamp<std::size_t>(rank, 1, sorted.size());
  return static_cast<double>(sorted[rank - 1]);
}

}  // namespace

ReplicationResult run_replications(const SimConfig& cfg, unsigned workers) {
  cfg.validate();
  ReplicationResult result;
  result.samples.resize(static_cast<std::size_t>(cfg.replicas));
  for_each_replica(cfg.replicas, workers, [&](unsigned, std::int64_t r) {
    ReplicaStream stream(cfg.seed, static_cast<std::uint64_t>(r));
    result.samples[static_cast<std::size_t>(r)] = {r, simulate_hitting_time(cfg.dims, cfg.cap, stream)};
  });
  result.stats = summarize(result.samples);
  return result;
}

SampleStats summarize(std::span<const HittingSample> samples) {
  SampleStats s;
  s.replicas = static_cast<std::int64_t>(samples.size());
  std::vector<std::int64_t> times;
  times.reserve(samples.size());
  std::map<std::int64_t, std::int64_t> counts;
  for (const auto& sample : samples) {
    if (!sample.outcome.hit) continue;
    times.push_back(sample.outcome.time);
    ++counts[sample.outcome.time];
  }
  s.hits = static_cast<std::int64_t>(times.size());
  s.censored = s.replicas - s.hits;
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (times.empty()) {
    s.mean = s.variance = s.median = s.q90 = s.q99 = nan;
    return s;
  }
  double sum = 0;
  for (auto t : times) sum += static_cast<double>(t);
  s.mean = sum / static_cast<double>(times.size());
  if (times.size() > 1) {
    double ss = 0;
    for (auto t : times) ss += (static_cast<double>(t) - s.mean) * (static_cast<double>(t) - s.mean);
    s.variance = ss / static_cast<double>(times.size() - 1);
  } else {
    s.variance = nan;
  }
  std::sort(times.begin(), times.end());
  s.median = nearest_rank(times, 0.5);
  s.q90 = nearest_rank(times, 0.9);
  s.q99 = nearest_rank(times, 0.99);
  for (const auto& [t, c] : counts)
    s.pmf[t] = static_cast<double>(c) / static_cast<double>(s.replicas);
  return s;
}

std::map<std::int64_t, double> empirical_return_frequency(const SimConfig& cfg,
                                                          std::int64_t horizon,
                                                          unsigned workers) {
  cfg.validate();
  if (horizon < 1 || horizon > cfg.cap)
    throw std::invalid_argument("horizon must lie in [1, cap]");
  const unsigned pool = effective_workers(cfg.replicas, workers);
  const auto slots = static_cast<std::size_t>(horizon / 2 + 1);
  std::vector<std::vector<std::int64_t>> at_origin(pool, std::vector<std::int64_t>(slots, 0));
  for_each_replica(cfg.replicas, pool, [&](unsigned w, std::int64_t r) {
    ReplicaStream stream(cfg.seed, static_cast<std::uint64_t>(r));
    WalkState walk = new_walk(cfg.dims);
    while (walk.time < horizon) {
      advance(walk, stream);
      if (walk.time % 2 == 0 && walk.at_origin())
        ++at_origin[w][static_cast<std::size_t>(walk.time / 2)];
    }
  });
  std::map<std::int64_t, double> freq;
  for (std::size_t i = 1; i < slots; ++i) {
    std::int64_t total = 0;
    for (const auto& counts : at_origin) total += counts[i];
    freq[2 * static_cast<std::int64_t>(i)] =
        static_cast<double>(total) / static_cast<double>(cfg.replicas);
  }
  return freq;
}

}  // namespace urnwalk::mc
