#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "urnwalk/random.hpp"
#include "urnwalk/urn.hpp"
#include "urnwalk/walk.hpp"

namespace urnwalk::mc {

inline constexpr std::int64_t kDefaultCap = 1'000'000;

struct SimConfig {
  std::vector<UrnSpec> dims;
  std::int64_t replicas = 10'000;
  std::int64_t cap = kDefaultCap;  // maximum steps per replica
  std::uint64_t seed = 0;

  static SimConfig uniform(const UrnSpec& urn, std::size_t d, std::int64_t replicas,
                           std::int64_t cap, std::uint64_t seed);
  /// Throws std::invalid_argument on replicas < 1, cap < 2 or invalid urns.
  void validate() const;
};

struct HittingOutcome {
  bool hit = false;
  std::int64_t time = 0;  // hit time, or the cap when censored

  friend bool operator==(const HittingOutcome&, const HittingOutcome&) = default;
};

struct HittingSample {
  std::int64_t replica = 0;
  HittingOutcome outcome;

  friend bool operator==(const HittingSample&, const HittingSample&) = default;
};

struct SampleStats {
  std::int64_t replicas = 0;
  std::int64_t hits = 0;
  std::int64_t censored = 0;
  // Over hit times only; NaN when there are no hits.
  double mean = 0;
  double variance = 0;  // unbiased, NaN with fewer than two hits
  double median = 0;    // nearest-rank quantiles
  double q90 = 0;
  double q99 = 0;
  /// Hit time -> count / replicas, comparable with P(H_0 = t).
  std::map<std::int64_t, double> pmf;
};

/// Single-walk start used by the engine: the one-white Friedman urn in one
/// dimension starts after its forced first white draw (W=1, B=0, time 1) and
/// tests U < (B+1)/(W+B+1) thereafter; every other configuration starts at time 0.
bool uses_forced_first_draw(std::span<const UrnSpec> dims);

/// First time every coordinate is back at 0, censored at `cap`.
template <UniformSource Source>
HittingOutcome simulate_hitting_time(std::span<const UrnSpec> dims, std::int64_t cap,
                                     Source& uniform) {
  WalkState walk = new_walk(dims);
  if (uses_forced_first_draw(dims)) {
    const Color first[] = {Color::White};
    walk = apply_step(walk, first);
  }
  while (walk.time < cap) {
    advance(walk, uniform);
    if (walk.at_origin()) return {true, walk.time};
  }
  return {false, cap};
}

struct ReplicationResult {
  std::vector<HittingSample> samples;  // ordered by replica index
  SampleStats stats;
};

/// Replica r draws from ReplicaStream(cfg.seed, r). Output does not depend on `workers`.
ReplicationResult run_replications(const SimConfig& cfg, unsigned workers = 1);

SampleStats summarize(std::span<const HittingSample> samples);

/// Fraction of replicas at the origin at each even time 2, 4, ..., horizon
/// (occupancy, not first returns). All replicas start at time 0.
std::map<std::int64_t, double> empirical_return_frequency(const SimConfig& cfg,
                                                          std::int64_t horizon,
                                                          unsigned workers = 1);

}  // namespace urnwalk::mc
