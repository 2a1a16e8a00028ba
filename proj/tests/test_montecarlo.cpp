#include <doctest.h>

#include <cmath>
#include <vector>

#include "urnwalk/montecarlo.hpp"

using namespace urnwalk;
using namespace urnwalk::mc;

namespace {

UrnSpec polya(std::int64_t w, std::int64_t b) { return {UrnScheme::polya(), w, b}; }
UrnSpec friedman(std::int64_t w, std::int64_t b) { return {UrnScheme::friedman(), w, b}; }

bool within_three_se(double observed, double p, std::int64_t replicas) {
  return std::abs(observed - p) <= 3 * std::sqrt(p * (1 - p) / static_cast<double>(replicas));
}

}  // namespace

TEST_CASE("open unit variates") {
  CHECK(to_open_unit(0) > 0.0);
  CHECK(to_open_unit(~std::uint64_t{0}) < 1.0);
  CHECK(to_open_unit(~std::uint64_t{0}) == 1.0 - 0x1.0p-53);
  CHECK(to_open_unit(0) == 0x1.0p-53);
  ReplicaStream a(5, 0), b(5, 1), c(5, 0);
  int same = 0;
  for (int i = 0; i < 100; ++i) {
    const double x = a(), y = b();
    REQUIRE(x == c());
    same += x == y;
  }
  CHECK(same == 0);
}

TEST_CASE("config validation") {
  CHECK_NOTHROW(SimConfig::uniform(polya(1, 1), 2, 1, 2, 0).validate());
  CHECK_THROWS_AS(SimConfig::uniform(polya(1, 1), 1, 0, 10, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SimConfig::uniform(polya(1, 1), 1, 10, 1, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(SimConfig::uniform(polya(1, 0), 1, 10, 10, 0).validate(), std::invalid_argument);
  CHECK_THROWS_AS(run_replications(SimConfig::uniform(polya(1, 1), 1, 0, 10, 0)), std::invalid_argument);
}

TEST_CASE("forced first draw only for the one-white Friedman walk") {
  const std::vector<UrnSpec> f{friedman(1, 0)};
  const std::vector<UrnSpec> f2{friedman(1, 0), friedman(1, 0)};
  const std::vector<UrnSpec> g{friedman(2, 1)};
  const std::vector<UrnSpec> p{polya(1, 1)};
  CHECK(uses_forced_first_draw(f));
  CHECK_FALSE(uses_forced_first_draw(f2));
  CHECK_FALSE(uses_forced_first_draw(g));
  CHECK_FALSE(uses_forced_first_draw(p));
}

TEST_CASE("hitting times are even, at least 2 and deterministic") {
  const std::vector<UrnSpec> dims{friedman(1, 0)};
  for (std::uint64_t r = 0; r < 500; ++r) {
    ReplicaStream s1(9, r), s2(9, r);
    const auto a = simulate_hitting_time(dims, 1'000'000, s1);
    const auto b = simulate_hitting_time(dims, 1'000'000, s2);
    REQUIRE(a == b);
    REQUIRE(a.hit);
    REQUIRE(a.time >= 2);
    REQUIRE(a.time % 2 == 0);
  }
}

TEST_CASE("replication statistics") {
  const auto cfg = SimConfig::uniform(polya(1, 1), 1, 4000, 1000, 17);
  const auto result = run_replications(cfg, 3);
  const auto& st = result.stats;
  REQUIRE(result.samples.size() == 4000);
  CHECK(st.hits + st.censored == st.replicas);
  CHECK(st.censored > 0);
  for (std::size_t i = 0; i < result.samples.size(); ++i) {
    const auto& s = result.samples[i];
    REQUIRE(s.replica == static_cast<std::int64_t>(i));
    REQUIRE(s.outcome.time <= cfg.cap);
    if (s.outcome.hit) REQUIRE(s.outcome.time % 2 == 0);
    else REQUIRE(s.outcome.time == cfg.cap);
  }
  double pmf_total = 0;
  for (const auto& [t, p] : st.pmf) {
    CHECK(t % 2 == 0);
    pmf_total += p;
  }
  CHECK(pmf_total == doctest::Approx(static_cast<double>(st.hits) / static_cast<double>(st.replicas)));
  CHECK(st.median <= st.q90);
  CHECK(st.q90 <= st.q99);
  CHECK(within_three_se(st.pmf.at(2), 1.0 / 3, st.replicas));
}

TEST_CASE("summarize uses nearest-rank quantiles over hits") {
  std::vector<HittingSample> samples;
  for (std::int64_t i = 0; i < 10; ++i) samples.push_back({i, {true, 2 * (i + 1)}});
  samples.push_back({10, {false, 100}});
  const auto st = summarize(samples);
  CHECK(st.replicas == 11);
  CHECK(st.hits == 10);
  CHECK(st.censored == 1);
  CHECK(st.mean == doctest::Approx(11.0));
  CHECK(st.variance == doctest::Approx(330.0 / 9.0));
  CHECK(st.median == 10.0);
  CHECK(st.q90 == 18.0);
  CHECK(st.q99 == 20.0);
  CHECK(st.pmf.at(2) == doctest::Approx(1.0 / 11));

  const std::vector<HittingSample> none{{0, {false, 50}}};
  const auto empty = summarize(none);
  CHECK(std::isnan(empty.mean));
  CHECK(std::isnan(empty.median));
  CHECK(empty.censored == 1);
}

TEST_CASE("worker count does not change results") {
  const std::vector<UrnSpec> dims{friedman(1, 0), polya(2, 1)};
  SimConfig cfg{dims, 3000, 5000, 123};
  const auto one = run_replications(cfg, 1);
  for (unsigned w : {2u, 4u, 7u}) {
    const auto many = run_replications(cfg, w);
    REQUIRE(many.samples == one.samples);
    CHECK(many.stats.mean == one.stats.mean);
  }
  CHECK(empirical_return_frequency(cfg, 20, 1) == empirical_return_frequency(cfg, 20, 5));
}

TEST_CASE("raising the cap never loses hits") {
  std::int64_t previous = -1;
  for (std::int64_t cap : {2, 10, 100, 1000, 10000}) {
    const auto st = run_replications(SimConfig::uniform(polya(1, 1), 1, 2000, cap, 4), 2).stats;
    CHECK(st.hits >= previous);
    previous = st.hits;
  }
}

TEST_CASE("Friedman first-passage frequencies") {
  const auto st = run_replications(SimConfig::uniform(friedman(1, 0), 1, 10000, 1'000'000, 2024), 4).stats;
  CHECK(within_three_se(st.pmf.at(2), 0.5, st.replicas));
  CHECK(within_three_se(st.pmf.at(4), 1.0 / 6, st.replicas));
}

TEST_CASE("occupancy frequencies") {
  const auto f = empirical_return_frequency(SimConfig::uniform(friedman(1, 0), 1, 10000, 100, 31), 4, 4);
  REQUIRE(f.size() == 2);
  CHECK(within_three_se(f.at(2), 0.5, 10000));
  CHECK(within_three_se(f.at(4), 11.0 / 24, 10000));

  const auto g = empirical_return_frequency(SimConfig::uniform(polya(1, 1), 2, 10000, 100, 32), 2, 2);
  CHECK(within_three_se(g.at(2), 1.0 / 9, 10000));

  CHECK_THROWS_AS(empirical_return_frequency(SimConfig::uniform(polya(1, 1), 1, 10, 4, 0), 6), std::invalid_argument);
}
