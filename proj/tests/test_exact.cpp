#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include "oracles.hpp"
#include "urnwalk/exact/asymptotics.hpp"
#include "urnwalk/exact/closed_forms.hpp"
#include "urnwalk/exact/combinatorics.hpp"
#include "urnwalk/exact/dp.hpp"
#include "urnwalk/exact/recurrence.hpp"
#include "urnwalk/exact/series.hpp"

using namespace urnwalk;
using namespace urnwalk::exact;

namespace {

UrnSpec polya(std::int64_t w, std::int64_t b) { return {UrnScheme::polya(), w, b}; }
UrnSpec friedman(std::int64_t w, std::int64_t b) { return {UrnScheme::friedman(), w, b}; }
const UrnSpec kFairCoin{UrnScheme::bernoulli(), 0, 0};

ExactRational sum(const std::vector<ExactRational>& v) {
  ExactRational s = 0;
  for (const auto& x : v) s += x;
  return s;
}

double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace

TEST_CASE("rising factorial, factorial, binomial") {
  CHECK(rising_factorial(ExactRational(7, 3), 0) == 1);
  CHECK(rising_factorial(ExactRational(1), 3) == 6);
  CHECK(rising_factorial(ExactRational(2), 4) == 120);
  CHECK(rising_factorial(ExactRational(1, 2), 2) == ExactRational(3, 4));
  CHECK(rising_factorial(2, 4) == 120);
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(4, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK_THROWS_AS(rising_factorial(3, -1), std::invalid_argument);
}

TEST_CASE("catalan numbers") {
  CHECK(catalan(0) == 1);
  CHECK(catalan(2) == 2);
  CHECK(catalan(5) == 42);
  for (int n = 0; n <= 8; ++n) CHECK(catalan(n) == oracle::balanced_strings(n));
}

TEST_CASE("eulerian numbers") {
  CHECK(eulerian(2, 0) == 1);
  CHECK(eulerian(2, 1) == 1);
  CHECK(eulerian(3, 1) == 4);
  CHECK(eulerian_row(4) == std::vector<BigCount>{1, 11, 11, 1});
  CHECK(eulerian(4, 4) == 0);
  CHECK(eulerian(4, -1) == 0);
  CHECK(eulerian_row(0) == std::vector<BigCount>{1});

  for (int n = 1; n <= 8; ++n) {
    const auto row = eulerian_row(n);
    const auto counts = oracle::ascent_counts(n);
    for (int k = 0; k < n; ++k) CHECK(row[static_cast<std::size_t>(k)] == counts[static_cast<std::size_t>(k)]);
  }
  for (int n = 1; n <= 30; ++n)
    for (int k = 0; k < n; ++k) REQUIRE(eulerian(n, k) == oracle::eulerian_explicit(n, k));
}

TEST_CASE("eulerian symmetry and row sums") {
  std::vector<BigCount> row{1};
  BigCount fact = 1;
  for (std::int64_t n = 1; n <= 200; ++n) {
    row = eulerian_row(n);
    fact *= n;
    BigCount total = 0;
    for (std::size_t k = 0; k < row.size(); ++k) {
      REQUIRE(row[k] == row[row.size() - 1 - k]);
      total += row[k];
    }
    REQUIRE(total == fact);
  }
}

TEST_CASE("normalized eulerian rows match exact rows") {
  for (std::int64_t n : {1, 2, 10, 100, 400}) {
    const auto exact_row = eulerian_row(n);
    const auto approx = eulerian_row_normalized(n);
    const BigCount fact = factorial(n);
    REQUIRE(approx.size() == exact_row.size());
    for (std::size_t k = 0; k < approx.size(); ++k) {
      const double expected = to_double(ExactRational(exact_row[k], fact));
      if (expected < 1e-280) continue;
      CAPTURE(n);
      CAPTURE(k);
      REQUIRE(rel_err(approx[k], expected) < 1e-11);
    }
  }
}

TEST_CASE("Polya pmf") {
  CHECK(polya_pmf(1, 1, 2, 1) == ExactRational(1, 3));
  CHECK(polya_pmf(1, 1, 1, 1) == ExactRational(1, 2));
  CHECK(polya_pmf(1, 1, 2, 2) == ExactRational(1, 3));
  CHECK(polya_pmf(1, 1, 2, 3) == 0);
  CHECK(polya_pmf(1, 1, 2, -1) == 0);

  for (std::int64_t w = 1; w <= 3; ++w)
    for (std::int64_t b = 1; b <= 3; ++b)
      for (int n = 0; n <= 12; ++n) {
        const auto brute = oracle::white_count_pmf(oracle::Rule::SameColor, w, b, n);
        const auto dp = draw_count_pmf_dp<ExactRational>(polya(w, b), n);
        std::vector<ExactRational> closed;
        for (int k = 0; k <= n; ++k) closed.push_back(polya_pmf(w, b, n, k));
        REQUIRE(closed == brute);
        REQUIRE(dp == brute);
        REQUIRE(sum(closed) == 1);
      }
}

TEST_CASE("Polya return probabilities") {
  CHECK(polya_return_prob(1, 1, 2) == ExactRational(1, 3));
  CHECK(polya_return_prob(2, 3, 3) == 0);
  CHECK(polya_return_prob(1, 1, 0) == 1);
  for (std::int64_t n = 0; n <= 200; ++n) REQUIRE(polya_return_prob(1, 1, 2 * n) == ExactRational(1, 2 * n + 1));
  for (std::int64_t n = 0; n <= 12; ++n)
    REQUIRE(polya_return_prob(2, 3, 2 * n) == draw_count_pmf_dp<ExactRational>(polya(2, 3), 2 * n)[n]);

  const auto table = return_probabilities<ExactRational>(polya(3, 2), 40);
  for (std::int64_t n = 0; n <= 40; ++n) REQUIRE(table[static_cast<std::size_t>(n)] == polya_return_prob(3, 2, 2 * n));
}

TEST_CASE("Polya hitting pmf") {
  CHECK(polya_hitting_pmf(1, 1, 2) == ExactRational(1, 3));
  CHECK(polya_hitting_pmf(1, 1, 4) == ExactRational(1, 15));
  CHECK(polya_hitting_pmf(1, 1, 5) == 0);

  for (std::int64_t w = 1; w <= 3; ++w)
    for (std::int64_t b = 1; b <= 3; ++b) {
      const auto dp = hitting_pmf_dp<ExactRational>(polya(w, b), 12);
      for (std::int64_t n = 1; n <= 12; ++n) REQUIRE(polya_hitting_pmf(w, b, 2 * n) == dp[static_cast<std::size_t>(n)]);
    }
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(polya_hitting_pmf(1, 1, 2 * n) == oracle::first_return(oracle::Rule::SameColor, 1, 1, 2 * n));
    REQUIRE(polya_hitting_pmf(2, 3, 2 * n) == oracle::first_return(oracle::Rule::SameColor, 2, 3, 2 * n));
  }
}

TEST_CASE("Friedman white-draw pmf") {
  CHECK(friedman_white_draw_pmf(1, 1) == 1);
  CHECK(friedman_white_draw_pmf(2, 1) == ExactRational(1, 2));
  CHECK(friedman_white_draw_pmf(2, 2) == ExactRational(1, 2));
  CHECK(friedman_white_draw_pmf(3, 0) == 0);
  for (std::int64_t n = 1; n <= 50; ++n) {
    ExactRational total = 0;
    for (std::int64_t k = 0; k <= n; ++k) total += friedman_white_draw_pmf(n, k);
    REQUIRE(total == 1);
  }
  for (int n = 1; n <= 12; ++n) {
    const auto brute = oracle::white_count_pmf(oracle::Rule::OppositeColor, 1, 0, n);
    const auto dp = draw_count_pmf_dp<ExactRational>(friedman(1, 0), n);
    REQUIRE(dp == brute);
    for (int k = 0; k <= n; ++k) REQUIRE(friedman_white_draw_pmf(n, k) == brute[static_cast<std::size_t>(k)]);
  }
}

TEST_CASE("Friedman return probabilities") {
  CHECK(friedman_return_prob(2) == ExactRational(1, 2));
  CHECK(friedman_return_prob(4) == ExactRational(11, 24));
  CHECK(friedman_return_prob(6) == ExactRational(151, 360));
  CHECK(friedman_return_prob(5) == 0);
  for (std::int64_t n = 0; n <= 12; ++n)
    REQUIRE(friedman_return_prob(2 * n) == draw_count_pmf_dp<ExactRational>(friedman(1, 0), 2 * n)[n]);

  const auto table = return_probabilities<ExactRational>(friedman(1, 0), 30);
  for (std::int64_t n = 0; n <= 30; ++n) REQUIRE(table[static_cast<std::size_t>(n)] == friedman_return_prob(2 * n));
}

TEST_CASE("general Friedman starts go through the DP") {
  for (auto [w, b] : {std::pair<std::int64_t, std::int64_t>{0, 1}, {2, 3}, {3, 3}, {2, 0}}) {
    for (int n = 0; n <= 10; ++n) {
      const auto brute = oracle::white_count_pmf(oracle::Rule::OppositeColor, w, b, n);
      REQUIRE(draw_count_pmf_dp<ExactRational>(friedman(w, b), n) == brute);
      if (n % 2 == 0) REQUIRE(return_prob(friedman(w, b), n) == brute[static_cast<std::size_t>(n / 2)]);
    }
    for (int n = 1; n <= 5; ++n)
      REQUIRE(hitting_pmf(friedman(w, b), 2 * n) == oracle::first_return(oracle::Rule::OppositeColor, w, b, 2 * n));
  }
}

TEST_CASE("DP oracles") {
  CHECK(draw_count_pmf_dp<ExactRational>(polya(1, 1), 2) ==
        std::vector<ExactRational>{ExactRational(1, 3), ExactRational(1, 3), ExactRational(1, 3)});
  CHECK(draw_count_pmf_dp<ExactRational>(friedman(1, 0), 2) ==
        std::vector<ExactRational>{0, ExactRational(1, 2), ExactRational(1, 2)});
  CHECK(draw_count_pmf_dp<ExactRational>(polya(2, 3), 0) == std::vector<ExactRational>{1});

  const auto fh = hitting_pmf_dp<ExactRational>(friedman(1, 0), 6);
  CHECK(fh[1] == ExactRational(1, 2));
  CHECK(fh[2] == ExactRational(1, 6));
  for (int n = 1; n <= 6; ++n) REQUIRE(fh[static_cast<std::size_t>(n)] == oracle::first_return(oracle::Rule::OppositeColor, 1, 0, 2 * n));

  const auto ph = hitting_pmf_dp<ExactRational>(polya(1, 1), 2);
  CHECK(ph[1] == ExactRational(1, 3));
  CHECK(ph[2] == ExactRational(1, 15));

  ExactRational mass = 0;
  for (const auto& p : hitting_pmf_dp<ExactRational>(friedman(1, 0), 40)) mass += p;
  CHECK(mass <= 1);
}

TEST_CASE("Bernoulli baseline") {
  const ExactRational half(1, 2), third(1, 3);
  CHECK(bernoulli_return_prob(half, 2) == half);
  CHECK(bernoulli_return_prob(half, 4) == ExactRational(3, 8));
  CHECK(bernoulli_hitting_pmf(half, 2) == half);
  CHECK(bernoulli_hitting_pmf(half, 4) == ExactRational(1, 8));
  for (int n = 1; n <= 6; ++n) {
    REQUIRE(bernoulli_hitting_pmf(third, 2 * n) == oracle::first_return(oracle::Rule::Bernoulli, 0, 0, 2 * n, third));
    REQUIRE(bernoulli_return_prob(third, 2 * n) ==
            oracle::white_count_pmf(oracle::Rule::Bernoulli, 0, 0, 2 * n, third)[static_cast<std::size_t>(n)]);
  }
}

TEST_CASE("d-dimensional return probabilities") {
  const std::vector<UrnSpec> pp{polya(1, 1), polya(1, 1)};
  CHECK(ddim_return_prob(pp, 2) == ExactRational(1, 9));
  const std::vector<UrnSpec> ff{friedman(1, 0), friedman(1, 0)};
  CHECK(ddim_return_prob(ff, 2) == ExactRational(1, 4));
  for (const auto& urn : {polya(2, 3), friedman(1, 0), kFairCoin}) {
    const std::vector<UrnSpec> one{urn};
    for (int m = 0; m <= 10; ++m) REQUIRE(ddim_return_prob(one, m) == return_prob(urn, m));
  }
  const std::vector<UrnSpec> mixed{polya(2, 1), friedman(1, 0), kFairCoin};
  CHECK(ddim_return_prob(mixed, 3) == 0);
  CHECK(ddim_return_prob(mixed, 4) == polya_return_prob(2, 1, 4) * ExactRational(11, 24) * ExactRational(3, 8));
}

TEST_CASE("series partial sums") {
  const std::vector<UrnSpec> one{polya(1, 1)};
  const auto rs = series_partial_sums<ExactRational>(SeriesKind::ReturnSeries, one, 2);
  REQUIRE(rs.rows.size() == 2);
  CHECK(rs.rows[0].n == 1);
  CHECK(rs.rows[1].partial_sum == ExactRational(8, 15));
  CHECK(series_partial_sums<ExactRational>(SeriesKind::ExpectedHitting, one, 2).rows[1].partial_sum ==
        ExactRational(14, 15));
  CHECK(series_partial_sums<ExactRational>(SeriesKind::HittingMass, one, 1).rows[0].partial_sum ==
        ExactRational(1, 3));

  const std::vector<UrnSpec> two{polya(1, 1), polya(1, 1)};
  CHECK_THROWS_AS(series_partial_sums<ExactRational>(SeriesKind::HittingMass, two, 3), std::invalid_argument);
  CHECK_THROWS_AS(series_partial_sums<double>(SeriesKind::ExpectedHitting, two, 3), std::invalid_argument);
  CHECK_THROWS_AS(series_partial_sums<double>(SeriesKind::ReturnSeries, two, 0), std::invalid_argument);
  CHECK(parse_series_kind("hitting_mass") == SeriesKind::HittingMass);
  CHECK_THROWS_AS(parse_series_kind("mean"), std::invalid_argument);

  for (const auto& urn : {polya(2, 3), friedman(1, 0), friedman(2, 1), kFairCoin}) {
    const std::vector<UrnSpec> dims{urn};
    for (auto kind : {SeriesKind::ReturnSeries, SeriesKind::HittingMass, SeriesKind::ExpectedHitting}) {
      const auto exact_table = series_partial_sums<ExactRational>(kind, dims, 25);
      const auto float_table = series_partial_sums<double>(kind, dims, 25);
      for (std::size_t i = 0; i < exact_table.rows.size(); ++i) {
        const auto& row = exact_table.rows[i];
        if (i > 0) REQUIRE(row.partial_sum >= exact_table.rows[i - 1].partial_sum);
        if (kind == SeriesKind::HittingMass) REQUIRE(row.partial_sum <= 1);
        REQUIRE(rel_err(float_table.rows[i].partial_sum, to_double(row.partial_sum)) < 1e-12);
      }
    }
  }
}

TEST_CASE("float mode agrees with exact mode at the overlap") {
  for (const auto& urn : {polya(2, 3), polya(1, 1), friedman(1, 0), friedman(2, 1), kFairCoin}) {
    const auto e = return_probabilities<ExactRational>(urn, 60);
    const auto f = return_probabilities<double>(urn, 60);
    for (std::size_t n = 0; n < e.size(); ++n) REQUIRE(rel_err(f[n], to_double(e[n])) < 1e-12);
    const auto eh = hitting_probabilities<ExactRational>(urn, 30);
    const auto fh = hitting_probabilities<double>(urn, 30);
    for (std::size_t n = 1; n < eh.size(); ++n) REQUIRE(rel_err(fh[n], to_double(eh[n])) < 1e-12);
  }
  CHECK(rel_err(std::exp(log_polya_return_prob(2, 3, 1000)), to_double(polya_return_prob(2, 3, 1000))) < 1e-9);
  CHECK(rel_err(std::exp(log_polya_hitting_pmf(3, 1, 800)), to_double(polya_hitting_pmf(3, 1, 800))) < 1e-9);
  CHECK(rel_err(std::exp(log_bernoulli_return_prob(0.5, 600)), to_double(bernoulli_return_prob(ExactRational(1, 2), 600))) < 1e-9);
  CHECK(std::isinf(log_polya_return_prob(1, 1, 7)));
}

TEST_CASE("Stirling bracket") {
  const auto b1 = stirling_bracket(1);
  CHECK(b1.lower <= 0.0);
  CHECK(b1.upper >= 0.0);
  const auto b10 = stirling_bracket(10);
  const double ln10 = std::log(3628800.0);
  CHECK(b10.lower <= ln10);
  CHECK(b10.upper >= ln10);
  const auto b100 = stirling_bracket(100);
  CHECK(b100.upper - b100.lower <= 1.0 / 1200 + 1e-15);
  CHECK(b100.lower <= log_of(factorial(100)));
  CHECK(b100.upper >= log_of(factorial(100)));
}

TEST_CASE("asymptotic estimates") {
  const auto fe = asymptotic_estimate(friedman(1, 0), 100);
  CHECK(fe.estimate == doctest::Approx(0.09772).epsilon(1e-4));
  CHECK(fe.ratio > 0);

  const double c1 = polya_lower_bound_constant(1, 1);
  CHECK(polya_k_constant(1, 1) == 1.0);
  CHECK(c1 == doctest::Approx(std::exp(0.75) / 2.0 / (std::exp(1.0) * 2.0) / std::sqrt(1.5)));
  for (std::int64_t n = 1; n <= 10000; ++n) REQUIRE(c1 / static_cast<double>(n) <= 1.0 / (2.0 * n + 1));

  const std::vector<std::int64_t> ns{1, 10, 100, 1000};
  for (const auto& urn : {polya(2, 3), friedman(1, 0), kFairCoin, UrnSpec{UrnScheme::bernoulli(1, 3), 0, 0}}) {
    const auto report = asymptotic_report(urn, ns);
    REQUIRE(report.entries.size() == ns.size());
    CHECK(report.c1.has_value() == (urn.scheme.kind() == SchemeKind::PolyaEggenberger));
    for (const auto& e : report.entries) {
      CHECK(std::isfinite(e.ratio));
      CHECK(e.ratio > 0);
    }
  }
  CHECK(asymptotic_report(polya(2, 3), ns).entries[2].exact ==
        doctest::Approx(to_double(polya_return_prob(2, 3, 200))).epsilon(1e-10));
  CHECK_THROWS_AS(asymptotic_estimate(polya(1, 1), 0), std::invalid_argument);
}

TEST_CASE("recurrence classification") {
  CHECK(classify(polya(1, 1), 1) == "null recurrent");
  CHECK(classify(polya(1, 1), 2) == "transient");
  CHECK(classify(friedman(1, 0), 1) == "recurrent (conjectured positive recurrent)");
  CHECK(classify(friedman(1, 0), 2) == "recurrent (type not determined)");
  CHECK(classify(friedman(1, 0), 3) == "transient");
  CHECK(classify(kFairCoin, 2) == "null recurrent");
  CHECK(classify(kFairCoin, 3) == "transient");

  const auto d1 = diagnose_recurrence(polya(1, 1), 1, 1000, 100);
  CHECK(d1.diverges);
  CHECK(d1.signature_holds);
  REQUIRE(d1.hitting_mass.has_value());
  CHECK(*d1.hitting_mass == doctest::Approx(0.5 * (1 - 1.0 / 2001)));

  const auto d2 = diagnose_recurrence(polya(1, 1), 2, 1000, 100);
  CHECK_FALSE(d2.diverges);
  CHECK(d2.signature_holds);
  CHECK(d2.increment <= d2.threshold);
  CHECK_FALSE(d2.hitting_mass.has_value());
  CHECK_THROWS_AS(diagnose_recurrence(polya(1, 1), 1, 100, 100), std::invalid_argument);
}
