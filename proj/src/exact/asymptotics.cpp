#include "urnwalk/exact/asymptotics.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "urnwalk/exact/closed_forms.hpp"
#include "urnwalk/numeric.hpp"

namespace urnwalk::exact {

StirlingBracket stirling_bracket(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("stirling_bracket needs n >= 1");
  const double x = static_cast<double>(n);
  const double lower = x * std::log(x) - x + 0.5 * std::log(2 * std::numbers::pi * x);
  return {lower, lower + 1.0 / (12.0 * x)};
}

double polya_k_constant(std::int64_t w, std::int64_t b) {
  validate(UrnSpec{UrnScheme::polya(), w, b});
  const double wd = static_cast<double>(w), bd = static_cast<double>(b);
  return std::exp(std::lgamma(wd + bd) - std::lgamma(wd) - std::lgamma(bd));
}

double polya_lower_bound_constant(std::int64_t w, std::int64_t b) {
  const double k = polya_k_constant(w, b);
  const double s = static_cast<double>(w + b - 1);
  return k * std::exp(0.75) / std::pow(2.0, s) /
         (std::exp(s) * std::pow(static_cast<double>(w + b), s)) / std::sqrt(1.0 + s / 2.0);
}

namespace {

double estimate_for(const UrnSpec& urn, std::int64_t n) {
  const double x = static_cast<double>(n);
  switch (urn.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: return polya_lower_bound_constant(urn.white, urn.blue) / x;
    case SchemeKind::Friedman: return std::sqrt(3.0 / (std::numbers::pi * x));
    case SchemeKind::Bernoulli: {
      const double p = to_double(urn.scheme.bernoulli_p());
      return std::pow(4 * p * (1 - p), x) / std::sqrt(std::numbers::pi * x);
    }
  }
  return 0.0;
}

}  // namespace

AsymptoticReport asymptotic_report(const UrnSpec& urn, std::span<const std::int64_t> ns) {
  validate(urn);
  AsymptoticReport report{urn, std::nullopt, {}};
  if (urn.scheme.kind() == SchemeKind::PolyaEggenberger)
    report.c1 = polya_lower_bound_constant(urn.white, urn.blue);
  if (ns.empty()) return report;
  if (*std::min_element(ns.begin(), ns.end()) < 1)
    throw std::invalid_argument("asymptotic estimates need n >= 1");
  const auto top = *std::max_element(ns.begin(), ns.end());
  std::vector<double> exact_values;
  if (urn.scheme.kind() != SchemeKind::PolyaEggenberger)
    exact_values = return_probabilities<double>(urn, top);
  for (auto n : ns) {
    const double exact = urn.scheme.kind() == SchemeKind::PolyaEggenberger
                             ? std::exp(log_polya_return_prob(urn.white, urn.blue, 2 * n))
                             : exact_values[static_cast<std::size_t>(n)];
    const double estimate = estimate_for(urn, n);
    report.entries.push_back({n, exact, estimate, exact / estimate});
  }
  return report;
}

AsymptoticEntry asymptotic_estimate(const UrnSpec& urn, std::int64_t n) {
  const std::int64_t ns[] = {n};
  return asymptotic_report(urn, ns).entries.front();
}

}  // namespace urnwalk::exact
