#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "urnwalk/urn.hpp"

namespace urnwalk::exact {

/// Bounds on ln(n!): ln((n/e)^n sqrt(2 pi n)) and that plus 1/(12n).
struct StirlingBracket {
  double lower;
  double upper;
};

StirlingBracket stirling_bracket(std::int64_t n);

/// K = (w+b-1)! / ((w-1)! (b-1)!).
double polya_k_constant(std::int64_t w, std::int64_t b);

/// Lower-bound constant C1 with P(X_{2n}=0) >= C1/n for n >= 1:
/// C1 = K e^{3/4} / 2^{w+b-1} / (e^{w+b-1} (w+b)^{w+b-1}) / sqrt(1 + (w+b-1)/2).
double polya_lower_bound_constant(std::int64_t w, std::int64_t b);

struct AsymptoticEntry {
  std::int64_t n;
  double exact;     // P(X_{2n} = 0), log-space evaluation
  double estimate;  // Polya: C1/n lower bound; Friedman: sqrt(3/(pi n)); Bernoulli: (4pq)^n / sqrt(pi n)
  double ratio;     // exact / estimate
};

struct AsymptoticReport {
  UrnSpec urn;
  std::optional<double> c1;  // Polya only
  std::vector<AsymptoticEntry> entries;
};

AsymptoticEntry asymptotic_estimate(const UrnSpec& urn, std::int64_t n);

/// Same as asymptotic_estimate over several n, sharing one evaluation of the exact values.
AsymptoticReport asymptotic_report(const UrnSpec& urn, std::span<const std::int64_t> ns);

}  // namespace urnwalk::exact
