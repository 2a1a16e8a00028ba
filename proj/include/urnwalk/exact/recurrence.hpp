#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "urnwalk/urn.hpp"

namespace urnwalk::exact {

struct SeriesCheckpoint {
  std::int64_t n;
  double partial_sum;
};

/// Finite-horizon signature of divergence or convergence of sum_n P(X_{2n} = 0)
/// for a d-dimensional walk with identical urns in every coordinate.
///
/// Terms decay like n^{-a} (a = d for Polya, d/2 for Friedman and the fair coin).
/// For a <= 1 the series diverges and the increment S(N) - S(ref) must reach
/// `threshold`, a predicted increment from the term asymptotics. For a > 1 the
/// terms are enveloped by C n^{-a} with C = sup n^a term over [1, N], and the
/// increment must stay below `threshold` = C ref^{1-a} / (a-1); the tail beyond N
/// is bounded by C N^{1-a} / (a-1).
struct RecurrenceDiagnosis {
  UrnSpec urn;
  std::size_t dims = 1;
  std::int64_t horizon = 0;
  std::int64_t reference = 0;
  std::vector<SeriesCheckpoint> checkpoints;
  double tail_exponent = 0;
  bool diverges = false;
  double envelope_constant = 0;  // convergent case only
  double increment = 0;          // S(horizon) - S(reference)
  double threshold = 0;
  double tail_bound = 0;  // convergent case only, +inf otherwise
  bool signature_holds = false;
  std::string classification;
  /// sum_{n<=hitting_horizon} P(H_0 = 2n), one-dimensional walks only. The
  /// horizon is capped at 2000 for Friedman urns, whose first-passage law needs the DP.
  std::optional<double> hitting_mass;
  std::int64_t hitting_horizon = 0;
};

/// Known recurrence type of the d-dimensional walk.
std::string classify(const UrnSpec& urn, std::size_t dims);

RecurrenceDiagnosis diagnose_recurrence(const UrnSpec& urn, std::size_t dims,
                                        std::int64_t horizon = 10000,
                                        std::int64_t reference = 100);

}  // namespace urnwalk::exact
