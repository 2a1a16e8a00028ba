#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "urnwalk/numeric.hpp"
#include "urnwalk/urn.hpp"

namespace urnwalk::exact {

enum class SeriesKind {
  ReturnSeries,     // sum of P(X_{2n} = 0), any dimension
  ExpectedHitting,  // sum of 2n P(H_0 = 2n), one dimension
  HittingMass,      // sum of P(H_0 = 2n), one dimension
};

std::string_view to_string(SeriesKind kind);
/// "return_series", "expected_hitting" or "hitting_mass".
SeriesKind parse_series_kind(std::string_view name);

template <class Scalar>
struct SeriesRow {
  std::int64_t n;
  Scalar term;
  Scalar partial_sum;
};

/// Rows n = 1..N. Scalar = ExactRational is exact mode, double is log-space mode.
template <class Scalar>
struct SeriesTable {
  SeriesKind kind;
  std::vector<UrnSpec> dims;
  std::vector<SeriesRow<Scalar>> rows;
};

/// Throws std::invalid_argument for hitting kinds with more than one dimension.
template <class Scalar>
SeriesTable<Scalar> series_partial_sums(SeriesKind kind, std::span<const UrnSpec> dims,
                                        std::int64_t max_n);

extern template SeriesTable<ExactRational> series_partial_sums<ExactRational>(
    SeriesKind, std::span<const UrnSpec>, std::int64_t);
extern template SeriesTable<double> series_partial_sums<double>(SeriesKind,
                                                                std::span<const UrnSpec>,
                                                                std::int64_t);

}  // namespace urnwalk::exact
