#include "urnwalk/exact/series.hpp"

#include <stdexcept>
#include <string>

#include "urnwalk/exact/closed_forms.hpp"

namespace urnwalk::exact {

std::string_view to_string(SeriesKind kind) {
  switch (kind) {
    case SeriesKind::ReturnSeries: return "return_series";
    case SeriesKind::ExpectedHitting: return "expected_hitting";
    case SeriesKind::HittingMass: return "hitting_mass";
  }
  return "unknown";
}

SeriesKind parse_series_kind(std::string_view name) {
  if (name == "return_series") return SeriesKind::ReturnSeries;
  if (name == "expected_hitting") return SeriesKind::ExpectedHitting;
  if (name == "hitting_mass") return SeriesKind::HittingMass;
  throw std::invalid_argument("unknown series kind '" + std::string(name) +
                              "' (expected return_series, expected_hitting or hitting_mass)");
}

template <class Scalar>
SeriesTable<Scalar> series_partial_sums(SeriesKind kind, std::span<const UrnSpec> dims,
                                        std::int64_t max_n) {
  if (max_n < 1) throw std::invalid_argument("series length must be at least 1");
  if (dims.empty()) throw std::invalid_argument("need at least one dimension");
  for (const auto& urn : dims) validate(urn);
  if (kind != SeriesKind::ReturnSeries && dims.size() != 1)
    throw std::invalid_argument(std::string(to_string(kind)) +
                                " is only available in one dimension (got d=" +
                                std::to_string(dims.size()) + ")");

  std::vector<Scalar> terms;
  if (kind == SeriesKind::ReturnSeries) {
    terms.assign(static_cast<std::size_t>(max_n + 1), Scalar(1));
    for (const auto& urn : dims) {
      const auto p = return_probabilities<Scalar>(urn, max_n);
      for (std::size_t n = 0; n < terms.size(); ++n) terms[n] *= p[n];
    }
  } else {
    terms = hitting_probabilities<Scalar>(dims.front(), max_n);
    if (kind == SeriesKind::ExpectedHitting)
      for (std::size_t n = 0; n < terms.size(); ++n) terms[n] *= Scalar(2 * static_cast<std::int64_t>(n));
  }

  SeriesTable<Scalar> table{kind, std::vector<UrnSpec>(dims.begin(), dims.end()), {}};
  table.rows.reserve(static_cast<std::size_t>(max_n));
  Scalar sum(0);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const Scalar& term = terms[static_cast<std::size_t>(n)];
    sum += term;
    table.rows.push_back({n, term, sum});
  }
  return table;
}

template SeriesTable<ExactRational> series_partial_sums<ExactRational>(SeriesKind,
                                                                       std::span<const UrnSpec>,
                                                                       std::int64_t);
template SeriesTable<double> series_partial_sums<double>(SeriesKind, std::span<const UrnSpec>,
                                                         std::int64_t);

}  // namespace urnwalk::exact
