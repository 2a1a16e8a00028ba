#include "urnwalk/exact/recurrence.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "urnwalk/exact/asymptotics.hpp"
#include "urnwalk/exact/closed_forms.hpp"
#include "urnwalk/numeric.hpp"

namespace urnwalk::exact {

namespace {

bool fair_coin(const UrnScheme& s) {
  return s.kind() == SchemeKind::Bernoulli && 2 * s.p_num() == s.p_den();
}

double tail_exponent_for(const UrnSpec& urn, std::size_t dims) {
  const double d = static_cast<double>(dims);
  switch (urn.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: return d;
    case SchemeKind::Friedman: return d / 2;
    case SchemeKind::Bernoulli:
      // off-center coins decay geometrically, which any power envelope dominates
      return fair_coin(urn.scheme) ? d / 2 : 2.0;
  }
  return d;
}

// Predicted lower bound on sum_{n=ref+1}^{N} term_n for the divergent cases.
double predicted_increment(const UrnSpec& urn, std::size_t dims, std::int64_t ref,
                           std::int64_t horizon) {
  const double d = static_cast<double>(dims);
  double sum = 0;
  for (std::int64_t n = ref + 1; n <= horizon; ++n) {
    const double x = static_cast<double>(n);
    switch (urn.scheme.kind()) {
      case SchemeKind::PolyaEggenberger:
        sum += std::pow(polya_lower_bound_constant(urn.white, urn.blue) / x, d);
        break;
      case SchemeKind::Friedman: sum += 0.9 * std::pow(3.0 / (std::numbers::pi * x), d / 2); break;
      case SchemeKind::Bernoulli: sum += 0.9 * std::pow(1.0 / (std::numbers::pi * x), d / 2); break;
    }
  }
  return sum;
}

}  // namespace

std::string classify(const UrnSpec& urn, std::size_t dims) {
  switch (urn.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: return dims == 1 ? "null recurrent" : "transient";
    case SchemeKind::Friedman:
      if (dims == 1) return "recurrent (conjectured positive recurrent)";
      if (dims == 2) return "recurrent (type not determined)";
      return "transient";
    case SchemeKind::Bernoulli:
      if (!fair_coin(urn.scheme)) return "transient";
      return dims <= 2 ? "null recurrent" : "transient";
  }
  return "unknown";
}

RecurrenceDiagnosis diagnose_recurrence(const UrnSpec& urn, std::size_t dims,
                                        std::int64_t horizon, std::int64_t reference) {
  validate(urn);
  if (dims < 1) throw std::invalid_argument("need at least one dimension");
  if (reference < 1 || horizon <= reference)
    throw std::invalid_argument("need 1 <= reference < horizon");

  RecurrenceDiagnosis dx;
  dx.urn = urn;
  dx.dims = dims;
  dx.horizon = horizon;
  dx.reference = reference;
  dx.tail_exponent = tail_exponent_for(urn, dims);
  dx.diverges = dx.tail_exponent <= 1.0;
  dx.classification = classify(urn, dims);

  const auto p = return_probabilities<double>(urn, horizon);
  std::vector<double> partial(p.size(), 0.0);
  double envelope = 0;
  for (std::int64_t n = 1; n <= horizon; ++n) {
    const double term = std::pow(p[static_cast<std::size_t>(n)], static_cast<double>(dims));
    partial[static_cast<std::size_t>(n)] = partial[static_cast<std::size_t>(n - 1)] + term;
    envelope = std::max(envelope, std::pow(static_cast<double>(n), dx.tail_exponent) * term);
  }
  for (std::int64_t n = 10; n < horizon; n *= 10) {
    if (n == reference) continue;
    dx.checkpoints.push_back({n, partial[static_cast<std::size_t>(n)]});
  }
  dx.checkpoints.push_back({reference, partial[static_cast<std::size_t>(reference)]});
  dx.checkpoints.push_back({horizon, partial[static_cast<std::size_t>(horizon)]});
  std::sort(dx.checkpoints.begin(), dx.checkpoints.end(),
            [](const auto& a, const auto& b) { return a.n < b.n; });

  dx.increment = partial[static_cast<std::size_t>(horizon)] - partial[static_cast<std::size_t>(reference)];
  if (dx.diverges) {
    dx.threshold = predicted_increment(urn, dims, reference, horizon);
    dx.tail_bound = std::numeric_limits<double>::infinity();
    dx.signature_holds = dx.threshold > 0 && dx.increment >= dx.threshold;
  } else {
    const double a = dx.tail_exponent;
    dx.envelope_constant = envelope;
    dx.threshold = envelope * std::pow(static_cast<double>(reference), 1 - a) / (a - 1);
    dx.tail_bound = envelope * std::pow(static_cast<double>(horizon), 1 - a) / (a - 1);
    dx.signature_holds = dx.increment <= dx.threshold;
  }

  if (dims == 1) {
    dx.hitting_horizon =
        urn.scheme.kind() == SchemeKind::Friedman ? std::min<std::int64_t>(horizon, 2000) : horizon;
    const auto h = hitting_probabilities<double>(urn, dx.hitting_horizon);
    double mass = 0;
    for (double v : h) mass += v;
    dx.hitting_mass = mass;
  }
  return dx;
}

}  // namespace urnwalk::exact
