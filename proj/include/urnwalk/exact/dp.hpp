#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <type_traits>
#include <vector>

#include "urnwalk/numeric.hpp"
#include "urnwalk/urn.hpp"

namespace urnwalk::exact {

// Forward dynamic programs over (step, white-draw count). The urn composition is a
// function of (n, W_n), so the state space is quadratic in n. Scalar is
// ExactRational for exact results or double for large-n evaluation.

template <class Scalar>
Scalar as_scalar(Fraction f) {
  if constexpr (std::is_same_v<Scalar, ExactRational>)
    return make_rational(f.num, f.den);
  else
    return static_cast<Scalar>(f.num) / static_cast<Scalar>(f.den);
}

/// Exact law of W_n: entry k is P(W_n = k), k = 0..n.
template <class Scalar>
std::vector<Scalar> draw_count_pmf_dp(const UrnSpec& urn, std::int64_t n) {
  validate(urn);
  if (n < 0) throw std::invalid_argument("draw count must be nonnegative");
  std::vector<Scalar> dist{Scalar(1)};
  std::vector<Scalar> next;
  for (std::int64_t t = 0; t < n; ++t) {
    next.assign(static_cast<std::size_t>(t + 2), Scalar(0));
    for (std::int64_t k = 0; k <= t; ++k) {
      const Scalar& mass = dist[static_cast<std::size_t>(k)];
      if (mass == 0) continue;
      const Scalar p = as_scalar<Scalar>(UrnState::at(urn, k, t - k).white_fraction());
      next[static_cast<std::size_t>(k + 1)] += mass * p;
      next[static_cast<std::size_t>(k)] += mass * (Scalar(1) - p);
    }
    dist.swap(next);
  }
  return dist;
}

/// P(X_{2n} = 0) = P(W_{2n} = n) for n = 0..N from a single forward pass.
template <class Scalar>
std::vector<Scalar> return_probs_dp(const UrnSpec& urn, std::int64_t max_n) {
  validate(urn);
  std::vector<Scalar> out{Scalar(1)};
  std::vector<Scalar> dist{Scalar(1)};
  std::vector<Scalar> next;
  for (std::int64_t t = 0; t < 2 * max_n; ++t) {
    next.assign(static_cast<std::size_t>(t + 2), Scalar(0));
    for (std::int64_t k = 0; k <= t; ++k) {
      const Scalar& mass = dist[static_cast<std::size_t>(k)];
      if (mass == 0) continue;
      const Scalar p = as_scalar<Scalar>(UrnState::at(urn, k, t - k).white_fraction());
      next[static_cast<std::size_t>(k + 1)] += mass * p;
      next[static_cast<std::size_t>(k)] += mass * (Scalar(1) - p);
    }
    dist.swap(next);
    if ((t + 1) % 2 == 0) out.push_back(dist[static_cast<std::size_t>((t + 1) / 2)]);
  }
  return out;
}

/// First-passage law: entry n is P(H_0 = 2n), n = 0..N (entry 0 is zero).
/// Mass that reaches position 0 after step 0 is absorbed.
template <class Scalar>
std::vector<Scalar> hitting_pmf_dp(const UrnSpec& urn, std::int64_t max_n) {
  validate(urn);
  if (max_n < 0) throw std::invalid_argument("horizon must be nonnegative");
  const std::int64_t steps = 2 * max_n;
  std::vector<Scalar> hits(static_cast<std::size_t>(max_n + 1), Scalar(0));
  // mass[x + steps] for positions x in [-t, t]
  std::vector<Scalar> mass(static_cast<std::size_t>(2 * steps + 1), Scalar(0));
  std::vector<Scalar> next(mass.size(), Scalar(0));
  mass[static_cast<std::size_t>(steps)] = Scalar(1);
  for (std::int64_t t = 0; t < steps; ++t) {
    std::fill(next.begin(), next.end(), Scalar(0));
    for (std::int64_t x = -t; x <= t; x += 2) {
      const Scalar& m = mass[static_cast<std::size_t>(x + steps)];
      if (m == 0) continue;
      const std::int64_t white_draws = (t + x) / 2;
      const Scalar p =
          as_scalar<Scalar>(UrnState::at(urn, white_draws, t - white_draws).white_fraction());
      next[static_cast<std::size_t>(x + 1 + steps)] += m * p;
      next[static_cast<std::size_t>(x - 1 + steps)] += m * (Scalar(1) - p);
    }
    auto& at_zero = next[static_cast<std::size_t>(steps)];
    if ((t + 1) % 2 == 0) hits[static_cast<std::size_t>((t + 1) / 2)] = at_zero;
    at_zero = Scalar(0);
    mass.swap(next);
  }
  return hits;
}

}  // namespace urnwalk::exact
