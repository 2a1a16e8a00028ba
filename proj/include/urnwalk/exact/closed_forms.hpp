#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "urnwalk/numeric.hpp"
#include "urnwalk/urn.hpp"

namespace urnwalk::exact {

// Polya-Eggenberger urn started from (w, b), both positive.

/// P(W_n = k) = binom(n,k) <w>_k <b>_{n-k} / <w+b>_n, zero outside 0 <= k <= n.
ExactRational polya_pmf(std::int64_t w, std::int64_t b, std::int64_t n, std::int64_t k);

/// P(X_m = 0): zero for odd m, polya_pmf(w, b, m, m/2) otherwise.
ExactRational polya_return_prob(std::int64_t w, std::int64_t b, std::int64_t m);

/// P(H_0 = m) for the first return time: zero for odd m, and for m = 2n
/// 2 C_{n-1} <w>_n <b>_n / <w+b>_{2n}. Every first-passage draw order with n
/// whites and n blues has the same probability by exchangeability; C_{n-1}
/// counts those starting white, the factor 2 adds their mirror images.
ExactRational polya_hitting_pmf(std::int64_t w, std::int64_t b, std::int64_t m);

// Friedman urn started from one white ball.

/// P(W_n = k) = A(n, n-k) / n! for 1 <= k <= n, zero otherwise.
ExactRational friedman_white_draw_pmf(std::int64_t n, std::int64_t k);

/// P(X_m = 0) = A(m, m/2) / m! for even m, zero for odd m.
ExactRational friedman_return_prob(std::int64_t m);

// Fixed coin with white probability p.

ExactRational bernoulli_return_prob(const ExactRational& p, std::int64_t m);
ExactRational bernoulli_hitting_pmf(const ExactRational& p, std::int64_t m);

/// One-dimensional P(X_m = 0) for any urn. Friedman starts other than (1,0)
/// have no closed form and go through draw_count_pmf_dp.
ExactRational return_prob(const UrnSpec& urn, std::int64_t m);

/// Product of the per-dimension return probabilities.
ExactRational ddim_return_prob(std::span<const UrnSpec> dims, std::int64_t m);

/// P(H_0 = m) in one dimension; Friedman goes through hitting_pmf_dp.
ExactRational hitting_pmf(const UrnSpec& urn, std::int64_t m);

// Log-space evaluation for large indices. Values are natural logs; odd m gives -inf.

double log_polya_return_prob(std::int64_t w, std::int64_t b, std::int64_t m);
double log_polya_hitting_pmf(std::int64_t w, std::int64_t b, std::int64_t m);
double log_bernoulli_return_prob(double p, std::int64_t m);
double log_bernoulli_hitting_pmf(double p, std::int64_t m);

/// P(X_{2n} = 0) for n = 0..N. Exact mode (ExactRational) and float mode
/// (double) of the same quantities; float Friedman(1,0) uses normalized Eulerian
/// rows, other Friedman starts use the forward DP.
template <class Scalar>
std::vector<Scalar> return_probabilities(const UrnSpec& urn, std::int64_t max_n);
template <>
std::vector<ExactRational> return_probabilities<ExactRational>(const UrnSpec&, std::int64_t);
template <>
std::vector<double> return_probabilities<double>(const UrnSpec&, std::int64_t);

/// P(H_0 = 2n) for n = 0..N (entry 0 is zero).
template <class Scalar>
std::vector<Scalar> hitting_probabilities(const UrnSpec& urn, std::int64_t max_n);

}  // namespace urnwalk::exact
