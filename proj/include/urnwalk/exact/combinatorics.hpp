#pragma once

#include <cstdint>
#include <vector>

#include "urnwalk/numeric.hpp"

namespace urnwalk::exact {

/// Pochhammer rising factorial x(x+1)...(x+s-1); equals 1 for s = 0.
ExactRational rising_factorial(const ExactRational& x, std::int64_t s);
BigCount rising_factorial(std::int64_t x, std::int64_t s);

BigCount factorial(std::int64_t n);
/// Zero outside 0 <= k <= n.
BigCount binomial(std::int64_t n, std::int64_t k);

/// C_n = binom(2n, n) / (n + 1).
BigCount catalan(std::int64_t n);

/// Row n of the Eulerian triangle, A(n,0..n-1), by the recurrence
/// A(n,k) = (k+1) A(n-1,k) + (n-k) A(n-1,k-1), A(1,0) = 1. Row 0 is {1}.
std::vector<BigCount> eulerian_row(std::int64_t n);

/// Number of permutations of {1..n} with exactly k ascents; 0 for k outside [0, n-1].
BigCount eulerian(std::int64_t n, std::int64_t k);

/// Row n of A(n,k)/n! in double precision through the normalized recurrence
/// p_n(k) = ((k+1) p_{n-1}(k) + (n-k) p_{n-1}(k-1)) / n. All terms are
/// positive, so there is no cancellation.
std::vector<double> eulerian_row_normalized(std::int64_t n);

}  // namespace urnwalk::exact
