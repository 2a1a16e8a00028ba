#include "urnwalk/exact/combinatorics.hpp"

#include <stdexcept>

namespace urnwalk::exact {

ExactRational rising_factorial(const ExactRational& x, std::int64_t s) {
  if (s < 0) throw std::invalid_argument("rising factorial needs s >= 0");
  ExactRational out = 1;
  ExactRational term = x;
  for (std::int64_t i = 0; i < s; ++i) {
    out *= term;
    term += 1;
  }
  return out;
}

BigCount rising_factorial(std::int64_t x, std::int64_t s) {
  if (s < 0) throw std::invalid_argument("rising factorial needs s >= 0");
  BigCount out = 1;
  for (std::int64_t i = 0; i < s; ++i) out *= x + i;
  return out;
}

BigCount factorial(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("factorial of a negative number");
  return rising_factorial(1, n);
}

BigCount binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  BigCount out = 1;
  // exact at every step: out holds binom(n-k+i, i)
  for (std::int64_t i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigCount catalan(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("catalan index must be nonnegative");
  return binomial(2 * n, n) / (n + 1);
}

std::vector<BigCount> eulerian_row(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("eulerian row index must be nonnegative");
  std::vector<BigCount> row{1};
  for (std::int64_t m = 2; m <= n; ++m) {
    std::vector<BigCount> next(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
      BigCount v = 0;
      if (k < m - 1) v += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k > 0) v += (m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = std::move(v);
    }
    row = std::move(next);
  }
  return row;
}

BigCount eulerian(std::int64_t n, std::int64_t k) {
  if (n < 1 || k < 0 || k > n - 1) return 0;
  return eulerian_row(n)[static_cast<std::size_t>(k)];
}

std::vector<double> eulerian_row_normalized(std::int64_t n) {
  if (n < 0) throw std::invalid_argument("eulerian row index must be nonnegative");
  std::vector<double> row{1.0};
  std::vector<double> next;
  for (std::int64_t m = 2; m <= n; ++m) {
    next.assign(static_cast<std::size_t>(m), 0.0);
    const double inv = 1.0 / static_cast<double>(m);
    for (std::int64_t k = 0; k < m; ++k) {
      double v = 0.0;
      if (k < m - 1) v += static_cast<double>(k + 1) * row[static_cast<std::size_t>(k)];
      if (k > 0) v += static_cast<double>(m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v * inv;
    }
    row.swap(next);
  }
  return row;
}

}  // namespace urnwalk::exact
