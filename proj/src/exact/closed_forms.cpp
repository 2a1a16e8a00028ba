#include "urnwalk/exact/closed_forms.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "urnwalk/exact/combinatorics.hpp"
#include "urnwalk/exact/dp.hpp"

namespace urnwalk::exact {

namespace {

void require_polya(std::int64_t w, std::int64_t b) {
  validate(UrnSpec{UrnScheme::polya(), w, b});
}

bool is_friedman_one_white(const UrnSpec& urn) {
  return urn.scheme.kind() == SchemeKind::Friedman && urn.white == 1 && urn.blue == 0;
}

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double log_rising(double x, double s) { return std::lgamma(x + s) - std::lgamma(x); }

}  // namespace

ExactRational polya_pmf(std::int64_t w, std::int64_t b, std::int64_t n, std::int64_t k) {
  require_polya(w, b);
  if (n < 0) throw std::invalid_argument("polya_pmf needs n >= 0");
  if (k < 0 || k > n) return 0;
  return ExactRational(binomial(n, k) * rising_factorial(w, k) * rising_factorial(b, n - k),
                       rising_factorial(w + b, n));
}

ExactRational polya_return_prob(std::int64_t w, std::int64_t b, std::int64_t m) {
  require_polya(w, b);
  if (m < 0) throw std::invalid_argument("number of moves must be nonnegative");
  if (m % 2 != 0) return 0;
  return polya_pmf(w, b, m, m / 2);
}

ExactRational polya_hitting_pmf(std::int64_t w, std::int64_t b, std::int64_t m) {
  require_polya(w, b);
  if (m < 1) throw std::invalid_argument("hitting time must be positive");
  if (m % 2 != 0) return 0;
  const std::int64_t n = m / 2;
  return ExactRational(2 * catalan(n - 1) * rising_factorial(w, n) * rising_factorial(b, n),
                       rising_factorial(w + b, 2 * n));
}

ExactRational friedman_white_draw_pmf(std::int64_t n, std::int64_t k) {
  if (n < 1) throw std::invalid_argument("friedman_white_draw_pmf needs n >= 1");
  if (k < 1 || k > n) return 0;
  return ExactRational(eulerian(n, n - k), factorial(n));
}

ExactRational friedman_return_prob(std::int64_t m) {
  if (m < 0) throw std::invalid_argument("number of moves must be nonnegative");
  if (m == 0) return 1;
  if (m % 2 != 0) return 0;
  return friedman_white_draw_pmf(m, m / 2);
}

ExactRational bernoulli_return_prob(const ExactRational& p, std::int64_t m) {
  if (m < 0) throw std::invalid_argument("number of moves must be nonnegative");
  if (m % 2 != 0) return 0;
  const std::int64_t n = m / 2;
  ExactRational pq = p * (1 - p);
  ExactRational out(binomial(m, n));
  for (std::int64_t i = 0; i < n; ++i) out *= pq;
  return out;
}

ExactRational bernoulli_hitting_pmf(const ExactRational& p, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("hitting time must be positive");
  if (m % 2 != 0) return 0;
  const std::int64_t n = m / 2;
  ExactRational pq = p * (1 - p);
  ExactRational out(2 * catalan(n - 1));
  for (std::int64_t i = 0; i < n; ++i) out *= pq;
  return out;
}

ExactRational return_prob(const UrnSpec& urn, std::int64_t m) {
  validate(urn);
  if (m < 0) throw std::invalid_argument("number of moves must be nonnegative");
  if (m % 2 != 0) return 0;
  switch (urn.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: return polya_return_prob(urn.white, urn.blue, m);
    case SchemeKind::Bernoulli: return bernoulli_return_prob(urn.scheme.bernoulli_p(), m);
    case SchemeKind::Friedman:
      if (is_friedman_one_white(urn)) return friedman_return_prob(m);
      return draw_count_pmf_dp<ExactRational>(urn, m)[static_cast<std::size_t>(m / 2)];
  }
  return 0;
}

ExactRational ddim_return_prob(std::span<const UrnSpec> dims, std::int64_t m) {
  if (dims.empty()) throw std::invalid_argument("need at least one dimension");
  ExactRational p = 1;
  for (const auto& urn : dims) p *= return_prob(urn, m);
  return p;
}

ExactRational hitting_pmf(const UrnSpec& urn, std::int64_t m) {
  validate(urn);
  if (m < 1) throw std::invalid_argument("hitting time must be positive");
  if (m % 2 != 0) return 0;
  switch (urn.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: return polya_hitting_pmf(urn.white, urn.blue, m);
    case SchemeKind::Bernoulli: return bernoulli_hitting_pmf(urn.scheme.bernoulli_p(), m);
    case SchemeKind::Friedman:
      return hitting_pmf_dp<ExactRational>(urn, m / 2)[static_cast<std::size_t>(m / 2)];
  }
  return 0;
}

double log_polya_return_prob(std::int64_t w, std::int64_t b, std::int64_t m) {
  require_polya(w, b);
  if (m % 2 != 0) return kNegInf;
  const double n = static_cast<double>(m / 2);
  const double wd = static_cast<double>(w), bd = static_cast<double>(b);
  return log_rising(wd, n) + log_rising(bd, n) - log_rising(wd + bd, 2 * n) +
         std::lgamma(2 * n + 1) - 2 * std::lgamma(n + 1);
}

double log_polya_hitting_pmf(std::int64_t w, std::int64_t b, std::int64_t m) {
  require_polya(w, b);
  if (m < 1) throw std::invalid_argument("hitting time must be positive");
  if (m % 2 != 0) return kNegInf;
  const double n = static_cast<double>(m / 2);
  const double wd = static_cast<double>(w), bd = static_cast<double>(b);
  // log C_{n-1} = log (2n-2)! - log (n-1)! - log n!
  const double log_catalan = std::lgamma(2 * n - 1) - std::lgamma(n) - std::lgamma(n + 1);
  return std::log(2.0) + log_catalan + log_rising(wd, n) + log_rising(bd, n) -
         log_rising(wd + bd, 2 * n);
}

double log_bernoulli_return_prob(double p, std::int64_t m) {
  if (m % 2 != 0) return kNegInf;
  const double n = static_cast<double>(m / 2);
  if (n == 0) return 0.0;
  if (p <= 0.0 || p >= 1.0) return kNegInf;
  return std::lgamma(2 * n + 1) - 2 * std::lgamma(n + 1) + n * std::log(p * (1 - p));
}

double log_bernoulli_hitting_pmf(double p, std::int64_t m) {
  if (m < 1) throw std::invalid_argument("hitting time must be positive");
  if (m % 2 != 0) return kNegInf;
  if (p <= 0.0 || p >= 1.0) return kNegInf;
  const double n = static_cast<double>(m / 2);
  const double log_catalan = std::lgamma(2 * n - 1) - std::lgamma(n) - std::lgamma(n + 1);
  return std::log(2.0) + log_catalan + n * std::log(p * (1 - p));
}

namespace {

// Eulerian central entries A(2n, n) / (2n)! for n = 0..N.
std::vector<ExactRational> friedman_return_exact(std::int64_t max_n) {
  std::vector<ExactRational> out{ExactRational(1)};
  std::vector<BigCount> row{1};
  BigCount fact = 1;
  for (std::int64_t m = 2; m <= 2 * max_n; ++m) {
    std::vector<BigCount> next(static_cast<std::size_t>(m));
    for (std::int64_t k = 0; k < m; ++k) {
      BigCount v = 0;
      if (k < m - 1) v += (k + 1) * row[static_cast<std::size_t>(k)];
      if (k > 0) v += (m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = std::move(v);
    }
    row = std::move(next);
    fact *= m;
    if (m % 2 == 0) out.emplace_back(row[static_cast<std::size_t>(m / 2)], fact);
  }
  return out;
}

std::vector<double> friedman_return_float(std::int64_t max_n) {
  std::vector<double> out{1.0};
  std::vector<double> row{1.0};
  std::vector<double> next;
  for (std::int64_t m = 2; m <= 2 * max_n; ++m) {
    next.assign(static_cast<std::size_t>(m), 0.0);
    const double inv = 1.0 / static_cast<double>(m);
    for (std::int64_t k = 0; k < m; ++k) {
      double v = 0.0;
      if (k < m - 1) v += static_cast<double>(k + 1) * row[static_cast<std::size_t>(k)];
      if (k > 0) v += static_cast<double>(m - k) * row[static_cast<std::size_t>(k - 1)];
      next[static_cast<std::size_t>(k)] = v * inv;
    }
    row.swap(next);
    if (m % 2 == 0) out.push_back(row[static_cast<std::size_t>(m / 2)]);
  }
  return out;
}

}  // namespace

template <>
std::vector<ExactRational> return_probabilities<ExactRational>(const UrnSpec& urn,
                                                               std::int64_t max_n) {
  validate(urn);
  if (max_n < 0) throw std::invalid_argument("horizon must be nonnegative");
  std::vector<ExactRational> out{ExactRational(1)};
  switch (urn.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: {
      // p_{n+1} / p_n = (w+n)(b+n)(2n+1)(2n+2) / ((w+b+2n)(w+b+2n+1)(n+1)^2)
      const std::int64_t w = urn.white, b = urn.blue;
      for (std::int64_t n = 0; n < max_n; ++n) {
        ExactRational ratio(BigCount(w + n) * (b + n) * (2 * n + 1) * (2 * n + 2),
                            BigCount(w + b + 2 * n) * (w + b + 2 * n + 1) * (n + 1) * (n + 1));
        out.push_back(out.back() * ratio);
      }
      return out;
    }
    case SchemeKind::Bernoulli: {
      const ExactRational pq = urn.scheme.bernoulli_p() * (1 - urn.scheme.bernoulli_p());
      for (std::int64_t n = 0; n < max_n; ++n)
        out.push_back(out.back() * pq * ExactRational(BigCount(2 * n + 1) * 2, BigCount(n + 1)));
      return out;
    }
    case SchemeKind::Friedman:
      if (is_friedman_one_white(urn)) return friedman_return_exact(max_n);
      return return_probs_dp<ExactRational>(urn, max_n);
  }
  return out;
}

template <>
std::vector<double> return_probabilities<double>(const UrnSpec& urn, std::int64_t max_n) {
  validate(urn);
  if (max_n < 0) throw std::invalid_argument("horizon must be nonnegative");
  std::vector<double> out;
  out.reserve(static_cast<std::size_t>(max_n + 1));
  switch (urn.scheme.kind()) {
    case SchemeKind::PolyaEggenberger:
      for (std::int64_t n = 0; n <= max_n; ++n)
        out.push_back(std::exp(log_polya_return_prob(urn.white, urn.blue, 2 * n)));
      return out;
    case SchemeKind::Bernoulli: {
      const double p = to_double(urn.scheme.bernoulli_p());
      for (std::int64_t n = 0; n <= max_n; ++n)
        out.push_back(std::exp(log_bernoulli_return_prob(p, 2 * n)));
      return out;
    }
    case SchemeKind::Friedman:
      if (is_friedman_one_white(urn)) return friedman_return_float(max_n);
      return return_probs_dp<double>(urn, max_n);
  }
  return out;
}

template <class Scalar>
std::vector<Scalar> hitting_probabilities(const UrnSpec& urn, std::int64_t max_n) {
  validate(urn);
  if (max_n < 0) throw std::invalid_argument("horizon must be nonnegative");
  if (urn.scheme.kind() == SchemeKind::Friedman) return hitting_pmf_dp<Scalar>(urn, max_n);
  std::vector<Scalar> out{Scalar(0)};
  out.reserve(static_cast<std::size_t>(max_n + 1));
  for (std::int64_t n = 1; n <= max_n; ++n) {
    if constexpr (std::is_same_v<Scalar, ExactRational>) {
      out.push_back(hitting_pmf(urn, 2 * n));
    } else if (urn.scheme.kind() == SchemeKind::PolyaEggenberger) {
      out.push_back(std::exp(log_polya_hitting_pmf(urn.white, urn.blue, 2 * n)));
    } else {
      out.push_back(std::exp(log_bernoulli_hitting_pmf(to_double(urn.scheme.bernoulli_p()), 2 * n)));
    }
  }
  return out;
}

template std::vector<ExactRational> hitting_probabilities<ExactRational>(const UrnSpec&,
                                                                         std::int64_t);
template std::vector<double> hitting_probabilities<double>(const UrnSpec&, std::int64_t);

}  // namespace urnwalk::exact
