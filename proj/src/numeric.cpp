#include "urnwalk/numeric.hpp"

#include <charconv>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <gmp.h>

namespace urnwalk {

namespace mp = boost::multiprecision;

std::string to_fraction_string(const ExactRational& q) {
  return mp::numerator(q).str() + "/" + mp::denominator(q).str();
}

std::string to_decimal_string(const ExactRational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("decimal digits must be nonnegative");
  const bool negative = q < 0;
  const ExactRational mag = negative ? ExactRational(-q) : q;
  BigCount scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round half up on |q| * 10^digits
  const BigCount num = mp::numerator(mag) * scale * 2 + mp::denominator(mag);
  const BigCount scaled = num / (mp::denominator(mag) * 2);
  std::string s = scaled.str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits))
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) s.insert(0, "-");
  return s;
}

std::string to_decimal_string(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double to_double(const ExactRational& q) { return q.convert_to<double>(); }

double log_of(const BigCount& n) {
  if (n <= 0) throw std::domain_error("log of a nonpositive integer");
  long exponent = 0;
  const double mantissa = mpz_get_d_2exp(&exponent, n.backend().data());
  return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

ExactRational parse_rational(const std::string& text) {
  auto parse_int = [&](std::string_view part) {
    std::string_view digits = part;
    const bool negative = !digits.empty() && digits.front() == '-';
    if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string_view::npos)
      throw std::invalid_argument("malformed rational '" + text + "'");
    BigCount value(std::string{digits});
    return negative ? BigCount(-value) : value;
  };
  const auto slash = text.find('/');
  if (slash == std::string::npos) return ExactRational(parse_int(text));
  const BigCount den = parse_int(std::string_view(text).substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in '" + text + "'");
  return ExactRational(parse_int(std::string_view(text).substr(0, slash)), den);
}

}  // namespace urnwalk
