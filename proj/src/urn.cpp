#include "urnwalk/urn.hpp"

#include <numeric>
#include <stdexcept>

namespace urnwalk {

std::string_view to_string(SchemeKind kind) {
  switch (kind) {
    case SchemeKind::Bernoulli: return "bernoulli";
    case SchemeKind::PolyaEggenberger: return "polya";
    case SchemeKind::Friedman: return "friedman";
  }
  return "unknown";
}

SchemeKind parse_scheme(std::string_view name) {
  if (name == "bernoulli") return SchemeKind::Bernoulli;
  if (name == "polya") return SchemeKind::PolyaEggenberger;
  if (name == "friedman") return SchemeKind::Friedman;
  throw std::invalid_argument("unknown scheme '" + std::string(name) +
                              "' (expected bernoulli, polya or friedman)");
}

UrnScheme UrnScheme::bernoulli(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den)
    throw std::invalid_argument("bernoulli probability must lie in [0,1], got " +
                                std::to_string(num) + "/" + std::to_string(den));
  UrnScheme s(SchemeKind::Bernoulli);
  const auto g = std::gcd(num, den);
  s.p_num_ = num / g;
  s.p_den_ = den / g;
  return s;
}

std::string describe(const UrnScheme& scheme) {
  std::string out(to_string(scheme.kind()));
  if (scheme.kind() == SchemeKind::Bernoulli)
    out += "(" + std::to_string(scheme.p_num()) + "/" + std::to_string(scheme.p_den()) + ")";
  return out;
}

void validate(const UrnSpec& spec) {
  if (spec.white < 0 || spec.blue < 0)
    throw std::invalid_argument("ball counts must be nonnegative, got w=" +
                                std::to_string(spec.white) + " b=" + std::to_string(spec.blue));
  switch (spec.scheme.kind()) {
    case SchemeKind::PolyaEggenberger:
      if (spec.white == 0 || spec.blue == 0)
        throw std::invalid_argument(
            "polya urn needs w > 0 and b > 0 (w=0 or b=0 is degenerate), got w=" +
            std::to_string(spec.white) + " b=" + std::to_string(spec.blue));
      break;
    case SchemeKind::Friedman:
      if (spec.white + spec.blue == 0)
        throw std::invalid_argument("friedman urn needs at least one ball");
      break;
    case SchemeKind::Bernoulli:
      break;
  }
}

UrnState UrnState::at(const UrnSpec& spec, std::int64_t white_draws, std::int64_t blue_draws) {
  validate(spec);
  if (white_draws < 0 || blue_draws < 0)
    throw std::invalid_argument("draw counts must be nonnegative");
  return UrnState(spec, white_draws, blue_draws);
}

std::int64_t UrnState::whites() const {
  switch (spec_.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: return spec_.white + white_draws_;
    case SchemeKind::Friedman: return spec_.white + blue_draws_;
    case SchemeKind::Bernoulli: break;
  }
  return spec_.white;
}

std::int64_t UrnState::blues() const {
  switch (spec_.scheme.kind()) {
    case SchemeKind::PolyaEggenberger: return spec_.blue + blue_draws_;
    case SchemeKind::Friedman: return spec_.blue + white_draws_;
    case SchemeKind::Bernoulli: break;
  }
  return spec_.blue;
}

Fraction UrnState::white_fraction() const {
  if (spec_.scheme.kind() == SchemeKind::Bernoulli)
    return {spec_.scheme.p_num(), spec_.scheme.p_den()};
  return {whites(), total()};
}

UrnState new_urn(const UrnSpec& spec) { return UrnState::at(spec, 0, 0); }

ExactRational white_probability(const UrnState& u) {
  const auto f = u.white_fraction();
  return make_rational(f.num, f.den);
}

ExactRational blue_probability(const UrnState& u) {
  const auto f = u.white_fraction();
  return make_rational(f.den - f.num, f.den);
}

ExactRational draw_probability(const UrnState& u, Color color) {
  return color == Color::White ? white_probability(u) : blue_probability(u);
}

UrnState apply_draw(const UrnState& u, Color color) {
  UrnState next = u;
  if (color == Color::White)
    ++next.white_draws_;
  else
    ++next.blue_draws_;
  return next;
}

std::pair<Color, UrnState> draw_for_variate(const UrnState& u, double variate) {
  const auto f = u.white_fraction();
  const double p = static_cast<double>(f.num) / static_cast<double>(f.den);
  const Color c = variate < p ? Color::White : Color::Blue;
  return {c, apply_draw(u, c)};
}

ExactRational sequence_probability(const UrnSpec& spec, std::span<const Color> colors) {
  UrnState u = new_urn(spec);
  BigCount num = 1;
  BigCount den = 1;
  for (Color c : colors) {
    const auto f = u.white_fraction();
    num *= c == Color::White ? f.num : f.den - f.num;
    den *= f.den;
    if (num == 0) return ExactRational(0);
    u = apply_draw(u, c);
  }
  return ExactRational(num, den);
}

}  // namespace urnwalk
