#pragma once

#include <concepts>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>

#include "urnwalk/numeric.hpp"

namespace urnwalk {

enum class SchemeKind { Bernoulli, PolyaEggenberger, Friedman };

std::string_view to_string(SchemeKind kind);
/// Accepts "bernoulli", "polya", "friedman"; throws std::invalid_argument otherwise.
SchemeKind parse_scheme(std::string_view name);

/// Draw law of a two-color urn. Bernoulli is a fixed coin with white probability p.
class UrnScheme {
 public:
  static UrnScheme bernoulli(std::int64_t num = 1, std::int64_t den = 2);
  static UrnScheme polya() { return UrnScheme(SchemeKind::PolyaEggenberger); }
  static UrnScheme friedman() { return UrnScheme(SchemeKind::Friedman); }

  SchemeKind kind() const { return kind_; }
  /// Reduced numerator/denominator of p; 1/1 for the urn schemes (unused there).
  std::int64_t p_num() const { return p_num_; }
  std::int64_t p_den() const { return p_den_; }
  ExactRational bernoulli_p() const { return make_rational(p_num_, p_den_); }

  friend bool operator==(const UrnScheme&, const UrnScheme&) = default;

 private:
  explicit UrnScheme(SchemeKind kind) : kind_(kind) {}
  SchemeKind kind_;
  std::int64_t p_num_ = 1;
  std::int64_t p_den_ = 1;
};

std::string describe(const UrnScheme& scheme);

enum class Color { White, Blue };

inline char to_char(Color c) { return c == Color::White ? 'W' : 'B'; }

/// Initial parameters of one urn: scheme plus w white and b blue balls.
struct UrnSpec {
  UrnScheme scheme = UrnScheme::polya();
  std::int64_t white = 1;
  std::int64_t blue = 1;

  friend bool operator==(const UrnSpec&, const UrnSpec&) = default;
};

/// Throws std::invalid_argument when the composition is not allowed for the scheme.
void validate(const UrnSpec& spec);

/// Exact small fraction num/den, used on hot paths instead of ExactRational.
struct Fraction {
  std::int64_t num;
  std::int64_t den;
};

/// An urn after n = white_draws + blue_draws draws. The ball composition is a
/// function of the initial parameters and the two draw counters.
class UrnState {
 public:
  /// State with the given draw counts; counts must be reachable-looking (nonnegative).
  static UrnState at(const UrnSpec& spec, std::int64_t white_draws, std::int64_t blue_draws);

  const UrnSpec& spec() const { return spec_; }
  const UrnScheme& scheme() const { return spec_.scheme; }
  std::int64_t white_draws() const { return white_draws_; }
  std::int64_t blue_draws() const { return blue_draws_; }
  std::int64_t draws() const { return white_draws_ + blue_draws_; }

  std::int64_t whites() const;
  std::int64_t blues() const;
  std::int64_t total() const { return whites() + blues(); }

  Fraction white_fraction() const;

  friend bool operator==(const UrnState&, const UrnState&) = default;

 private:
  UrnState(const UrnSpec& spec, std::int64_t wd, std::int64_t bd)
      : spec_(spec), white_draws_(wd), blue_draws_(bd) {}
  friend UrnState apply_draw(const UrnState& u, Color color);

  UrnSpec spec_;
  std::int64_t white_draws_ = 0;
  std::int64_t blue_draws_ = 0;
};

UrnState new_urn(const UrnSpec& spec);
inline UrnState new_urn(const UrnScheme& scheme, std::int64_t white, std::int64_t blue) {
  return new_urn(UrnSpec{scheme, white, blue});
}

ExactRational white_probability(const UrnState& u);
ExactRational blue_probability(const UrnState& u);
ExactRational draw_probability(const UrnState& u, Color color);

UrnState apply_draw(const UrnState& u, Color color);

/// White iff variate < white probability. The variate is expected in (0,1).
std::pair<Color, UrnState> draw_for_variate(const UrnState& u, double variate);

template <class Source>
concept UniformSource = requires(Source& s) {
  { s() } -> std::convertible_to<double>;
};

template <UniformSource Source>
std::pair<Color, UrnState> sample_draw(const UrnState& u, Source& uniform) {
  return draw_for_variate(u, static_cast<double>(uniform()));
}

/// Probability of drawing exactly `colors` in order, starting from a fresh urn.
ExactRational sequence_probability(const UrnSpec& spec, std::span<const Color> colors);

}  // namespace urnwalk
