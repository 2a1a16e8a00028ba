#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "urnwalk/numeric.hpp"
#include "urnwalk/urn.hpp"

namespace urnwalk {

/// d independent urns driving one coordinate each. Every coordinate moves at
/// every step: +1 on a white draw, -1 on a blue draw.
struct WalkState {
  std::vector<UrnState> urns;
  std::vector<std::int64_t> position;
  std::int64_t time = 0;

  std::size_t dims() const { return urns.size(); }
  bool at_origin() const;
};

WalkState new_walk(std::span<const UrnSpec> dims);
WalkState new_walk(std::size_t d, const UrnSpec& each);

/// Advances every coordinate by the given colors (one per dimension).
WalkState apply_step(const WalkState& walk, std::span<const Color> colors);

/// In-place step, consuming one variate per dimension in dimension order.
template <UniformSource Source>
void advance(WalkState& walk, Source& uniform) {
  for (std::size_t i = 0; i < walk.dims(); ++i) {
    auto [color, urn] = sample_draw(walk.urns[i], uniform);
    walk.urns[i] = urn;
    walk.position[i] += color == Color::White ? 1 : -1;
  }
  ++walk.time;
}

template <UniformSource Source>
WalkState step(const WalkState& walk, Source& uniform) {
  WalkState next = walk;
  advance(next, uniform);
  return next;
}

/// Colors drawn by each urn at each step; positions are always re-derived.
struct Trajectory {
  std::vector<UrnSpec> dims;
  std::vector<std::vector<Color>> steps;  // steps[t][i]: color of urn i at step t+1
};

/// Throws std::invalid_argument when a step does not carry one color per dimension.
void validate(const Trajectory& t);

/// Walk states after each prefix, starting with the initial state.
std::vector<WalkState> replay(const Trajectory& t);

ExactRational trajectory_probability(const Trajectory& t);

/// One line per step, comma-separated colors per dimension ("W,B").
std::string format_steps(const Trajectory& t);
/// Inverse of format_steps; errors name the offending line.
std::vector<std::vector<Color>> parse_steps(std::istream& in, std::size_t dims);

using Point2 = std::array<std::int64_t, 2>;

/// A path that is not a valid walk; `index` is the 0-based offending position.
struct InvalidPath : std::invalid_argument {
  InvalidPath(std::size_t index, const std::string& what)
      : std::invalid_argument("position " + std::to_string(index + 1) + ": " + what), index(index) {}
  std::size_t index;
};

/// Rotation by -45 degrees with rescaling, (x,y) -> ((x+y)/2, (y-x)/2). Turns a
/// diagonal-stepping planar walk into the axis-stepping simple walk.
std::vector<Point2> map_to_simple_2d(std::span<const Point2> path);
/// Inverse map (u,v) -> (u-v, u+v).
std::vector<Point2> map_from_simple_2d(std::span<const Point2> path);

struct PathFile {
  std::vector<Point2> points;
  std::vector<std::size_t> lines;  // source line of each point
};

/// One position per line as space-separated integers; blank lines and lines
/// starting with '#' are skipped.
PathFile parse_path(std::istream& in);
std::string format_path(std::span<const Point2> path);

}  // namespace urnwalk
