#include "urnwalk/walk.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace urnwalk {

bool WalkState::at_origin() const {
  return std::all_of(position.begin(), position.end(), [](std::int64_t x) { return x == 0; });
}

WalkState new_walk(std::span<const UrnSpec> dims) {
  if (dims.empty()) throw std::invalid_argument("walk needs at least one dimension");
  WalkState w;
  w.urns.reserve(dims.size());
  for (std::size_t i = 0; i < dims.size(); ++i) {
    try {
      w.urns.push_back(new_urn(dims[i]));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("dimension " + std::to_string(i + 1) + ": " + e.what());
    }
  }
  w.position.assign(dims.size(), 0);
  return w;
}

WalkState new_walk(std::size_t d, const UrnSpec& each) {
  const std::vector<UrnSpec> dims(d, each);
  return new_walk(dims);
}

WalkState apply_step(const WalkState& walk, std::span<const Color> colors) {
  if (colors.size() != walk.dims())
    throw std::invalid_argument("step has " + std::to_string(colors.size()) +
                                " colors for a " + std::to_string(walk.dims()) + "-d walk");
  WalkState next = walk;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    next.urns[i] = apply_draw(walk.urns[i], colors[i]);
    next.position[i] += colors[i] == Color::White ? 1 : -1;
  }
  ++next.time;
  return next;
}

void validate(const Trajectory& t) {
  if (t.dims.empty()) throw std::invalid_argument("trajectory needs at least one dimension");
  for (std::size_t s = 0; s < t.steps.size(); ++s)
    if (t.steps[s].size() != t.dims.size())
      throw std::invalid_argument("trajectory step " + std::to_string(s + 1) + " has " +
                                  std::to_string(t.steps[s].size()) + " colors, expected " +
                                  std::to_string(t.dims.size()));
}

std::vector<WalkState> replay(const Trajectory& t) {
  validate(t);
  std::vector<WalkState> states;
  states.reserve(t.steps.size() + 1);
  states.push_back(new_walk(t.dims));
  for (const auto& colors : t.steps) states.push_back(apply_step(states.back(), colors));
  return states;
}

ExactRational trajectory_probability(const Trajectory& t) {
  validate(t);
  ExactRational p = 1;
  for (std::size_t i = 0; i < t.dims.size(); ++i) {
    std::vector<Color> column;
    column.reserve(t.steps.size());
    for (const auto& colors : t.steps) column.push_back(colors[i]);
    p *= sequence_probability(t.dims[i], column);
  }
  return p;
}

std::string format_steps(const Trajectory& t) {
  validate(t);
  std::string out;
  for (const auto& colors : t.steps) {
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (i) out += ',';
      out += to_char(colors[i]);
    }
    out += '\n';
  }
  return out;
}

std::vector<std::vector<Color>> parse_steps(std::istream& in, std::size_t dims) {
  std::vector<std::vector<Color>> steps;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    std::vector<Color> colors;
    std::stringstream fields(line);
    std::string field;
    while (std::getline(fields, field, ',')) {
      if (field == "W")
        colors.push_back(Color::White);
      else if (field == "B")
        colors.push_back(Color::Blue);
      else
        throw std::invalid_argument("line " + std::to_string(lineno) + ": bad color '" + field +
                                    "' (expected W or B)");
    }
    if (colors.size() != dims)
      throw std::invalid_argument("line " + std::to_string(lineno) + ": expected " +
                                  std::to_string(dims) + " colors, got " +
                                  std::to_string(colors.size()));
    steps.push_back(std::move(colors));
  }
  return steps;
}

std::vector<Point2> map_to_simple_2d(std::span<const Point2> path) {
  std::vector<Point2> out;
  out.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    const auto [x, y] = path[i];
    if ((x + y) % 2 != 0)
      throw InvalidPath(i, "coordinates must have equal parity");
    if (i > 0) {
      const auto dx = x - path[i - 1][0];
      const auto dy = y - path[i - 1][1];
      if ((dx != 1 && dx != -1) || (dy != 1 && dy != -1))
        throw InvalidPath(i, "step must be (+-1, +-1)");
    }
    out.push_back({(x + y) / 2, (y - x) / 2});
  }
  return out;
}

std::vector<Point2> map_from_simple_2d(std::span<const Point2> path) {
  std::vector<Point2> out;
  out.reserve(path.size());
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i > 0) {
      const auto du = path[i][0] - path[i - 1][0];
      const auto dv = path[i][1] - path[i - 1][1];
      if (std::abs(du) + std::abs(dv) != 1)
        throw InvalidPath(i, "step must be a unit axis move");
    }
    out.push_back({path[i][0] - path[i][1], path[i][0] + path[i][1]});
  }
  return out;
}

PathFile parse_path(std::istream& in) {
  PathFile file;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    Point2 p{};
    std::string extra;
    if (!(fields >> p[0] >> p[1]) || (fields >> extra))
      throw std::invalid_argument("line " + std::to_string(lineno) +
                                  ": expected two integers, got '" + line + "'");
    file.points.push_back(p);
    file.lines.push_back(lineno);
  }
  return file;
}

std::string format_path(std::span<const Point2> path) {
  std::string out;
  for (const auto& p : path) out += std::to_string(p[0]) + " " + std::to_string(p[1]) + "\n";
  return out;
}

}  // namespace urnwalk
