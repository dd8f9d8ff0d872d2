#pragma once

// Hand-rolled generators for property tests.

#include <cstdint>
#include <random>
#include <vector>

#include "segclip/geom.hpp"

namespace segclip::testing {

inline constexpr Window kUnitWindow{0, 10, 0, 10};

/// Uniform real endpoints over `region`.
inline std::vector<Segment> random_segments(std::uint64_t seed, std::size_t n, const Region& region) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(region.x_left, region.x_right);
  std::uniform_real_distribution<double> uy(region.y_bottom, region.y_top);
  std::vector<Segment> out(n);
  for (auto& s : out) s = {{ux(rng), uy(rng)}, {ux(rng), uy(rng)}};
  return out;
}

/// Integer endpoints in [lo, hi]. Small grids hit corners, edges and
/// collinear configurations constantly, and every orientation value is
/// exact in double.
inline std::vector<Segment> lattice_segments(std::uint64_t seed, std::size_t n, int lo, int hi) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> u(lo, hi);
  std::vector<Segment> out(n);
  for (auto& s : out) {
    s = {{double(u(rng)), double(u(rng))}, {double(u(rng)), double(u(rng))}};
  }
  return out;
}

/// Random valid windows with varied aspect ratio and offset.
inline Window random_window(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> pos(-100, 100);
  std::uniform_real_distribution<double> size(0.5, 50);
  const double x = pos(rng), y = pos(rng);
  return {x, x + size(rng), y, y + size(rng)};
}

/// Every combination of window corners, edge midpoints, interior points and
/// points outside each edge, paired with each other: the hand-picked singular
/// configurations.
inline std::vector<Segment> singular_segments(const Window& w) {
  const double xs[] = {w.x_left - w.width(), w.x_left, 0.5 * (w.x_left + w.x_right), w.x_right,
                       w.x_right + w.width()};
  const double ys[] = {w.y_bottom - w.height(), w.y_bottom, 0.5 * (w.y_bottom + w.y_top), w.y_top,
                       w.y_top + w.height()};
  std::vector<Point> pts;
  for (double x : xs) {
    for (double y : ys) pts.push_back({x, y});
  }
  std::vector<Segment> out;
  for (const Point& a : pts) {
    for (const Point& b : pts) out.push_back({a, b});
  }
  return out;
}

}  // namespace segclip::testing
