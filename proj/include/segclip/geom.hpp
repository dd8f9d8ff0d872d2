#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>

namespace segclip {

struct Point {
  double x = 0.0;
  double y = 0.0;

  friend constexpr bool operator==(const Point&, const Point&) = default;
};

/// Ordered pair of endpoints. The clipping procedures treat `a` as the
/// endpoint they update.
struct Segment {
  Point a;
  Point b;

  friend constexpr bool operator==(const Segment&, const Segment&) = default;
};

/// Axis-aligned rectangle. Also used as the sampling region for random
/// corpora.
struct Window {
  double x_left = 0.0;
  double x_right = 0.0;
  double y_bottom = 0.0;
  double y_top = 0.0;

  constexpr double width() const noexcept { return x_right - x_left; }
  constexpr double height() const noexcept { return y_top - y_bottom; }
  constexpr double extent() const noexcept { return width() > height() ? width() : height(); }

  constexpr Point top_left() const noexcept { return {x_left, y_top}; }
  constexpr Point top_right() const noexcept { return {x_right, y_top}; }
  constexpr Point bottom_left() const noexcept { return {x_left, y_bottom}; }
  constexpr Point bottom_right() const noexcept { return {x_right, y_bottom}; }

  friend constexpr bool operator==(const Window&, const Window&) = default;
};

using Region = Window;

class DegenerateWindow : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class NonFinite : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline bool is_finite(const Point& p) noexcept { return std::isfinite(p.x) && std::isfinite(p.y); }
inline bool is_finite(const Segment& s) noexcept { return is_finite(s.a) && is_finite(s.b); }

inline const Window& validate_window(const Window& w) {
  if (!std::isfinite(w.x_left) || !std::isfinite(w.x_right) || !std::isfinite(w.y_bottom) ||
      !std::isfinite(w.y_top)) {
    throw NonFinite("window has a non-finite bound");
  }
  if (!(w.x_left < w.x_right) || !(w.y_bottom < w.y_top)) {
    throw DegenerateWindow("window requires x_left < x_right and y_bottom < y_top");
  }
  return w;
}

inline const Segment& validate_segment(const Segment& s) {
  if (!is_finite(s)) throw NonFinite("segment has a non-finite coordinate");
  return s;
}

/// Square region `factor` times the window's larger side, centered on the window.
inline Region scaled_region(const Window& w, double factor = 3.0) {
  const double cx = 0.5 * (w.x_left + w.x_right);
  const double cy = 0.5 * (w.y_bottom + w.y_top);
  const double half = 0.5 * factor * w.extent();
  return {cx - half, cx + half, cy - half, cy + half};
}

/// Result of clipping one segment: either rejected, or accepted with the
/// (possibly zero-length) visible part.
class ClipResult {
 public:
  constexpr ClipResult() = default;
  constexpr explicit ClipResult(const Segment& s) : segment_(s) {}

  static constexpr ClipResult rejected() noexcept { return {}; }
  static constexpr ClipResult accepted(const Segment& s) noexcept { return ClipResult(s); }

  constexpr bool is_accepted() const noexcept { return segment_.has_value(); }
  constexpr explicit operator bool() const noexcept { return is_accepted(); }
  const Segment& segment() const { return segment_.value(); }

  friend constexpr bool operator==(const ClipResult&, const ClipResult&) = default;

 private:
  std::optional<Segment> segment_;
};

/// Instrumentation record. Each clipping call site owns its own instance.
struct Counters {
  std::uint64_t divisions = 0;
  std::uint64_t intersections_computed = 0;
  std::uint64_t predicate_evals = 0;

  void count_division() noexcept { ++divisions; }
  void count_intersection() noexcept { ++intersections_computed; }
  void count_predicate() noexcept { ++predicate_evals; }

  void reset() noexcept { *this = Counters{}; }

  Counters& operator+=(const Counters& o) noexcept {
    divisions += o.divisions;
    intersections_computed += o.intersections_computed;
    predicate_evals += o.predicate_evals;
    return *this;
  }

  friend constexpr bool operator==(const Counters&, const Counters&) = default;
};

/// Drop-in for Counters that records nothing; used on timed paths.
struct NullCounters {
  constexpr void count_division() noexcept {}
  constexpr void count_intersection() noexcept {}
  constexpr void count_predicate() noexcept {}
};

template <class T>
concept CounterSink = requires(T& c) {
  c.count_division();
  c.count_intersection();
  c.count_predicate();
};

/// Number of output endpoints that differ from the corresponding input
/// endpoints. Rejected results move nothing.
inline int moved_endpoints(const Segment& input, const ClipResult& r) noexcept {
  if (!r.is_accepted()) return 0;
  return (r.segment().a != input.a ? 1 : 0) + (r.segment().b != input.b ? 1 : 0);
}

/// Floating-point slack used for the "inside the closed window" contract:
/// `ulps` units in the last place at the window's coordinate scale.
inline double boundary_slack(const Window& w, int ulps = 4) noexcept {
  const double scale = std::fmax(std::fmax(std::fabs(w.x_left), std::fabs(w.x_right)),
                                 std::fmax(std::fabs(w.y_bottom), std::fabs(w.y_top)));
  const double s = std::fmax(scale, std::numeric_limits<double>::min());
  return ulps * (std::nextafter(s, std::numeric_limits<double>::infinity()) - s);
}

inline bool inside_closed(const Point& p, const Window& w, double slack = 0.0) noexcept {
  return p.x >= w.x_left - slack && p.x <= w.x_right + slack && p.y >= w.y_bottom - slack &&
         p.y <= w.y_top + slack;
}

}  // namespace segclip
