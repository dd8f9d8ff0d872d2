#pragma once

/**
 * Segment clipping by quadrilateral concavity.
 *
 * For an endpoint A outside a window boundary segment CD and the other
 * endpoint B across the boundary line, the quadrilateral A-D-B-C is convex
 * exactly when AB crosses CD. Convexity at a window corner reduces to the
 * sign of the z component of (C - B) x (A - C), so each boundary needs two
 * orientation tests and an intersection is computed only after both pass.
 * No intersection point is ever computed that does not end up on the
 * clipped segment, and every intersection costs exactly one division.
 *
 * clip_endpoint() processes one endpoint (x-boundaries, then y-boundaries);
 * clip_segment() calls it for A and then for B, the second call seeing the
 * already-updated A.
 */

#include "segclip/geom.hpp"

namespace segclip::quad {

/// z component of (corner - p2) x (p1 - corner).
///
/// Zero means p1, p2 and corner are collinear. For the corner tests below a
/// zero value never rejects, so segments that graze a corner are kept as a
/// single point.
constexpr double quad_orientation(const Point& p1, const Point& p2, const Point& corner) noexcept {
  return (corner.x - p2.x) * (p1.y - corner.y) - (corner.y - p2.y) * (p1.x - corner.x);
}

/// Crossing of the line through p1, p2 with the vertical line x = x_b.
/// Requires p1.x != p2.x. The returned x is exactly x_b.
template <CounterSink Sink>
constexpr Point intersect_vertical(const Point& p1, const Point& p2, double x_b, Sink& counters) noexcept {
  counters.count_division();
  counters.count_intersection();
  return {x_b, p1.y + (p2.y - p1.y) * (x_b - p1.x) / (p2.x - p1.x)};
}

/// Crossing of the line through p1, p2 with the horizontal line y = y_b.
/// Requires p1.y != p2.y. The returned y is exactly y_b.
template <CounterSink Sink>
constexpr Point intersect_horizontal(const Point& p1, const Point& p2, double y_b, Sink& counters) noexcept {
  counters.count_division();
  counters.count_intersection();
  return {p1.x + (p2.x - p1.x) * (y_b - p1.y) / (p2.y - p1.y), y_b};
}

/// Outcome of processing one endpoint.
struct EndpointOutcome {
  enum class Kind { RejectedTrivially, Continue };

  Kind kind = Kind::RejectedTrivially;
  Point updated;      // meaningful only for Continue
  int intersect = 0;  // display flag: 1 keep, 0 reject

  static constexpr EndpointOutcome rejected_trivially() noexcept { return {}; }
  static constexpr EndpointOutcome carry_on(Point p, int flag) noexcept {
    return {Kind::Continue, p, flag};
  }

  constexpr bool trivially_rejected() const noexcept { return kind == Kind::RejectedTrivially; }
  constexpr bool displays() const noexcept { return kind == Kind::Continue && intersect == 1; }

  friend constexpr bool operator==(const EndpointOutcome&, const EndpointOutcome&) = default;
};

/**
 * Moves p1 onto the window boundary where the segment p1-p2 enters, or
 * reports that it misses.
 *
 * The x-section runs first; the y-section then reads the possibly updated
 * p1 together with the original p2. A corner test that rejects only sets
 * the flag to 0 and falls through, and the y-section always overwrites the
 * flag, so the result reflects the last assignment. Segments whose x-section
 * verdict gets overwritten are caught by the second call in clip_segment().
 */
template <CounterSink Sink>
constexpr EndpointOutcome clip_endpoint(Point p1, const Point& p2, const Window& w, Sink& counters) noexcept {
  int intersect = 0;

  auto test = [&](const Point& corner) {
    counters.count_predicate();
    return quad_orientation(p1, p2, corner);
  };

  if (p1.x < w.x_left) {
    if (p2.x < w.x_left) return EndpointOutcome::rejected_trivially();
    if (test(w.top_left()) < 0) {
      intersect = 0;
    } else if (test(w.bottom_left()) > 0) {
      intersect = 0;
    } else {
      p1 = intersect_vertical(p1, p2, w.x_left, counters);
      intersect = 1;
    }
  } else if (p1.x > w.x_right) {
    if (p2.x > w.x_right) return EndpointOutcome::rejected_trivially();
    if (test(w.top_right()) > 0) {
      intersect = 0;
    } else if (test(w.bottom_right()) < 0) {
      intersect = 0;
    } else {
      p1 = intersect_vertical(p1, p2, w.x_right, counters);
      intersect = 1;
    }
  } else {
    intersect = 1;
  }

  if (p1.y < w.y_bottom) {
    if (p2.y < w.y_bottom) return EndpointOutcome::rejected_trivially();
    if (test(w.bottom_left()) < 0) {
      intersect = 0;
    } else if (test(w.bottom_right()) > 0) {
      intersect = 0;
    } else {
      p1 = intersect_horizontal(p1, p2, w.y_bottom, counters);
      intersect = 1;
    }
  } else if (p1.y > w.y_top) {
    if (p2.y > w.y_top) return EndpointOutcome::rejected_trivially();
    if (test(w.top_left()) > 0) {
      intersect = 0;
    } else if (test(w.top_right()) < 0) {
      intersect = 0;
    } else {
      p1 = intersect_horizontal(p1, p2, w.y_top, counters);
      intersect = 1;
    }
  } else {
    intersect = 1;
  }

  return EndpointOutcome::carry_on(p1, intersect);
}

/// Two-call protocol: clip A against B, then B against the updated A.
template <CounterSink Sink>
constexpr ClipResult clip_segment(const Segment& s, const Window& w, Sink& counters) noexcept {
  const EndpointOutcome first = clip_endpoint(s.a, s.b, w, counters);
  if (!first.displays()) return ClipResult::rejected();
  const EndpointOutcome second = clip_endpoint(s.b, first.updated, w, counters);
  if (!second.displays()) return ClipResult::rejected();
  return ClipResult::accepted({first.updated, second.updated});
}

inline ClipResult clip_segment(const Segment& s, const Window& w) noexcept {
  NullCounters none;
  return clip_segment(s, w, none);
}

}  // namespace segclip::quad
