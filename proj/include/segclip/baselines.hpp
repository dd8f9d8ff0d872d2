#pragma once

// Reference clippers used as benchmark comparators. Both are instrumented
// through the same CounterSink interface as quadclip so that the number of
// intersections they compute can be compared directly.

#include <cstdint>

#include "segclip/geom.hpp"

namespace segclip {

/// Cohen-Sutherland region code. Boundary points get code 0.
struct Outcode {
  enum Bit : std::uint8_t { None = 0, Left = 1, Right = 2, Bottom = 4, Top = 8 };

  std::uint8_t bits = None;

  constexpr bool inside() const noexcept { return bits == None; }
  constexpr bool has(Bit b) const noexcept { return (bits & b) != 0; }
  constexpr bool left() const noexcept { return has(Left); }
  constexpr bool right() const noexcept { return has(Right); }
  constexpr bool bottom() const noexcept { return has(Bottom); }
  constexpr bool top() const noexcept { return has(Top); }

  friend constexpr Outcode operator&(Outcode l, Outcode r) noexcept {
    return {static_cast<std::uint8_t>(l.bits & r.bits)};
  }
  friend constexpr Outcode operator|(Outcode l, Outcode r) noexcept {
    return {static_cast<std::uint8_t>(l.bits | r.bits)};
  }
  friend constexpr bool operator==(Outcode, Outcode) = default;
};

constexpr Outcode outcode(const Point& p, const Window& w) noexcept {
  std::uint8_t c = Outcode::None;
  if (p.x < w.x_left) {
    c |= Outcode::Left;
  } else if (p.x > w.x_right) {
    c |= Outcode::Right;
  }
  if (p.y < w.y_bottom) {
    c |= Outcode::Bottom;
  } else if (p.y > w.y_top) {
    c |= Outcode::Top;
  }
  return {c};
}

namespace cs {

/// Cohen-Sutherland. Outcodes are recomputed after every intersection and
/// the outside endpoint is pushed to the first violated boundary in the
/// order left, right, bottom, top. Every boundary-line intersection counts,
/// including those later discarded.
template <CounterSink Sink>
constexpr ClipResult clip(const Segment& s, const Window& w, Sink& counters) noexcept {
  Point a = s.a;
  Point b = s.b;
  for (;;) {
    counters.count_predicate();
    const Outcode ca = outcode(a, w);
    counters.count_predicate();
    const Outcode cb = outcode(b, w);
    if ((ca | cb).inside()) return ClipResult::accepted({a, b});
    if (!(ca & cb).inside()) return ClipResult::rejected();

    const bool move_a = !ca.inside();
    const Outcode out = move_a ? ca : cb;
    Point& p = move_a ? a : b;
    const Point& q = move_a ? b : a;

    counters.count_division();
    counters.count_intersection();
    if (out.left()) {
      p = {w.x_left, p.y + (q.y - p.y) * (w.x_left - p.x) / (q.x - p.x)};
    } else if (out.right()) {
      p = {w.x_right, p.y + (q.y - p.y) * (w.x_right - p.x) / (q.x - p.x)};
    } else if (out.bottom()) {
      p = {p.x + (q.x - p.x) * (w.y_bottom - p.y) / (q.y - p.y), w.y_bottom};
    } else {
      p = {p.x + (q.x - p.x) * (w.y_top - p.y) / (q.y - p.y), w.y_top};
    }
  }
}

inline ClipResult clip(const Segment& s, const Window& w) noexcept {
  NullCounters none;
  return clip(s, w, none);
}

}  // namespace cs

namespace lb {

/// Liang-Barsky on the parametric segment a + t (b - a), t in [0, 1].
/// Each boundary with a nonzero direction component costs one division
/// whether or not it ends up bounding the result; the intersection counter
/// tracks only endpoints actually replaced. A replaced endpoint gets the
/// bounding edge's coordinate exactly, so results never sit a rounding error
/// outside the window.
template <CounterSink Sink>
constexpr ClipResult clip(const Segment& s, const Window& w, Sink& counters) noexcept {
  enum Edge { Left, Right, Bottom, Top, NoEdge };

  const double dx = s.b.x - s.a.x;
  const double dy = s.b.y - s.a.y;
  double t_enter = 0.0;
  double t_exit = 1.0;
  Edge enter_edge = NoEdge;
  Edge exit_edge = NoEdge;

  // p * t <= q for each boundary.
  auto edge = [&](double p, double q, Edge e) {
    counters.count_predicate();
    if (p == 0.0) return q >= 0.0;
    counters.count_division();
    const double r = q / p;
    if (p < 0.0) {
      if (r > t_exit) return false;
      if (r > t_enter) {
        t_enter = r;
        enter_edge = e;
      }
    } else {
      if (r < t_enter) return false;
      if (r < t_exit) {
        t_exit = r;
        exit_edge = e;
      }
    }
    return true;
  };

  if (!edge(-dx, s.a.x - w.x_left, Left)) return ClipResult::rejected();
  if (!edge(dx, w.x_right - s.a.x, Right)) return ClipResult::rejected();
  if (!edge(-dy, s.a.y - w.y_bottom, Bottom)) return ClipResult::rejected();
  if (!edge(dy, w.y_top - s.a.y, Top)) return ClipResult::rejected();

  auto point_at = [&](double t, Edge e) {
    Point p{s.a.x + t * dx, s.a.y + t * dy};
    switch (e) {
      case Left: p.x = w.x_left; break;
      case Right: p.x = w.x_right; break;
      case Bottom: p.y = w.y_bottom; break;
      case Top: p.y = w.y_top; break;
      case NoEdge: break;
    }
    return p;
  };

  Segment out = s;
  if (t_enter > 0.0) {
    counters.count_intersection();
    out.a = point_at(t_enter, enter_edge);
  }
  if (t_exit < 1.0) {
    counters.count_intersection();
    out.b = point_at(t_exit, exit_edge);
  }
  return ClipResult::accepted(out);
}

inline ClipResult clip(const Segment& s, const Window& w) noexcept {
  NullCounters none;
  return clip(s, w, none);
}

}  // namespace lb

}  // namespace segclip
