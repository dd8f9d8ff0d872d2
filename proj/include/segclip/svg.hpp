#pragma once

#include <algorithm>
#include <ostream>
#include <span>
#include <string>

#include "segclip/geom.hpp"
#include "segclip/segment_io.hpp"

namespace segclip::svg {

struct Style {
  std::string input_stroke = "blue";
  std::string clipped_stroke = "green";
  std::string window_stroke = "black";
  int pixel_size = 800;
  double padding = 0.10;  // fraction of the framed region added on every side
};

/// Bounding box of the window and every segment endpoint.
inline Region bounding_region(const Window& w, std::span<const Segment> segments) {
  Region r = w;
  for (const Segment& s : segments) {
    for (const Point& p : {s.a, s.b}) {
      r.x_left = std::min(r.x_left, p.x);
      r.x_right = std::max(r.x_right, p.x);
      r.y_bottom = std::min(r.y_bottom, p.y);
      r.y_top = std::max(r.y_top, p.y);
    }
  }
  return r;
}

namespace detail {

inline void line(std::ostream& out, const Segment& s, const std::string& stroke, double width) {
  out << "    <line x1=\"" << format_coord(s.a.x) << "\" y1=\"" << format_coord(s.a.y) << "\" x2=\""
      << format_coord(s.b.x) << "\" y2=\"" << format_coord(s.b.y) << "\" stroke=\"" << stroke
      << "\" stroke-width=\"" << format_coord(width) << "\"/>\n";
}

}  // namespace detail

/// Static SVG 1.1: inputs in blue, clipped results in green on top, window
/// outline in black. World y points up; the group transform flips it.
inline void render(std::ostream& out, const Window& w, const Region& frame, std::span<const Segment> inputs,
                   std::span<const Segment> clipped, const Style& style = {}) {
  const double pad_x = style.padding * (frame.x_right - frame.x_left);
  const double pad_y = style.padding * (frame.y_top - frame.y_bottom);
  const double min_x = frame.x_left - pad_x;
  const double max_y = frame.y_top + pad_y;
  const double width = frame.x_right - frame.x_left + 2 * pad_x;
  const double height = frame.y_top - frame.y_bottom + 2 * pad_y;
  const double stroke = 0.002 * std::max(width, height);

  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << style.pixel_size
      << "\" height=\"" << style.pixel_size << "\" viewBox=\"" << format_coord(min_x) << ' '
      << format_coord(-max_y) << ' ' << format_coord(width) << ' ' << format_coord(height)
      << "\" preserveAspectRatio=\"xMidYMid meet\">\n"
      << "  <g transform=\"scale(1,-1)\" stroke-linecap=\"round\">\n";

  for (const Segment& s : inputs) detail::line(out, s, style.input_stroke, stroke);
  for (const Segment& s : clipped) detail::line(out, s, style.clipped_stroke, 2 * stroke);

  out << "    <rect x=\"" << format_coord(w.x_left) << "\" y=\"" << format_coord(w.y_bottom) << "\" width=\""
      << format_coord(w.width()) << "\" height=\"" << format_coord(w.height()) << "\" fill=\"none\" stroke=\""
      << style.window_stroke << "\" stroke-width=\"" << format_coord(2 * stroke) << "\"/>\n"
      << "  </g>\n"
      << "</svg>\n";
}

}  // namespace segclip::svg
