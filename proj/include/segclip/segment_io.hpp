#pragma once

// Plain-text segment files: one segment per line as `x1 y1 x2 y2`,
// `#` starts a comment line, blank lines are skipped.

#include <array>
#include <charconv>
#include <cstdio>
#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "segclip/geom.hpp"

namespace segclip {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

namespace detail {

inline bool is_space(char c) noexcept {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) noexcept {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses one non-comment line. Throws ParseError tagged with `line_no`.
inline Segment parse_segment_line(std::string_view text, std::size_t line_no) {
  std::array<double, 4> v{};
  std::size_t n = 0;
  std::string_view rest = detail::trim(text);
  while (!rest.empty()) {
    if (n == v.size()) throw ParseError(line_no, "expected 4 numbers, found more");
    std::size_t end = 0;
    while (end < rest.size() && !detail::is_space(rest[end])) ++end;
    const std::string_view tok = rest.substr(0, end);
    // from_chars rejects a leading '+'; accept it like strtod does.
    std::string_view num = tok;
    if (num.size() > 1 && num.front() == '+') num.remove_prefix(1);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(num.data(), num.data() + num.size(), value);
    if (ec != std::errc{} || ptr != num.data() + num.size()) {
      throw ParseError(line_no, "not a number: '" + std::string(tok) + "'");
    }
    if (!std::isfinite(value)) throw ParseError(line_no, "non-finite value '" + std::string(tok) + "'");
    v[n++] = value;
    rest = detail::trim(rest.substr(end));
  }
  if (n != v.size()) {
    throw ParseError(line_no, "expected 4 numbers, found " + std::to_string(n));
  }
  return {{v[0], v[1]}, {v[2], v[3]}};
}

inline std::vector<Segment> read_segments(std::istream& in) {
  std::vector<Segment> out;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = detail::trim(line);
    if (body.empty() || body.front() == '#') continue;
    out.push_back(parse_segment_line(body, line_no));
  }
  return out;
}

/// Fixed 9-significant-digit formatting so output files are stable.
inline std::string format_coord(double v) {
  if (v == 0.0) v = 0.0;  // fold -0 into 0
  char buf[32];
  const int len = std::snprintf(buf, sizeof buf, "%.9g", v);
  return std::string(buf, static_cast<std::size_t>(len));
}

inline std::string format_segment(const Segment& s) {
  return format_coord(s.a.x) + ' ' + format_coord(s.a.y) + ' ' + format_coord(s.b.x) + ' ' +
         format_coord(s.b.y);
}

inline void write_segments(std::ostream& out, std::span<const Segment> segments) {
  for (const Segment& s : segments) out << format_segment(s) << '\n';
}

}  // namespace segclip
