#pragma once

// Ground truth for clipping: exact rational Liang-Barsky on the closed
// window, a seeded segment generator, and a differential checker that runs
// any registered clipper against it.
//
// Requires GMP (gmpxx); link with gmpxx and gmp.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "segclip/geom.hpp"
#include "segclip/registry.hpp"
#include "segclip/segment_io.hpp"

namespace segclip::oracle {

using Rational = mpq_class;

struct ExactPoint {
  Rational x;
  Rational y;

  bool operator==(const ExactPoint& o) const { return x == o.x && y == o.y; }
  Point to_double() const { return {x.get_d(), y.get_d()}; }
};

struct ExactSegment {
  ExactPoint a;
  ExactPoint b;
};

/// Empty when the segment misses the closed window.
using ExactResult = std::optional<ExactSegment>;

inline ExactPoint to_exact(const Point& p) {
  // mpq_class(double) is exact for every finite double.
  return {Rational(p.x), Rational(p.y)};
}

namespace detail {

// Constrain t so that p * t <= q. Returns false if the interval empties.
inline bool restrict(const Rational& p, const Rational& q, Rational& t0, Rational& t1) {
  if (sgn(p) == 0) return sgn(q) >= 0;
  Rational r = q / p;
  if (sgn(p) < 0) {
    if (r > t1) return false;
    if (r > t0) t0 = std::move(r);
  } else {
    if (r < t0) return false;
    if (r < t1) t1 = std::move(r);
  }
  return true;
}

}  // namespace detail

/// Exact parametric clip, t in [0, 1], against the closed window. Returns
/// the interval bounds too, for callers that classify results.
struct ExactClip {
  ExactResult segment;
  Rational t_enter;
  Rational t_exit;
};

inline ExactClip exact_clip_detailed(const Segment& s, const Window& w) {
  const ExactPoint a = to_exact(s.a);
  const ExactPoint b = to_exact(s.b);
  const Rational dx = b.x - a.x;
  const Rational dy = b.y - a.y;
  const Rational xl(w.x_left), xr(w.x_right), yb(w.y_bottom), yt(w.y_top);

  ExactClip out{std::nullopt, Rational(0), Rational(1)};
  Rational& t0 = out.t_enter;
  Rational& t1 = out.t_exit;
  if (!detail::restrict(-dx, a.x - xl, t0, t1) || !detail::restrict(dx, xr - a.x, t0, t1) ||
      !detail::restrict(-dy, a.y - yb, t0, t1) || !detail::restrict(dy, yt - a.y, t0, t1)) {
    return out;
  }
  // Endpoints at t == 0 / t == 1 are kept verbatim.
  ExactSegment seg{a, b};
  if (sgn(t0) > 0) seg.a = {a.x + t0 * dx, a.y + t0 * dy};
  if (t1 < 1) seg.b = {a.x + t1 * dx, a.y + t1 * dy};
  out.segment = std::move(seg);
  return out;
}

inline ExactResult exact_clip(const Segment& s, const Window& w) { return exact_clip_detailed(s, w).segment; }

// ---------------------------------------------------------------------------
// Corpus generation

struct GeneratorSpec {
  std::uint64_t seed = 0;
  std::size_t count = 0;
  Region region;
};

/// Endpoint coordinates drawn independently and uniformly from the region,
/// in the order x1, y1, x2, y2. Pure function of the spec.
inline std::vector<Segment> gen_segments(const GeneratorSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_real_distribution<double> ux(spec.region.x_left, spec.region.x_right);
  std::uniform_real_distribution<double> uy(spec.region.y_bottom, spec.region.y_top);
  std::vector<Segment> out;
  out.reserve(spec.count);
  for (std::size_t i = 0; i < spec.count; ++i) {
    Segment s;
    s.a.x = ux(rng);
    s.a.y = uy(rng);
    s.b.x = ux(rng);
    s.b.y = uy(rng);
    out.push_back(s);
  }
  return out;
}

enum class Disposition {
  TriviallyRejected,   // both endpoints strictly beyond the same boundary
  PredicateRejected,   // misses the window, but not trivially
  PartiallyClipped,    // visible, at least one endpoint moved
  FullyInside,         // visible and unchanged
};

inline Disposition classify(const Segment& s, const Window& w) {
  if (!(outcode(s.a, w) & outcode(s.b, w)).inside()) return Disposition::TriviallyRejected;
  const ExactClip c = exact_clip_detailed(s, w);
  if (!c.segment) return Disposition::PredicateRejected;
  return (sgn(c.t_enter) > 0 || c.t_exit < 1) ? Disposition::PartiallyClipped : Disposition::FullyInside;
}

// ---------------------------------------------------------------------------
// Differential checking

struct FailingCase {
  Segment input;
  bool decision_mismatch = false;
  double coordinate_error = 0.0;
};

struct EquivalenceReport {
  std::size_t cases_run = 0;
  std::size_t decision_mismatches = 0;
  std::size_t coordinate_mismatches = 0;
  double max_coordinate_error = 0.0;
  std::vector<FailingCase> failures;

  bool passed() const noexcept { return decision_mismatches == 0 && coordinate_mismatches == 0; }

  /// Associative merge; concatenates failures in argument order.
  EquivalenceReport& operator+=(const EquivalenceReport& o) {
    cases_run += o.cases_run;
    decision_mismatches += o.decision_mismatches;
    coordinate_mismatches += o.coordinate_mismatches;
    max_coordinate_error = std::max(max_coordinate_error, o.max_coordinate_error);
    failures.insert(failures.end(), o.failures.begin(), o.failures.end());
    return *this;
  }
};

/// Absolute tolerance actually applied for a relative `tolerance` on window `w`.
inline double absolute_tolerance(double tolerance, const Window& w) noexcept {
  return tolerance * std::max(1.0, w.extent());
}

namespace detail {

inline double point_error(const Point& p, const ExactPoint& e) {
  const Point d = e.to_double();
  return std::max(std::fabs(p.x - d.x), std::fabs(p.y - d.y));
}

}  // namespace detail

/// Largest coordinate error between a floating-point result and the exact
/// one, comparing the two segments as point sets (endpoint order ignored).
inline double segment_error(const Segment& got, const ExactSegment& want) {
  const double same = std::max(detail::point_error(got.a, want.a), detail::point_error(got.b, want.b));
  const double swapped = std::max(detail::point_error(got.a, want.b), detail::point_error(got.b, want.a));
  return std::min(same, swapped);
}

/// Compares one clipper output with the oracle on one input and folds the
/// outcome into `report`.
inline void record_case(EquivalenceReport& report, const Segment& input, const ClipResult& got,
                        const ExactResult& want, double abs_tol) {
  ++report.cases_run;
  if (got.is_accepted() != want.has_value()) {
    ++report.decision_mismatches;
    report.failures.push_back({input, true, 0.0});
    return;
  }
  if (!want) return;
  const double err = segment_error(got.segment(), *want);
  report.max_coordinate_error = std::max(report.max_coordinate_error, err);
  if (!(err <= abs_tol)) {
    ++report.coordinate_mismatches;
    report.failures.push_back({input, false, err});
  }
}

inline EquivalenceReport check_equivalence(const ClipperEntry& clipper, std::span<const Segment> corpus,
                                           const Window& w, double tolerance) {
  validate_window(w);
  const double abs_tol = absolute_tolerance(tolerance, w);
  EquivalenceReport report;
  for (const Segment& s : corpus) {
    Counters counters;
    record_case(report, s, clipper.clip(s, w, counters), exact_clip(s, w), abs_tol);
  }
  return report;
}

/// `tolerance` is relative: coordinates must agree within
/// tolerance * max(1, window extent).
inline EquivalenceReport check_equivalence(ClipperId id, const GeneratorSpec& spec, const Window& w,
                                           double tolerance) {
  const ClipperEntry& clipper = find_clipper(id);
  const std::vector<Segment> corpus = gen_segments(spec);
  return check_equivalence(clipper, corpus, w, tolerance);
}

struct ReportHeader {
  std::string clipper;
  GeneratorSpec spec;
  Window window;
  double tolerance = 0.0;
};

inline void write_summary(std::ostream& out, const ReportHeader& h, const EquivalenceReport& r) {
  const Region& g = h.spec.region;
  out << "clipper: " << h.clipper << '\n'
      << "seed: " << h.spec.seed << '\n'
      << "count: " << h.spec.count << '\n'
      << "window: " << format_coord(h.window.x_left) << ',' << format_coord(h.window.y_bottom) << ','
      << format_coord(h.window.x_right) << ',' << format_coord(h.window.y_top) << '\n'
      << "region: " << format_coord(g.x_left) << ',' << format_coord(g.y_bottom) << ','
      << format_coord(g.x_right) << ',' << format_coord(g.y_top) << '\n'
      << "tolerance: " << h.tolerance << '\n'
      << "cases_run: " << r.cases_run << '\n'
      << "decision_mismatches: " << r.decision_mismatches << '\n'
      << "coordinate_mismatches: " << r.coordinate_mismatches << '\n'
      << "max_coordinate_error: " << r.max_coordinate_error << '\n'
      << "result: " << (r.passed() ? "PASS" : "FAIL") << '\n';
}

/// Failing inputs in the segment file format, annotated with comments.
inline void write_failures(std::ostream& out, const EquivalenceReport& r) {
  for (const FailingCase& f : r.failures) {
    out << "# " << (f.decision_mismatch ? "decision mismatch" : "coordinate error " + std::to_string(f.coordinate_error))
        << '\n';
    char buf[128];
    std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g", f.input.a.x, f.input.a.y, f.input.b.x, f.input.b.y);
    out << buf << '\n';
  }
}

}  // namespace segclip::oracle
