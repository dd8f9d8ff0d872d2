#pragma once

// Command implementations behind the segclip tool. Argument parsing lives in
// tools/segclip.cpp; everything here works on plain option structs and
// streams so it can be driven from tests.

#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "segclip/bench.hpp"
#include "segclip/geom.hpp"
#include "segclip/oracle.hpp"
#include "segclip/registry.hpp"
#include "segclip/segment_io.hpp"
#include "segclip/svg.hpp"

namespace segclip::cli {

enum ExitStatus : int { kOk = 0, kUsageError = 1, kMismatch = 2 };

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline std::vector<double> parse_number_list(std::string_view text, std::string_view what) {
  std::vector<double> out;
  while (true) {
    const std::size_t comma = text.find(',');
    std::string_view tok = segclip::detail::trim(text.substr(0, comma));
    if (tok.size() > 1 && tok.front() == '+') tok.remove_prefix(1);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size()) {
      throw UsageError("invalid " + std::string(what) + ": '" + std::string(text) + "'");
    }
    out.push_back(v);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return out;
}

}  // namespace detail

/// Parses `xL,yB,xR,yT` and validates the result.
inline Window parse_window(std::string_view text) {
  const auto v = detail::parse_number_list(text, "window");
  if (v.size() != 4) throw UsageError("window needs 4 values xL,yB,xR,yT");
  return validate_window(Window{v[0], v[2], v[1], v[3]});
}

inline std::vector<std::size_t> parse_sizes(std::string_view text) {
  std::vector<std::size_t> out;
  for (double v : detail::parse_number_list(text, "sizes")) {
    if (!(v >= 1) || v != std::floor(v) || v > 1e12) throw UsageError("sizes must be positive integers");
    out.push_back(static_cast<std::size_t>(v));
  }
  return out;
}

inline std::string format_window(const Window& w) {
  return format_coord(w.x_left) + ',' + format_coord(w.y_bottom) + ',' + format_coord(w.x_right) + ',' +
         format_coord(w.y_top);
}

/// Reads a segment file, "-" meaning `fallback`.
inline std::vector<Segment> load_segments(const std::string& path, std::istream& fallback = std::cin) {
  if (path == "-") return read_segments(fallback);
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  return read_segments(in);
}

/// Opens `path` for writing, or hands back `fallback` for "" / "-".
class OutputTarget {
 public:
  OutputTarget(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw std::runtime_error("cannot write '" + path + "'");
      stream_ = &file_;
    }
  }
  std::ostream& get() { return *stream_; }
  void finish() {
    stream_->flush();
    if (!*stream_) throw std::runtime_error("write failed");
  }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

struct ClipCommand {
  std::string input = "-";
  std::string output;
  Window window{0, 10, 0, 10};
  std::string algo = "quadclip";
};

struct ClipSummary {
  std::size_t read = 0;
  std::size_t accepted = 0;
  std::size_t rejected = 0;
};

inline std::vector<Segment> clip_all(const ClipperEntry& clipper, std::span<const Segment> in, const Window& w,
                                     ClipSummary& summary) {
  std::vector<Segment> out;
  for (const Segment& s : in) {
    Counters counters;
    const ClipResult r = clipper.clip(s, w, counters);
    ++summary.read;
    if (r) {
      ++summary.accepted;
      out.push_back(r.segment());
    } else {
      ++summary.rejected;
    }
  }
  return out;
}

inline int run_clip(const ClipCommand& cmd, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  try {
    const ClipperEntry& clipper = find_clipper(cmd.algo);
    validate_window(cmd.window);
    const auto segments = load_segments(cmd.input, in);
    ClipSummary summary;
    const auto clipped = clip_all(clipper, segments, cmd.window, summary);
    OutputTarget target(cmd.output, out);
    write_segments(target.get(), clipped);
    target.finish();
    err << "read " << summary.read << ", accepted " << summary.accepted << ", rejected " << summary.rejected
        << '\n';
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

struct RenderCommand {
  std::string input = "-";
  std::string output;
  Window window{0, 10, 0, 10};
  std::string algo = "quadclip";
  std::optional<Region> region;  // framed area; defaults to the bounding box of window and inputs
};

inline int run_render(const RenderCommand& cmd, std::ostream& out, std::ostream& err, std::istream& in = std::cin) {
  try {
    const ClipperEntry& clipper = find_clipper(cmd.algo);
    validate_window(cmd.window);
    const auto segments = load_segments(cmd.input, in);
    ClipSummary summary;
    const auto clipped = clip_all(clipper, segments, cmd.window, summary);
    const Region frame = cmd.region ? validate_window(*cmd.region) : svg::bounding_region(cmd.window, segments);
    OutputTarget target(cmd.output, out);
    svg::render(target.get(), cmd.window, frame, segments, clipped);
    target.finish();
    err << "read " << summary.read << ", accepted " << summary.accepted << ", rejected " << summary.rejected
        << '\n';
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

struct BenchCommand {
  bench::BenchConfig config;
  std::string output;
  bool compare = true;  // print published ratios next to measured ones on `err`
};

inline int run_bench(const BenchCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const bench::SuiteResult result = bench::run_suite(cmd.config);
    OutputTarget target(cmd.output, out);
    bench::write_csv(target.get(), result.rows);
    target.finish();
    err << "seed " << cmd.config.seed << ", iterations " << cmd.config.iterations << ", window "
        << format_window(cmd.config.window) << ", region " << format_window(cmd.config.region) << '\n';
    if (!result.checksums_agree()) err << "warning: clippers produced different checksums\n";
    if (cmd.compare) bench::write_comparison(err, result.rows);
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

struct VerifyCommand {
  std::string algo = "quadclip";
  oracle::GeneratorSpec spec{7, 100000, scaled_region(Window{0, 10, 0, 10})};
  Window window{0, 10, 0, 10};
  double tolerance = 1e-9;
  std::string report;    // summary destination; "" prints to `out`
  std::string failures;  // optional segment file of failing inputs
};

inline int run_verify(const VerifyCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    const ClipperEntry& clipper = find_clipper(cmd.algo);
    validate_window(cmd.window);
    validate_window(cmd.spec.region);
    const auto report = oracle::check_equivalence(clipper.id, cmd.spec, cmd.window, cmd.tolerance);
    OutputTarget target(cmd.report, out);
    oracle::write_summary(target.get(), {std::string(clipper.name), cmd.spec, cmd.window, cmd.tolerance}, report);
    target.finish();
    if (!cmd.failures.empty()) {
      std::ofstream f(cmd.failures);
      if (!f) throw std::runtime_error("cannot write '" + cmd.failures + "'");
      oracle::write_failures(f, report);
    }
    return report.passed() ? kOk : kMismatch;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

struct GenCommand {
  oracle::GeneratorSpec spec{1, 10, scaled_region(Window{0, 10, 0, 10})};
  std::string output;
};

/// Writes a seeded random corpus at full precision.
inline int run_gen(const GenCommand& cmd, std::ostream& out, std::ostream& err) {
  try {
    validate_window(cmd.spec.region);
    const auto segments = oracle::gen_segments(cmd.spec);
    OutputTarget target(cmd.output, out);
    target.get() << "# seed " << cmd.spec.seed << ", count " << cmd.spec.count << ", region "
                 << format_window(cmd.spec.region) << '\n';
    char buf[128];
    for (const Segment& s : segments) {
      std::snprintf(buf, sizeof buf, "%.17g %.17g %.17g %.17g\n", s.a.x, s.a.y, s.b.x, s.b.y);
      target.get() << buf;
    }
    target.finish();
    return kOk;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace segclip::cli
