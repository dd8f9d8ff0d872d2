#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "segclip/geom.hpp"
#include "segclip/oracle.hpp"
#include "segclip/registry.hpp"

namespace segclip::bench {

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Sum of all accepted output coordinates, each rounded to 6 decimals and
/// kept as an integer count of 1e-6 units so the sum is order independent.
struct Checksum {
  std::int64_t micros = 0;

  void add(double v) noexcept { micros += std::llround(v * 1e6); }
  void add(const ClipResult& r) noexcept {
    if (!r.is_accepted()) return;
    const Segment& s = r.segment();
    add(s.a.x);
    add(s.a.y);
    add(s.b.x);
    add(s.b.y);
  }

  Checksum& operator+=(Checksum o) noexcept {
    micros += o.micros;
    return *this;
  }
  friend constexpr bool operator==(Checksum, Checksum) = default;

  std::string to_string() const {
    const std::uint64_t mag = micros < 0 ? 0 - static_cast<std::uint64_t>(micros) : static_cast<std::uint64_t>(micros);
    char buf[48];
    std::snprintf(buf, sizeof buf, "%s%llu.%06llu", micros < 0 ? "-" : "",
                  static_cast<unsigned long long>(mag / 1000000), static_cast<unsigned long long>(mag % 1000000));
    return buf;
  }
};

struct Timing {
  double total_ms = 0.0;
  Checksum checksum;
};

/// Times one pass of `clipper` over the whole corpus with a monotonic clock.
/// Results go to a preallocated buffer inside the timed region; the checksum
/// is taken afterwards.
inline Timing time_algorithm(const ClipperEntry& clipper, std::span<const Segment> segments, const Window& w) {
  std::vector<ClipResult> out(segments.size());
  const auto start = std::chrono::steady_clock::now();
  clipper.clip_batch(segments, w, out);
  const auto stop = std::chrono::steady_clock::now();

  Timing t;
  t.total_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  for (const ClipResult& r : out) t.checksum.add(r);
  return t;
}

inline Timing time_algorithm(ClipperId id, std::span<const Segment> segments, const Window& w) {
  return time_algorithm(find_clipper(id), segments, w);
}

inline double relative_execution(double benchmark_avg_ms, double proposed_avg_ms) {
  if (proposed_avg_ms == 0.0) throw DivisionByZero("proposed algorithm average time is zero");
  return benchmark_avg_ms / proposed_avg_ms;
}

struct BenchConfig {
  std::vector<std::size_t> sizes{10, 100, 1000, 10000, 100000, 1000000};
  std::size_t iterations = 10;
  std::uint64_t seed = 1;
  Window window{0.0, 10.0, 0.0, 10.0};
  Region region = scaled_region(Window{0.0, 10.0, 0.0, 10.0});
};

inline BenchConfig long_run_config() {
  BenchConfig c;
  c.sizes = {10, 100, 1000, 10000, 100000, 1000000, 10000000};
  c.iterations = 100;
  return c;
}

inline void validate_config(const BenchConfig& c) {
  if (c.iterations < 1) throw std::invalid_argument("iterations must be at least 1");
  if (c.sizes.empty()) throw std::invalid_argument("at least one corpus size is required");
  for (std::size_t i = 0; i < c.sizes.size(); ++i) {
    if (c.sizes[i] == 0) throw std::invalid_argument("corpus sizes must be positive");
    if (i > 0 && c.sizes[i] <= c.sizes[i - 1]) throw std::invalid_argument("corpus sizes must be ascending");
  }
  validate_window(c.window);
  validate_window(c.region);
}

inline constexpr std::uint64_t kWarmupPass = std::numeric_limits<std::uint64_t>::max();

inline constexpr std::uint64_t splitmix64(std::uint64_t x) noexcept {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Corpus seed for one pass at one size.
inline constexpr std::uint64_t pass_seed(std::uint64_t base, std::size_t size, std::uint64_t pass) noexcept {
  return splitmix64(splitmix64(splitmix64(base) ^ size) ^ pass);
}

struct BenchRow {
  std::size_t size = 0;
  ClipperId clipper = ClipperId::QuadClip;
  std::string_view clipper_name;
  double avg_total_ms = 0.0;
  double ratio_vs_quadclip = 0.0;
  Checksum checksum;  // summed over all timed passes
};

struct PassRecord {
  std::size_t size = 0;
  std::size_t pass = 0;
  std::uint64_t seed = 0;
  ClipperId clipper = ClipperId::QuadClip;
  double total_ms = 0.0;
  Checksum checksum;
};

struct SuiteResult {
  std::vector<BenchRow> rows;
  std::vector<PassRecord> passes;

  /// True when every pass produced the same checksum for every clipper.
  bool checksums_agree() const {
    for (std::size_t i = 0; i < passes.size(); ++i) {
      for (std::size_t j = i + 1; j < passes.size() && passes[j].size == passes[i].size &&
                                  passes[j].pass == passes[i].pass;
           ++j) {
        if (passes[j].checksum != passes[i].checksum) return false;
      }
    }
    return true;
  }
};

/// Per size: one discarded warmup pass, then `iterations` passes each over a
/// fresh corpus shared by all clippers. Generation is outside the timed region.
inline SuiteResult run_suite(const BenchConfig& config) {
  validate_config(config);
  const auto clippers = registered_clippers();
  SuiteResult result;

  for (const std::size_t size : config.sizes) {
    {
      const auto corpus = oracle::gen_segments({pass_seed(config.seed, size, kWarmupPass), size, config.region});
      for (const ClipperEntry& c : clippers) time_algorithm(c, corpus, config.window);
    }

    std::vector<double> total_ms(clippers.size(), 0.0);
    std::vector<Checksum> sums(clippers.size());
    for (std::size_t pass = 0; pass < config.iterations; ++pass) {
      const std::uint64_t seed = pass_seed(config.seed, size, pass);
      const auto corpus = oracle::gen_segments({seed, size, config.region});
      for (std::size_t k = 0; k < clippers.size(); ++k) {
        const Timing t = time_algorithm(clippers[k], corpus, config.window);
        total_ms[k] += t.total_ms;
        sums[k] += t.checksum;
        result.passes.push_back({size, pass, seed, clippers[k].id, t.total_ms, t.checksum});
      }
    }

    const double n = static_cast<double>(config.iterations);
    const double quad_avg = total_ms[0] / n;
    for (std::size_t k = 0; k < clippers.size(); ++k) {
      const double avg = total_ms[k] / n;
      result.rows.push_back({size, clippers[k].id, clippers[k].name, avg, relative_execution(avg, quad_avg), sums[k]});
    }
  }
  return result;
}

inline constexpr const char* kCsvHeader = "size,clipper,avg_total_ms,ratio_vs_quadclip,checksum";

inline void write_csv(std::ostream& out, std::span<const BenchRow> rows) {
  out << kCsvHeader << '\n';
  char buf[64];
  for (const BenchRow& r : rows) {
    out << r.size << ',' << r.clipper_name << ',';
    std::snprintf(buf, sizeof buf, "%.6f,%.4f,", r.avg_total_ms, r.ratio_vs_quadclip);
    out << buf << r.checksum.to_string() << '\n';
  }
}

/// Published baseline/QuadClip ratios (i5-1135G7, 100 passes per size), for
/// side-by-side reporting only.
struct PublishedRatio {
  std::size_t size;
  double lb;
  double cs;
};

inline constexpr PublishedRatio kPublishedRatios[] = {
    {10, 1.3665, 1.2919},     {100, 1.2745, 1.1884},    {1000, 1.4713, 1.2266},
    {10000, 1.4241, 1.1833},  {100000, 1.4357, 1.1860}, {1000000, 1.4472, 1.1945},
    {10000000, 1.4452, 1.1941},
};
inline constexpr PublishedRatio kPublishedAverage{0, 1.4092, 1.2092};

/// Human-readable comparison of measured ratios with the published ones.
inline void write_comparison(std::ostream& out, std::span<const BenchRow> rows) {
  auto ratio_of = [&](std::size_t size, ClipperId id) {
    for (const BenchRow& r : rows) {
      if (r.size == size && r.clipper == id) return r.ratio_vs_quadclip;
    }
    return std::numeric_limits<double>::quiet_NaN();
  };
  char buf[160];
  out << "size        LB/Quad  (published)  CS/Quad  (published)\n";
  std::size_t last = 0;
  for (const BenchRow& r : rows) {
    if (r.size == last) continue;
    last = r.size;
    double pub_lb = std::numeric_limits<double>::quiet_NaN(), pub_cs = pub_lb;
    for (const PublishedRatio& p : kPublishedRatios) {
      if (p.size == r.size) {
        pub_lb = p.lb;
        pub_cs = p.cs;
      }
    }
    std::snprintf(buf, sizeof buf, "%-10zu  %7.4f  %11.4f  %7.4f  %11.4f\n", r.size,
                  ratio_of(r.size, ClipperId::LiangBarsky), pub_lb, ratio_of(r.size, ClipperId::CohenSutherland),
                  pub_cs);
    out << buf;
  }
  std::snprintf(buf, sizeof buf, "published overall average: LB/Quad %.4f, CS/Quad %.4f\n", kPublishedAverage.lb,
                kPublishedAverage.cs);
  out << buf;
}

}  // namespace segclip::bench
