#pragma once

#include <array>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "segclip/baselines.hpp"
#include "segclip/geom.hpp"
#include "segclip/quadclip.hpp"

namespace segclip {

enum class ClipperId { QuadClip, CohenSutherland, LiangBarsky };

class UnknownClipper : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

using InstrumentedClipFn = ClipResult (*)(const Segment&, const Window&, Counters&);
/// Clips every segment of `in` into `out` (same length) with no instrumentation.
using BatchClipFn = void (*)(std::span<const Segment> in, const Window&, std::span<ClipResult> out);

struct ClipperEntry {
  ClipperId id;
  std::string_view name;  // short name used on the command line and in CSV output
  std::string_view display_name;
  InstrumentedClipFn clip;
  BatchClipFn clip_batch;  // used on timed paths
};

namespace detail {

template <ClipResult (*Clip)(const Segment&, const Window&)>
void clip_batch(std::span<const Segment> in, const Window& w, std::span<ClipResult> out) {
  for (std::size_t i = 0; i < in.size(); ++i) out[i] = Clip(in[i], w);
}

inline ClipResult quad_instrumented(const Segment& s, const Window& w, Counters& c) { return quad::clip_segment(s, w, c); }
inline ClipResult cs_instrumented(const Segment& s, const Window& w, Counters& c) { return cs::clip(s, w, c); }
inline ClipResult lb_instrumented(const Segment& s, const Window& w, Counters& c) { return lb::clip(s, w, c); }

}  // namespace detail

// New algorithms are added here; bench and verify pick them up unchanged.
// QuadClip must stay first: bench ratios are taken against it.
inline constexpr std::array<ClipperEntry, 3> kClippers{{
    {ClipperId::QuadClip, "quadclip", "QuadClip", &detail::quad_instrumented, &detail::clip_batch<&quad::clip_segment>},
    {ClipperId::CohenSutherland, "cs", "CohenSutherland", &detail::cs_instrumented, &detail::clip_batch<&cs::clip>},
    {ClipperId::LiangBarsky, "lb", "LiangBarsky", &detail::lb_instrumented, &detail::clip_batch<&lb::clip>},
}};

inline std::span<const ClipperEntry> registered_clippers() noexcept { return kClippers; }

inline const ClipperEntry& find_clipper(ClipperId id) {
  for (const ClipperEntry& e : kClippers) {
    if (e.id == id) return e;
  }
  throw UnknownClipper("clipper id " + std::to_string(static_cast<int>(id)) + " is not registered");
}

inline const ClipperEntry& find_clipper(std::string_view name) {
  for (const ClipperEntry& e : kClippers) {
    if (e.name == name) return e;
  }
  throw UnknownClipper("unknown clipper '" + std::string(name) + "'");
}

}  // namespace segclip
