// segclip: clip, render, benchmark and verify 2D segment clippers.

#include <CLI11.hpp>

#include <iostream>
#include <optional>
#include <string>

#include "segclip/commands.hpp"

namespace {

using namespace segclip;

// Window/region options are strings so they can be validated together.
struct GeometryArgs {
  std::string window = "0,0,10,10";
  std::string region;  // defaults depend on the command

  Window parsed_window() const { return cli::parse_window(window); }
};

void add_window_option(CLI::App* app, GeometryArgs& g) {
  app->add_option("--window", g.window, "clipping window as xL,yB,xR,yT")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Line segment clipping against an axis-aligned window"};
  app.require_subcommand(1);

  // clip
  cli::ClipCommand clip_cmd;
  GeometryArgs clip_geo;
  auto* clip = app.add_subcommand("clip", "clip a segment file");
  clip->add_option("-i,--in", clip_cmd.input, "input segment file ('-' for stdin)")->capture_default_str();
  clip->add_option("-o,--out", clip_cmd.output, "output segment file (default stdout)");
  clip->add_option("--algo", clip_cmd.algo, "quadclip|cs|lb")->capture_default_str();
  add_window_option(clip, clip_geo);

  // render
  cli::RenderCommand render_cmd;
  GeometryArgs render_geo;
  auto* render = app.add_subcommand("render", "render inputs and clipped segments as SVG");
  render->add_option("-i,--in", render_cmd.input, "input segment file ('-' for stdin)")->capture_default_str();
  render->add_option("-o,--out", render_cmd.output, "output SVG file (default stdout)");
  render->add_option("--algo", render_cmd.algo, "quadclip|cs|lb")->capture_default_str();
  render->add_option("--region", render_geo.region, "framed region xL,yB,xR,yT (default: bounding box)");
  add_window_option(render, render_geo);

  // bench
  cli::BenchCommand bench_cmd;
  GeometryArgs bench_geo;
  std::string sizes;
  std::optional<std::size_t> iterations;
  std::optional<std::uint64_t> bench_seed;
  bool long_run = false;
  bool quiet = false;
  auto* bench = app.add_subcommand("bench", "time all registered clippers on seeded random corpora");
  bench->add_option("--sizes", sizes, "comma-separated ascending corpus sizes (default 10..1e6)");
  bench->add_option("--iterations", iterations, "timed passes per size (default 10)");
  bench->add_option("--seed", bench_seed, "base seed (default 1)");
  bench->add_option("--region", bench_geo.region, "sampling region xL,yB,xR,yT (default: 3x window)");
  bench->add_option("-o,--out", bench_cmd.output, "CSV output (default stdout)");
  bench->add_flag("--long-run", long_run, "sizes up to 1e7 with 100 passes each");
  bench->add_flag("--no-compare", quiet, "do not print published ratios");
  add_window_option(bench, bench_geo);

  // verify
  cli::VerifyCommand verify_cmd;
  GeometryArgs verify_geo;
  auto* verify = app.add_subcommand("verify", "differential check against exact rational clipping");
  verify->add_option("--algo", verify_cmd.algo, "quadclip|cs|lb")->capture_default_str();
  verify->add_option("--seed", verify_cmd.spec.seed, "corpus seed")->capture_default_str();
  verify->add_option("--count", verify_cmd.spec.count, "number of random segments")->capture_default_str();
  verify->add_option("--tolerance", verify_cmd.tolerance, "relative coordinate tolerance")->capture_default_str();
  verify->add_option("--region", verify_geo.region, "sampling region xL,yB,xR,yT (default: 3x window)");
  verify->add_option("--report", verify_cmd.report, "summary output (default stdout)");
  verify->add_option("--failures", verify_cmd.failures, "write failing inputs to this segment file");
  add_window_option(verify, verify_geo);

  // gen
  cli::GenCommand gen_cmd;
  GeometryArgs gen_geo;
  auto* gen = app.add_subcommand("gen", "write a seeded random segment file");
  gen->add_option("--seed", gen_cmd.spec.seed, "corpus seed")->capture_default_str();
  gen->add_option("--count", gen_cmd.spec.count, "number of segments")->capture_default_str();
  gen->add_option("--region", gen_geo.region, "sampling region xL,yB,xR,yT (default: 3x window)");
  gen->add_option("-o,--out", gen_cmd.output, "output file (default stdout)");
  add_window_option(gen, gen_geo);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? cli::kOk : cli::kUsageError;
  }

  try {
    if (*clip) {
      clip_cmd.window = clip_geo.parsed_window();
      return cli::run_clip(clip_cmd, std::cout, std::cerr);
    }
    if (*render) {
      render_cmd.window = render_geo.parsed_window();
      if (!render_geo.region.empty()) render_cmd.region = cli::parse_window(render_geo.region);
      return cli::run_render(render_cmd, std::cout, std::cerr);
    }
    if (*bench) {
      if (long_run) bench_cmd.config = bench::long_run_config();
      // explicit options win over --long-run
      if (iterations) bench_cmd.config.iterations = *iterations;
      if (bench_seed) bench_cmd.config.seed = *bench_seed;
      if (!sizes.empty()) bench_cmd.config.sizes = cli::parse_sizes(sizes);
      bench_cmd.config.window = bench_geo.parsed_window();
      bench_cmd.config.region =
          bench_geo.region.empty() ? scaled_region(bench_cmd.config.window) : cli::parse_window(bench_geo.region);
      bench_cmd.compare = !quiet;
      return cli::run_bench(bench_cmd, std::cout, std::cerr);
    }
    if (*verify) {
      verify_cmd.window = verify_geo.parsed_window();
      verify_cmd.spec.region =
          verify_geo.region.empty() ? scaled_region(verify_cmd.window) : cli::parse_window(verify_geo.region);
      return cli::run_verify(verify_cmd, std::cout, std::cerr);
    }
    if (*gen) {
      gen_cmd.spec.region =
          gen_geo.region.empty() ? scaled_region(gen_geo.parsed_window()) : cli::parse_window(gen_geo.region);
      return cli::run_gen(gen_cmd, std::cout, std::cerr);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::kUsageError;
  }
  return cli::kUsageError;
}
