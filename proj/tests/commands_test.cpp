#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "segclip/commands.hpp"
#include "test_support.hpp"

namespace segclip::cli {
namespace {

namespace fs = std::filesystem;

class CommandsTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("segclip_cmd_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write_file(const std::string& name, const std::string& text) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  static std::string read_file(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

std::size_t count(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) ++n;
  return n;
}

TEST(ParseWindow, OrderIsLeftBottomRightTop) {
  EXPECT_EQ(parse_window("0,0,10,10"), (Window{0, 10, 0, 10}));
  EXPECT_EQ(parse_window("-1, 2, 3, 4.5"), (Window{-1, 3, 2, 4.5}));
  EXPECT_THROW(parse_window("0,0,10"), UsageError);
  EXPECT_THROW(parse_window("0,0,10,x"), UsageError);
  EXPECT_THROW(parse_window("10,0,0,10"), DegenerateWindow);
}

TEST(ParseSizes, PositiveIntegers) {
  EXPECT_EQ(parse_sizes("10,100,1e3"), (std::vector<std::size_t>{10, 100, 1000}));
  EXPECT_THROW(parse_sizes("10,0"), UsageError);
  EXPECT_THROW(parse_sizes("2.5"), UsageError);
}

TEST_F(CommandsTest, ClipSingleLine) {
  ClipCommand cmd;
  cmd.input = write_file("in.txt", "-5 5 5 5\n");
  cmd.output = path("out.txt");
  std::ostringstream out, err;
  EXPECT_EQ(run_clip(cmd, out, err), kOk);
  EXPECT_EQ(read_file(cmd.output), "0 5 5 5\n");
  EXPECT_EQ(err.str(), "read 1, accepted 1, rejected 0\n");
}

TEST_F(CommandsTest, ClipEmptyFile) {
  ClipCommand cmd;
  cmd.input = write_file("in.txt", "");
  std::ostringstream out, err;
  EXPECT_EQ(run_clip(cmd, out, err), kOk);
  EXPECT_EQ(out.str(), "");
  EXPECT_EQ(err.str(), "read 0, accepted 0, rejected 0\n");
}

TEST_F(CommandsTest, ClipMalformedLine) {
  ClipCommand cmd;
  cmd.input = write_file("in.txt", "abc\n");
  std::ostringstream out, err;
  EXPECT_EQ(run_clip(cmd, out, err), kUsageError);
  EXPECT_NE(err.str().find("line 1"), std::string::npos);
}

TEST_F(CommandsTest, ClipErrors) {
  std::ostringstream out, err;
  ClipCommand missing;
  missing.input = path("nope.txt");
  EXPECT_EQ(run_clip(missing, out, err), kUsageError);

  ClipCommand bad_window;
  bad_window.input = write_file("in.txt", "1 1 2 2\n");
  bad_window.window = {5, 5, 0, 10};
  EXPECT_EQ(run_clip(bad_window, out, err), kUsageError);

  ClipCommand bad_algo;
  bad_algo.input = bad_window.input;
  bad_algo.algo = "skala";
  EXPECT_EQ(run_clip(bad_algo, out, err), kUsageError);
}

TEST_F(CommandsTest, ClipPreservesOrderAndDropsRejected) {
  ClipCommand cmd;
  cmd.input = write_file("in.txt", "# comment\n2 3 7 8\n-5 2 -1 8\n\n-5 -5 15 15\n");
  std::ostringstream out, err;
  ASSERT_EQ(run_clip(cmd, out, err), kOk);
  EXPECT_EQ(out.str(), "2 3 7 8\n0 0 10 10\n");
  EXPECT_EQ(err.str(), "read 3, accepted 2, rejected 1\n");
}

TEST_F(CommandsTest, ClipFromStdinStream) {
  ClipCommand cmd;
  cmd.input = "-";
  std::istringstream in("-5 5 5 5\n");
  std::ostringstream out, err;
  ASSERT_EQ(run_clip(cmd, out, err, in), kOk);
  EXPECT_EQ(out.str(), "0 5 5 5\n");
}

TEST_F(CommandsTest, ClipOutputIsIdempotentAtFileLevel) {
  GenCommand gen;
  gen.spec = {77, 2000, scaled_region({0, 10, 0, 10})};
  gen.output = path("corpus.txt");
  std::ostringstream out, err;
  ASSERT_EQ(run_gen(gen, out, err), kOk);

  for (const char* algo : {"quadclip", "cs", "lb"}) {
    ClipCommand first;
    first.input = gen.output;
    first.output = path(std::string("once_") + algo);
    first.algo = algo;
    ASSERT_EQ(run_clip(first, out, err), kOk);
    ClipCommand second = first;
    second.input = first.output;
    second.output = path(std::string("twice_") + algo);
    ASSERT_EQ(run_clip(second, out, err), kOk);
    EXPECT_EQ(read_file(first.output), read_file(second.output)) << algo;
  }
}

TEST_F(CommandsTest, AllClippersWriteTheSameFile) {
  GenCommand gen;
  gen.spec = {78, 500, scaled_region({0, 10, 0, 10})};
  gen.output = path("corpus.txt");
  std::ostringstream out, err;
  ASSERT_EQ(run_gen(gen, out, err), kOk);
  std::string reference;
  for (const char* algo : {"quadclip", "cs", "lb"}) {
    ClipCommand cmd;
    cmd.input = gen.output;
    cmd.algo = algo;
    std::ostringstream o;
    ASSERT_EQ(run_clip(cmd, o, err), kOk);
    if (reference.empty()) reference = o.str();
    EXPECT_EQ(o.str(), reference) << algo;
  }
}

TEST_F(CommandsTest, RenderSeededCorpus) {
  GenCommand gen;
  gen.spec = {10, 10, scaled_region({0, 10, 0, 10})};
  gen.output = path("ten.txt");
  std::ostringstream out, err;
  ASSERT_EQ(run_gen(gen, out, err), kOk);

  RenderCommand cmd;
  cmd.input = gen.output;
  cmd.output = path("ten.svg");
  ASSERT_EQ(run_render(cmd, out, err), kOk);
  const std::string svg = read_file(cmd.output);

  std::size_t accepted = 0;
  for (const Segment& s : oracle::gen_segments(gen.spec)) accepted += oracle::exact_clip(s, cmd.window) ? 1 : 0;

  EXPECT_EQ(count(svg, "stroke=\"blue\""), 10u);
  EXPECT_EQ(count(svg, "stroke=\"green\""), accepted);
  EXPECT_EQ(count(svg, "<rect"), 1u);
  EXPECT_NE(svg.find("fill=\"none\" stroke=\"black\""), std::string::npos);
  EXPECT_NE(svg.find("scale(1,-1)"), std::string::npos);
  // Green strokes come after blue ones so they are drawn on top.
  EXPECT_LT(svg.rfind("stroke=\"blue\""), svg.find("stroke=\"green\""));
}

TEST_F(CommandsTest, RenderEmptyInputDrawsOnlyTheWindow) {
  RenderCommand cmd;
  cmd.input = write_file("empty.txt", "");
  std::ostringstream out, err;
  ASSERT_EQ(run_render(cmd, out, err), kOk);
  const std::string svg = out.str();
  EXPECT_EQ(count(svg, "<line"), 0u);
  EXPECT_EQ(count(svg, "<rect"), 1u);
  EXPECT_NE(svg.find("<svg"), std::string::npos);
  // Window framed with 10% padding: viewBox -1 -11 12 12.
  EXPECT_NE(svg.find("viewBox=\"-1 -11 12 12\""), std::string::npos);
}

TEST_F(CommandsTest, RenderInsideSegmentCoincides) {
  RenderCommand cmd;
  cmd.input = write_file("in.txt", "2 3 7 8\n");
  std::ostringstream out, err;
  ASSERT_EQ(run_render(cmd, out, err), kOk);
  const std::regex line_re("<line x1=\"([^\"]+)\" y1=\"([^\"]+)\" x2=\"([^\"]+)\" y2=\"([^\"]+)\" stroke=\"(\\w+)\"");
  std::vector<std::string> geometry;
  const std::string svg = out.str();
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), line_re); it != std::sregex_iterator(); ++it) {
    geometry.push_back((*it)[1].str() + ' ' + (*it)[2].str() + ' ' + (*it)[3].str() + ' ' + (*it)[4].str());
  }
  ASSERT_EQ(geometry.size(), 2u);
  EXPECT_EQ(geometry[0], geometry[1]);
  EXPECT_EQ(geometry[0], "2 3 7 8");
}

TEST_F(CommandsTest, RenderUsesExplicitRegion) {
  RenderCommand cmd;
  cmd.input = write_file("in.txt", "-5 5 5 5\n");
  cmd.region = Region{-10, 20, -10, 20};
  std::ostringstream out, err;
  ASSERT_EQ(run_render(cmd, out, err), kOk);
  EXPECT_NE(out.str().find("viewBox=\"-13 -23 36 36\""), std::string::npos);
}

TEST_F(CommandsTest, VerifyPassesAndWritesReport) {
  VerifyCommand cmd;
  cmd.spec.count = 20000;
  cmd.report = path("report.txt");
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(cmd, out, err), kOk);
  const std::string report = read_file(cmd.report);
  EXPECT_NE(report.find("cases_run: 20000"), std::string::npos);
  EXPECT_NE(report.find("decision_mismatches: 0"), std::string::npos);
  EXPECT_NE(report.find("result: PASS"), std::string::npos);
}

TEST_F(CommandsTest, VerifyEmptyCorpus) {
  VerifyCommand cmd;
  cmd.spec.count = 0;
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(cmd, out, err), kOk);
  EXPECT_NE(out.str().find("cases_run: 0"), std::string::npos);
}

TEST_F(CommandsTest, VerifyMismatchExitsTwo) {
  // A negative tolerance turns every accepted case into a coordinate mismatch.
  VerifyCommand cmd;
  cmd.spec.count = 100;
  cmd.tolerance = -1.0;
  cmd.failures = path("fails.txt");
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(cmd, out, err), kMismatch);
  std::ifstream in(cmd.failures);
  EXPECT_FALSE(read_segments(in).empty());
}

TEST_F(CommandsTest, VerifyUnknownClipper) {
  VerifyCommand cmd;
  cmd.algo = "nln";
  std::ostringstream out, err;
  EXPECT_EQ(run_verify(cmd, out, err), kUsageError);
  EXPECT_NE(err.str().find("nln"), std::string::npos);
}

TEST_F(CommandsTest, BenchTinyConfig) {
  BenchCommand cmd;
  cmd.config.sizes = {10};
  cmd.config.iterations = 1;
  cmd.output = path("bench.csv");
  std::ostringstream out, err;
  ASSERT_EQ(run_bench(cmd, out, err), kOk);
  std::ifstream in(cmd.output);
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(in, line)) lines.push_back(line);
  ASSERT_EQ(lines.size(), 4u);
  EXPECT_EQ(lines[0], bench::kCsvHeader);
  EXPECT_NE(err.str().find("published"), std::string::npos);
}

TEST_F(CommandsTest, GenIsDeterministicAndFullPrecision) {
  GenCommand cmd;
  cmd.spec = {5, 50, scaled_region({0, 10, 0, 10})};
  std::ostringstream a, b, err;
  ASSERT_EQ(run_gen(cmd, a, err), kOk);
  ASSERT_EQ(run_gen(cmd, b, err), kOk);
  EXPECT_EQ(a.str(), b.str());
  std::istringstream in(a.str());
  EXPECT_EQ(read_segments(in), oracle::gen_segments(cmd.spec));
}

}  // namespace
}  // namespace segclip::cli
