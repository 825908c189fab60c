#include "polyft/cli.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "polyft/builtin.hpp"
#include "polyft/io.hpp"
#include "polyft/svg.hpp"

namespace polyft {
namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("polyft_cli_test_" + name);
}

TEST(Cli, SolveCube) {
  const Outcome r = call({"solve", "--ball", "cube", "--sites", "[[0,0,0],[1,1,1],[2,0,1]]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  // Sup-norm distances summed by hand at the reported point.
  const double x = j["point"][0], y = j["point"][1], z = j["point"][2];
  auto linf = [](double a, double b, double c) { return std::max({std::abs(a), std::abs(b), std::abs(c)}); };
  const double f = linf(x, y, z) + linf(x - 1, y - 1, z - 1) + linf(x - 2, y, z - 1);
  EXPECT_NEAR(j["value"].get<double>(), f, 1e-9);
  EXPECT_NEAR(f, 2.0, 1e-9);
  EXPECT_TRUE(j["certified"].get<bool>());
}

TEST(Cli, AuditOctahedron) {
  const Outcome r = call({"audit", "--ball", "octahedron", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_json(r.out)["verdict"], "unique_for_all");
}

TEST(Cli, CaseHexagonTriangleSvg) {
  const auto path = temp_path("hex.svg");
  const Outcome r = call({"case", "hexagon_triangle", "--svg", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  std::ifstream f(path);
  std::stringstream ss;
  ss << f.rdbuf();
  EXPECT_NE(ss.str().find("<polygon id=\"ft_set\""), std::string::npos);
  EXPECT_EQ(parse_json(r.out)["svg"].get<std::string>(), ss.str());
  std::filesystem::remove(path);
}

TEST(Cli, CaseIn3dHasVertexDump) {
  const Outcome r = call({"case", "cube_segment"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_FALSE(j.contains("svg"));
  EXPECT_NE(j["vertex_dump"].get<std::string>().find("o ft_set"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(call({"locus", "--ball", "hexagon", "--sites", "[]"}).code, 1);
  EXPECT_EQ(call({"solve", "--ball", "tetrahedron", "--sites", "[[0,0,0]]"}).code, 1);
  EXPECT_EQ(call({"solve", "--ball", "nope", "--sites", "[[0,0]]"}).code, 1);
  EXPECT_EQ(call({"solve", "--ball", "hexagon", "--sites", "[[0,0"}).code, 1);
  EXPECT_EQ(call({"solve", "--ball", "hexagon", "--sites", "[[0,0,0]]"}).code, 1);
  EXPECT_EQ(call({"solve", "--ball", "hexagon"}).code, 1);
  EXPECT_EQ(call({"frobnicate"}).code, 1);
  EXPECT_EQ(call({"consistent-sets", "--ball", "dodecahedron", "--n", "3", "--budget", "1"}).code, 2);
  const Outcome failed = call({"case", "prism_nonunique(8)"});
  EXPECT_EQ(failed.code, 3);
  EXPECT_FALSE(parse_json(failed.out)["passed"].get<bool>());
  EXPECT_EQ(call({"case", "sphere"}).code, 1);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("FT_TOLERANCE", "1e-7", 1);
  const Outcome r = call({"solve", "--ball", "hexagon", "--sites", "[[0,0],[1,0]]"});
  EXPECT_EQ(parse_json(r.out)["tolerance"].get<double>(), 1e-7);
  const Outcome flag = call({"solve", "--ball", "hexagon", "--sites", "[[0,0],[1,0]]", "--tolerance", "1e-8"});
  EXPECT_EQ(parse_json(flag.out)["tolerance"].get<double>(), 1e-8);
  ::setenv("FT_TOLERANCE", "abc", 1);
  EXPECT_EQ(call({"solve", "--ball", "hexagon", "--sites", "[[0,0],[1,0]]"}).code, 1);
  ::unsetenv("FT_TOLERANCE");
  EXPECT_EQ(call({"solve", "--ball", "hexagon", "--sites", "[[0,0]]", "--tolerance", "-1"}).code, 1);
}

TEST(Cli, SceneFileAndRoundTrip) {
  const auto path = temp_path("scene.json");
  {
    std::ofstream f(path);
    f << R"({"ball": {"vertices": [[1,0],[0,1],[-1,0],[0,-1]]}, "sites": [[0,0],[2,0],[4,0]], "n": 3})";
  }
  const Outcome r = call({"locus", "--scene", path.string()});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_EQ(j["ball"], "inline");
  EXPECT_EQ(j["ft_set"]["tag"], "point");
  // The emitted sites and set read back as points.
  const auto sites = points_from_json(j["sites"], 2);
  const auto verts = points_from_json(j["ft_set"]["vertices"], 2);
  ASSERT_EQ(verts.size(), 1u);
  EXPECT_LT((verts[0] - sites[1]).norm(), 1e-12);
  EXPECT_EQ(call({"audit", "--scene", path.string(), "--criterion", "plane"}).code, 0);
  std::filesystem::remove(path);
}

TEST(Cli, ByteIdenticalOutput) {
  const std::vector<std::string> args{"locus", "--ball", "hexagon", "--sites", "[[0,0],[1,0],[0.5,0.8660254037844386]]"};
  EXPECT_EQ(call(args).out, call(args).out);
  const std::vector<std::string> c{"case", "dodecahedron_segment"};
  EXPECT_EQ(call(c).out, call(c).out);
}

TEST(Cli, VerifyRefutes) {
  const Outcome r = call({"verify", "--ball", "square2d", "--sites", "[[0,0],[1,0],[5,5]]", "--point", "[3,3]"});
  ASSERT_EQ(r.code, 0) << r.err;
  const Json j = parse_json(r.out);
  EXPECT_FALSE(j["certified"].get<bool>());
  EXPECT_TRUE(j.contains("refutation"));
}

TEST(Cli, ConsistentSetsAndOracle) {
  const Outcome r = call({"consistent-sets", "--ball", "hexagon", "--n", "3"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(parse_json(r.out)["count"], 1);
  const Outcome o = call({"oracle-check", "--ball", "hexagon", "--sites", "[[0,0],[1,0],[0.5,0.8660254037844386]]"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_TRUE(parse_json(o.out).contains("non_unique_evidence"));
}

TEST(Svg, Rendering) {
  const Instance line{builtin_ball("hexagon"), {Vector{{0, 0}}, Vector{{1, 0}}, Vector{{2, 0}}}};
  const FTSet mid = ft_locus(line);
  const std::string svg = render_svg(line, &mid);
  EXPECT_NE(svg.find("<circle id=\"ft_set\""), std::string::npos);
  EXPECT_EQ(svg, render_svg(line, &mid));
  const Instance cube{builtin_ball("cube"), {Vector{{0, 0, 0}}}};
  try {
    render_svg(cube, nullptr);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongDimension);
  }
  EXPECT_THROW(render_svg(Instance{builtin_ball("hexagon"), {}}, nullptr), Error);
}

TEST(Json, TwelveDigits) {
  EXPECT_EQ(round12(0.1 + 0.2), 0.3);
  EXPECT_EQ(dump(Json(round12(-0.0))), "0.0\n");
  EXPECT_EQ(round12(1.0 / 3.0), 0.333333333333);
}

}  // namespace
}  // namespace polyft
