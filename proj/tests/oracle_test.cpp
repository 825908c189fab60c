#include "polyft/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "polyft/builtin.hpp"
#include "polyft/linalg.hpp"

namespace polyft {
namespace {

Vector v2(double x, double y) { return Vector{{x, y}}; }
Vector v3(double x, double y, double z) { return Vector{{x, y, z}}; }

TEST(Grid, TwoSitesSegment) {
  // Every point between the two sites is optimal.
  const Instance inst{builtin_ball("manhattan2d"), {v2(0, 0), v2(1, 0)}};
  const GridResult g = grid_minimize(inst, default_grid(inst));
  EXPECT_NEAR(g.min_value, 1.0, 1e-12);
  for (const Vector& c : g.argmin_cells) EXPECT_NEAR(objective(inst, c), 1.0, 1e-4);
  EXPECT_GT(g.argmin_cells.size(), 50u);
}

TEST(Grid, SingleSite) {
  const Instance inst{builtin_ball("hexagon"), {v2(0.25, -0.5)}};
  const GridResult g = grid_minimize(inst, default_grid(inst));
  EXPECT_NEAR(g.min_value, 0.0, 1e-12);
  EXPECT_LT((g.argmin - v2(0.25, -0.5)).norm(), 1e-9);
}

TEST(Grid, NeverBelowTheSolver) {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> u(-2, 2);
  for (const char* name : {"hexagon", "square2d", "octahedron", "cube"}) {
    const PolytopeBall ball = builtin_ball(name);
    for (int t = 0; t < 4; ++t) {
      Instance inst{ball, {}};
      for (int i = 0; i < 4; ++i) {
        Vector s(ball.dim());
        for (int k = 0; k < ball.dim(); ++k) s(k) = u(rng);
        inst.sites.push_back(s);
      }
      const FTPoint p = find_ft_point(inst);
      const GridResult g = grid_minimize(inst, default_grid(inst, 0.05, 2));
      EXPECT_GE(g.min_value, p.value - 1e-9) << name;
      const SectionResult s = section_minimize(inst, default_grid(inst).lo, default_grid(inst).hi);
      EXPECT_GE(s.value, p.value - 1e-9) << name;
      EXPECT_LT(s.value, p.value + 1e-6) << name;
    }
  }
}

TEST(Section, HalfspaceRestriction) {
  const Instance inst{builtin_ball("hexagon"), {v2(0, 0)}};
  const GridSpec box = default_grid(inst);
  const SectionResult r = section_minimize(inst, box.lo, box.hi, std::make_pair(v2(1, 0), 0.5));
  EXPECT_GE(r.point(0), 0.5 - 1e-9);
  EXPECT_NEAR(r.value, norm(inst.ball, v2(0.5, 0)), 1e-7);
}

TEST(Confirm, HexagonTriangle) {
  const PolytopeBall ball = builtin_ball("hexagon");
  const double pi = std::acos(-1.0);
  Instance inst{ball, {}};
  for (int k : {0, 2, 4}) {
    const double a = k * pi / 3, b = (k + 1) * pi / 3;
    inst.sites.push_back(v2((std::cos(a) + std::cos(b)) / 2, (std::sin(a) + std::sin(b)) / 2));
  }
  const FTSet set = ft_locus(inst);
  ASSERT_EQ(set.tag, FTSetTag::Polygon);
  const ConfirmationReport r = confirm_ft_set(inst, set, default_grid(inst));
  EXPECT_LE(r.max_argmin_distance, 0.02);
  EXPECT_GT(r.argmin_cells, 100);
  EXPECT_GT(r.min_ring_margin, 1e-4);
}

TEST(Confirm, CollinearFiveSites) {
  const Instance inst{builtin_ball("manhattan2d"), {v2(0, 0), v2(1, 1), v2(2, 2), v2(3, 3), v2(4, 4)}};
  const FTSet set = ft_locus(inst);
  EXPECT_NO_THROW(confirm_ft_set(inst, set, default_grid(inst)));
}

TEST(Confirm, CubeSegment) {
  const Instance inst{builtin_ball("cube"), {v3(1, 1, 0), v3(1, -1, 0), v3(-1, 1, 0)}};
  const FTSet set = ft_locus(inst);
  ASSERT_EQ(set.tag, FTSetTag::Segment);
  const ConfirmationReport r = confirm_ft_set(inst, set, default_grid(inst));
  EXPECT_LE(r.max_argmin_distance, 0.02);
}

TEST(Confirm, CorruptedSetIsRejected) {
  const Instance inst{builtin_ball("cube"), {v3(1, 1, 0), v3(1, -1, 0), v3(-1, 1, 0)}};
  FTSet set = ft_locus(inst);
  set.vertices[0](0) += 0.1;
  try {
    confirm_ft_set(inst, set, default_grid(inst));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConfirmationFailed);
  }
  // A set that is too small misses argmin cells.
  FTSet shrunk = ft_locus(inst);
  shrunk.vertices[1] = shrunk.vertices[0] + 0.5 * (shrunk.vertices[1] - shrunk.vertices[0]);
  EXPECT_THROW(confirm_ft_set(inst, shrunk, default_grid(inst)), Error);
}

TEST(NonUnique, SegmentAndPoint) {
  const Instance seg{builtin_ball("cube"), {v3(1, 1, 0), v3(1, -1, 0), v3(-1, 1, 0)}};
  const auto ev = confirm_non_unique(seg, default_grid(seg));
  ASSERT_TRUE(ev.has_value());
  EXPECT_GE(ev->separation, 0.1 - 1e-9);
  EXPECT_LE(std::abs(objective(seg, ev->first) - objective(seg, ev->second)), 1e-4);
  const Instance pt{builtin_ball("octahedron"), {v3(1, 0, 0), v3(0, 1, 0), v3(0, 0, 1)}};
  EXPECT_FALSE(confirm_non_unique(pt, default_grid(pt)).has_value());
}

TEST(Confirm, RandomInstancesAgreeWithTheSolver) {
  std::mt19937 rng(11);
  std::uniform_real_distribution<double> u(-1.5, 1.5);
  for (const char* name : {"hexagon", "regular_mgon(8)", "manhattan2d"}) {
    const PolytopeBall ball = builtin_ball(name);
    for (int t = 0; t < 3; ++t) {
      Instance inst{ball, {}};
      for (int i = 0; i < 3 + t; ++i) inst.sites.push_back(v2(u(rng), u(rng)));
      EXPECT_NO_THROW(confirm_ft_set(inst, ft_locus(inst), default_grid(inst))) << name << " " << t;
    }
  }
}

}  // namespace
}  // namespace polyft

namespace polyft {
namespace {

TEST(Soundness, NeverContradictsACertificate) {
  // Grid values never fall below a certified minimum, and stay within the
  // Lipschitz bound C h with C = L sqrt(d) / 2.
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> u(-2, 2);
  for (const std::string& name : suite_names()) {
    const PolytopeBall ball = builtin_ball(name);
    const double h = ball.dim() == 2 ? 0.05 : 0.4;
    for (int t = 0; t < 200; ++t) {
      Instance inst{ball, {}};
      for (int i = 0; i < 3 + t % 3; ++i) inst.sites.push_back(Vector::NullaryExpr(ball.dim(), [&] { return u(rng); }));
      const FTPoint p = find_ft_point(inst);
      ASSERT_TRUE(verify_ft_point(inst, p.point).certified()) << name << " " << t;
      const GridResult g = grid_minimize(inst, default_grid(inst, h, 1));
      EXPECT_GE(g.min_value, p.value - 1e-9) << name << " " << t;
      const double c = lipschitz_constant(inst) * std::sqrt(double(ball.dim())) / 2;
      EXPECT_LE(g.min_value - p.value, c * h + 1e-9) << name << " " << t;
    }
  }
}

}  // namespace
}  // namespace polyft
