#include "polyft/solver.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "polyft/builtin.hpp"
#include "polyft/linalg.hpp"

namespace polyft {
namespace {

Vector v2(double x, double y) { return Vector{{x, y}}; }
Vector v3(double x, double y, double z) { return Vector{{x, y, z}}; }

Vector hex(int k) {
  const double a = k * std::numbers::pi / 3.0;
  return v2(std::cos(a), std::sin(a));
}

bool same_set(const std::vector<Vector>& a, const std::vector<Vector>& b, double tol) {
  if (a.size() != b.size()) return false;
  for (const Vector& p : a) {
    bool hit = false;
    for (const Vector& q : b) hit = hit || (p - q).norm() <= tol;
    if (!hit) return false;
  }
  return true;
}

double median3(double a, double b, double c) { return std::max(std::min(a, b), std::min(std::max(a, b), c)); }

TEST(FindFTPoint, OctahedronIsComponentwiseMedian) {
  const Instance inst{builtin_ball("octahedron"), {v3(0, 0, 0), v3(2, 4, 6), v3(1, 1, 1)}};
  const FTPoint p = find_ft_point(inst);
  EXPECT_LT((p.point - v3(1, 1, 1)).norm(), 1e-9);
  EXPECT_NEAR(p.value, 12.0, 1e-9);
}

TEST(FindFTPoint, SingleSite) {
  const Instance inst{builtin_ball("hexagon"), {v2(0.3, -2)}};
  const FTPoint p = find_ft_point(inst);
  EXPECT_LT((p.point - v2(0.3, -2)).norm(), 1e-9);
  EXPECT_NEAR(p.value, 0.0, 1e-12);
}

TEST(FindFTPoint, HexagonTriangleValueMatchesCentroid) {
  const Instance inst{builtin_ball("hexagon"), {v2(0, 0), hex(0), hex(1)}};
  const FTPoint p = find_ft_point(inst);
  const Vector centroid = (hex(0) + hex(1)) / 3.0;
  EXPECT_NEAR(p.value, objective(inst, centroid), 1e-9);
  EXPECT_NEAR(p.value, objective(inst, p.point), 1e-12);
}

TEST(FindFTPoint, RandomOctahedronTriplesMatchMedian) {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> u(-10, 10);
  const PolytopeBall ball = builtin_ball("octahedron");
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> s;
    for (int i = 0; i < 3; ++i) s.push_back(v3(u(rng), u(rng), u(rng)));
    const FTPoint p = find_ft_point({ball, s});
    for (int k = 0; k < 3; ++k) EXPECT_NEAR(p.point(k), median3(s[0](k), s[1](k), s[2](k)), 1e-9);
  }
}

TEST(FindFTPoint, NeverBeatenBySampling) {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> u(-3, 3);
  for (const char* name : {"hexagon", "cube", "dodecahedron"}) {
    const PolytopeBall ball = builtin_ball(name);
    const int d = ball.dim();
    for (int trial = 0; trial < 5; ++trial) {
      Instance inst{ball, {}};
      for (int i = 0; i < 4; ++i) inst.sites.push_back(Vector::NullaryExpr(d, [&] { return u(rng); }));
      const FTPoint p = find_ft_point(inst);
      for (int k = 0; k < 300; ++k) {
        const Vector q = p.point + 0.5 * Vector::NullaryExpr(d, [&] { return u(rng); }) / 3.0;
        EXPECT_GE(objective(inst, q), p.value - 1e-9);
      }
    }
  }
}

TEST(VerifyFTPoint, HexagonCentroidCertificate) {
  const Instance inst{builtin_ball("hexagon"), {v2(0, 0), hex(0), hex(1)}};
  const Vector c = (hex(0) + hex(1)) / 3.0;
  const Verification v = verify_ft_point(inst, c);
  ASSERT_TRUE(v.certified());
  const FTCertificate& cert = *v.certificate;
  EXPECT_FALSE(cert.extension_mode);
  EXPECT_LE(cert.residual, 1e-9);
  EXPECT_GE(cert.slack, 0.0);
  for (int i = 0; i < 3; ++i) {
    const Vector u = inst.sites[i] - c;
    EXPECT_NEAR(cert.functionals[i](u), norm(inst.ball, u), 1e-9);
    EXPECT_NEAR(dual_norm(inst.ball, cert.functionals[i]), 1.0, 1e-9);
    // Each site sees the centroid through the interior of a flattening: unique functional.
    EXPECT_EQ(norming_functionals(inst.ball, u).generators.size(), 1u);
  }
}

TEST(VerifyFTPoint, TwoSitesMidpoint) {
  const Instance inst{builtin_ball("cube"), {v3(0, 0, 0), v3(2, 1, -1)}};
  const Verification v = verify_ft_point(inst, v3(1, 0.5, -0.5));
  ASSERT_TRUE(v.certified());
  EXPECT_LT((v.certificate->functionals[0].coeffs + v.certificate->functionals[1].coeffs).norm(), 1e-9);
}

TEST(VerifyFTPoint, FarPointRefuted) {
  const Instance inst{builtin_ball("hexagon"), {v2(0, 0), hex(0), hex(1)}};
  const Verification v = verify_ft_point(inst, 10.0 * hex(0));
  EXPECT_FALSE(v.certified());
  ASSERT_TRUE(v.refutation.has_value());
  EXPECT_GT(v.refutation->margin, 1e-9);
}

TEST(VerifyFTPoint, CoincidentSite) {
  const Instance inst{builtin_ball("manhattan2d"), {v2(0, 0), v2(1, 0), v2(5, 0)}};
  EXPECT_THROW(
      {
        try {
          verify_ft_point(inst, v2(1, 0), VerifyOptions{false});
        } catch (const Error& e) {
          EXPECT_EQ(e.code(), ErrorCode::CoincidentSite);
          throw;
        }
      },
      Error);
  const Verification v = verify_ft_point(inst, v2(1, 0));
  ASSERT_TRUE(v.certified());
  EXPECT_TRUE(v.certificate->extension_mode);
  EXPECT_EQ(v.certificate->coincident_sites, std::vector<int>{1});
  EXPECT_FALSE(verify_ft_point(inst, v2(0, 0)).certified());
}

TEST(VerifyFTPoint, AgreesWithSamplingOnRandomPoints) {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  const PolytopeBall ball = builtin_ball("hexagon");
  const Instance inst{ball, {v2(0, 0), hex(0), hex(1)}};
  const double fmin = find_ft_point(inst).value;
  for (int k = 0; k < 200; ++k) {
    const Vector x = v2(u(rng), u(rng));
    const bool optimal = objective(inst, x) <= fmin + 1e-9;
    EXPECT_EQ(verify_ft_point(inst, x).certified(), optimal) << x.transpose();
  }
}

TEST(ConeTest, ManhattanVertexRay) {
  const PolytopeBall ball = builtin_ball("manhattan2d");
  // (1, 0.5) exposes only the vertex (1, 0).
  const Cone c = cone(ball, v2(0, 0), Functional{v2(1, 0.5)});
  ASSERT_EQ(c.generators.size(), 1u);
  EXPECT_LT((c.generators[0] - v2(-1, 0)).norm(), 1e-12);
  EXPECT_EQ(c.dim(), 1);
}

TEST(ConeTest, ManhattanEdgeQuarterPlane) {
  const PolytopeBall ball = builtin_ball("manhattan2d");
  const Cone c = cone(ball, v2(0, 0), Functional{v2(1, 1)});
  EXPECT_TRUE(same_set(c.generators, {v2(-1, 0), v2(0, -1)}, 1e-12));
  EXPECT_EQ(c.dim(), 2);
}

TEST(ConeTest, HexagonEdgeAngle) {
  const PolytopeBall ball = builtin_ball("hexagon");
  const Vector mid = (hex(0) + hex(1)) / 2.0;
  const Functional phi{mid / mid.squaredNorm()};
  const Cone c = cone(ball, hex(1), phi);
  EXPECT_TRUE(same_set(c.generators, {-hex(0), -hex(1)}, 1e-12));
}

TEST(ConeTest, RejectsNonNorming) {
  const PolytopeBall ball = builtin_ball("manhattan2d");
  try {
    cone(ball, v2(0, 0), Functional{v2(2, 0)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotNorming);
  }
}

TEST(ConeTest, DimensionIsFaceDimensionPlusOne) {
  for (const char* name : {"cube", "dodecahedron", "prism(6)"}) {
    const PolytopeBall ball = builtin_ball(name);
    for (std::size_t f = 0; f < ball.faces().size(); ++f) {
      const Face& face = ball.face(static_cast<int>(f));
      Vector avg = Vector::Zero(3);
      for (int e : face.exposing_facets) avg += ball.facets()[e].coeffs;
      avg /= static_cast<double>(face.exposing_facets.size());
      const Cone c = cone(ball, Vector::Zero(3), Functional{avg});
      EXPECT_EQ(c.dim(), face.dim + 1) << name << " face " << f;
    }
  }
}

TEST(IntersectCones, HexagonTriangle) {
  const Instance inst{builtin_ball("hexagon"), {v2(0, 0), hex(0), hex(1)}};
  const FTSet set = ft_locus(inst);
  EXPECT_EQ(set.tag, FTSetTag::Polygon);
  EXPECT_TRUE(same_set(set.vertices, inst.sites, 1e-9));
}

TEST(IntersectCones, CollinearRaysMeetAtMiddle) {
  const std::vector<Cone> rays{{v2(0, 0), {v2(1, 0)}}, {v2(1, 0), {v2(1, 0)}}, {v2(5, 0), {v2(-1, 0)}}};
  const FTSet point = intersect_cones({rays[0], rays[2], Cone{v2(1, 0), {v2(-1, 0)}}, rays[1]});
  EXPECT_EQ(point.tag, FTSetTag::Point);
  EXPECT_LT((point.vertices[0] - v2(1, 0)).norm(), 1e-12);
  const FTSet seg = intersect_cones({rays[0], rays[2]});
  EXPECT_EQ(seg.tag, FTSetTag::Segment);
  EXPECT_TRUE(same_set(seg.vertices, {v2(0, 0), v2(5, 0)}, 1e-12));
}

TEST(IntersectCones, EmptyAndUnbounded) {
  try {
    intersect_cones({Cone{v2(0, 0), {v2(-1, 0)}}, Cone{v2(1, 0), {v2(1, 0)}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptyIntersection);
  }
  try {
    intersect_cones({Cone{v2(0, 0), {v2(1, 0), v2(0, 1)}}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnboundedIntersection);
  }
}

TEST(FTLocus, CubeParallelEdgesGiveSegment) {
  // Midpoints of three parallel z-edges; the solution set runs along z.
  const Instance inst{builtin_ball("cube"), {v3(1, 1, 0), v3(1, -1, 0), v3(-1, 1, 0)}};
  const FTSet set = ft_locus(inst);
  EXPECT_EQ(set.tag, FTSetTag::Segment);
  ASSERT_EQ(set.vertices.size(), 2u);
  const Vector dir = set.vertices[1] - set.vertices[0];
  EXPECT_NEAR(std::abs(dir(2)), dir.norm(), 1e-9);
}

TEST(FTLocus, CollinearOddAndEven) {
  for (const char* name : {"manhattan2d", "hexagon"}) {
    const PolytopeBall ball = builtin_ball(name);
    Instance odd{ball, {}};
    for (int k = 1; k <= 5; ++k) odd.sites.push_back(v2(k, 0));
    FTSet s = ft_locus(odd);
    EXPECT_EQ(s.tag, FTSetTag::Point) << name;
    EXPECT_LT((s.vertices[0] - v2(3, 0)).norm(), 1e-9);

    Instance even{ball, {}};
    for (int k = 1; k <= 4; ++k) even.sites.push_back(v2(k, 0));
    s = ft_locus(even);
    EXPECT_EQ(s.tag, FTSetTag::Segment) << name;
    EXPECT_TRUE(same_set(s.vertices, {v2(2, 0), v2(3, 0)}, 1e-9));
  }
}

TEST(FTLocus, MatchesLpOptimalFaceOnRandomInstances) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> u(-4, 4);
  for (const char* name : {"manhattan2d", "square2d", "hexagon", "cube", "octahedron", "prism(6)"}) {
    const PolytopeBall ball = builtin_ball(name);
    for (int trial = 0; trial < 8; ++trial) {
      Instance inst{ball, {}};
      const int n = 3 + trial % 3;
      for (int i = 0; i < n; ++i) inst.sites.push_back(Vector::NullaryExpr(ball.dim(), [&] { return double(u(rng)); }));
      const FTSet a = ft_locus(inst);
      const FTSet b = lp_optimal_face(inst);
      EXPECT_LE(linalg::hausdorff(a.vertices, b.vertices, 1e-12), 1e-6) << name << " trial " << trial;
      EXPECT_NEAR(a.objective_value, b.objective_value, 1e-9);
      for (const Vector& v : a.vertices) EXPECT_NEAR(objective(inst, v), a.objective_value, 1e-9);
    }
  }
}

TEST(FTLocus, ChoiceIndependence) {
  const Instance inst{builtin_ball("hexagon"), {v2(0, 0), hex(0), hex(1)}};
  const FTSet a = ft_locus_from(inst, (hex(0) + hex(1)) / 3.0);
  const FTSet b = ft_locus_from(inst, 0.2 * hex(0) + 0.5 * hex(1));
  EXPECT_LE(linalg::hausdorff(a.vertices, b.vertices, 1e-12), 1e-9);
}

TEST(CollinearFT, SmallExamples) {
  const PolytopeBall ball = builtin_ball("manhattan2d");
  FTSet s = collinear_ft({ball, {v2(0, 0), v2(1, 0), v2(5, 0)}});
  EXPECT_EQ(s.tag, FTSetTag::Point);
  EXPECT_LT((s.vertices[0] - v2(1, 0)).norm(), 1e-12);
  s = collinear_ft({ball, {v2(9, 0), v2(0, 0), v2(2, 0), v2(1, 0)}});
  EXPECT_EQ(s.tag, FTSetTag::Segment);
  EXPECT_TRUE(same_set(s.vertices, {v2(1, 0), v2(2, 0)}, 1e-12));
  s = collinear_ft({ball, {v2(4, 4)}});
  EXPECT_EQ(s.tag, FTSetTag::Point);
  try {
    collinear_ft({ball, {v2(0, 0), v2(1, 0), v2(1, 1)}});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotCollinear);
  }
}

TEST(CollinearFT, EvenCaseAlongFlatteningIsAParallelogram) {
  // Sites on the x-axis under the max norm: (1,0) lies inside the edge x = 1,
  // so the solution set is the square with diagonal [x_k, x_k+1].
  const Instance inst{builtin_ball("square2d"), {v2(0, 0), v2(2, 0)}};
  const FTSet s = collinear_ft(inst);
  EXPECT_EQ(s.tag, FTSetTag::Polygon);
  EXPECT_TRUE(same_set(s.vertices, {v2(0, 0), v2(2, 0), v2(1, 1), v2(1, -1)}, 1e-9));
  const FTSet t = ft_locus(inst);
  EXPECT_LE(linalg::hausdorff(s.vertices, t.vertices, 1e-12), 1e-9);
}

TEST(CollinearFT, AgreesWithLocusOnRandomLines) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<int> u(-5, 5);
  for (const char* name : {"manhattan2d", "square2d", "hexagon", "cube", "octahedron"}) {
    const PolytopeBall ball = builtin_ball(name);
    for (int trial = 0; trial < 6; ++trial) {
      Vector dir = Vector::NullaryExpr(ball.dim(), [&] { return double(u(rng)); });
      if (dir.norm() == 0) dir(0) = 1;
      Instance inst{ball, {}};
      for (int i = 0; i < 3 + trial % 4; ++i) inst.sites.push_back(double(u(rng)) * dir);
      const FTSet a = collinear_ft(inst);
      const FTSet b = ft_locus(inst);
      EXPECT_LE(linalg::hausdorff(a.vertices, b.vertices, 1e-12), 1e-6) << name << " trial " << trial;
    }
  }
}

}  // namespace
}  // namespace polyft
