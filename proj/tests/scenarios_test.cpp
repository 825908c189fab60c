#include "polyft/scenarios.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <numbers>

#include "polyft/builtin.hpp"
#include "polyft/symmetry.hpp"

namespace polyft {
namespace {

TEST(Builtin, DodecahedronAndIcosahedronCombinatorics) {
  auto count = [](const PolytopeBall& ball, int dim) {
    int c = 0;
    for (const Face& f : ball.faces()) c += f.dim == dim;
    return c;
  };
  const PolytopeBall dod = builtin_ball("dodecahedron");
  EXPECT_EQ(count(dod, 0), 20);
  EXPECT_EQ(count(dod, 1), 30);
  EXPECT_EQ(count(dod, 2), 12);
  for (const Functional& f : dod.facets()) EXPECT_EQ(exposed_vertices(dod, f).size(), 5u);
  const PolytopeBall ico = builtin_ball("icosahedron");
  EXPECT_EQ(count(ico, 0), 12);
  EXPECT_EQ(count(ico, 1), 30);
  EXPECT_EQ(count(ico, 2), 20);
  const PolytopeBall oct = builtin_ball("octahedron");
  EXPECT_EQ(oct.vertices().size(), 6u);
}

TEST(Builtin, Errors) {
  for (const auto& [name, code] : std::vector<std::pair<std::string, ErrorCode>>{
           {"tetrahedron", ErrorCode::NotSymmetric},
           {"regular_mgon(5)", ErrorCode::NotSymmetric},
           {"prism(3)", ErrorCode::NotSymmetric},
           {"torus", ErrorCode::UnknownBall}}) {
    try {
      builtin_ball(name);
      ADD_FAILURE() << name;
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), code) << name;
    }
  }
}

TEST(Dodecahedron, SectionConstants) {
  const DodecahedronSection s = dodecahedron_constants();
  const double phi = std::numbers::phi;
  EXPECT_NEAR(s.tan_beta, 2.0, 1e-12);
  EXPECT_NEAR(s.beta, std::atan(2.0), 1e-15);
  EXPECT_GT(s.beta, s.alpha);
  // Pentagon height from its circumradius and inradius.
  const double t = std::numbers::pi / 5;
  EXPECT_NEAR(s.b, 1 / (2 * std::sin(t)) + 1 / (2 * std::tan(t)), 1e-14);
  EXPECT_NEAR(s.c, phi / 2, 1e-14);
  EXPECT_NEAR(s.d, phi * phi / 2, 1e-14);
}

TEST(Dodecahedron, HalfDihedralFromTheBall) {
  const PolytopeBall ball = builtin_ball("dodecahedron");
  const DodecahedronLabels lab = dodecahedron_labels(ball);
  const Vector n1 = ball.barycenter(lab.facet(1)).normalized();
  const Vector n2 = ball.barycenter(lab.facet(2)).normalized();
  const double dihedral = std::numbers::pi - std::acos(n1.dot(n2));
  EXPECT_NEAR(dodecahedron_constants().alpha, dihedral / 2, 1e-12);
}

TEST(Dodecahedron, Labels) {
  const PolytopeBall ball = builtin_ball("dodecahedron");
  const DodecahedronLabels lab = dodecahedron_labels(ball);
  std::vector<int> sorted = lab.facets;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::vector<std::pair<int, int>> opposite{{1, 12}, {2, 10}, {3, 11}, {4, 7}, {5, 8}, {6, 9}};
  for (const auto& [i, j] : opposite) EXPECT_EQ(ball.antipodal_face(lab.facet(i)), lab.facet(j)) << i;
  for (auto [i, j] : std::vector<std::pair<int, int>>{{2, 6}, {1, 4}, {7, 12}, {8, 9}, {9, 10}}) {
    EXPECT_GE(lab.edge(ball, i, j), 0) << i << j;
  }
  for (auto v : std::vector<std::array<int, 3>>{{2, 6, 7}, {5, 6, 11}, {3, 8, 9}}) {
    EXPECT_GE(lab.vertex(ball, v[0], v[1], v[2]), 0);
  }
  EXPECT_EQ(lab.edge(ball, 1, 7), -1);
  EXPECT_EQ(ball.antipodal_face(lab.edge(ball, 2, 6)), lab.edge(ball, 9, 10));
  EXPECT_EQ(ball.antipodal_face(lab.edge(ball, 1, 4)), lab.edge(ball, 7, 12));
}

TEST(Dodecahedron, FacetWithSecondFacetIsNeverConsistent) {
  const PolytopeBall ball = builtin_ball("dodecahedron");
  const DodecahedronLabels lab = dodecahedron_labels(ball);
  for (int third : {9, 10}) {
    std::vector<int> faces{lab.facet(1), lab.facet(7), lab.facet(third)};
    std::sort(faces.begin(), faces.end());
    EXPECT_FALSE(is_consistent(ball, faces).has_value());
  }
  std::vector<int> faces{lab.facet(1), lab.facet(7), lab.edge(ball, 9, 10)};
  std::sort(faces.begin(), faces.end());
  EXPECT_FALSE(is_consistent(ball, faces).has_value());
}

TEST(Cases, HexagonTriangle) {
  const CaseReport r = reproduce_case("hexagon_triangle");
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.ft_set->tag, FTSetTag::Polygon);
}

TEST(Cases, OctahedronUnique) {
  const CaseReport r = reproduce_case("octahedron_unique");
  EXPECT_EQ(r.verdict, Verdict::UniqueForAll);
}

TEST(Cases, DodecahedronSegment) {
  const CaseReport r = reproduce_case("dodecahedron_segment");
  EXPECT_EQ(r.ft_set->tag, FTSetTag::Segment);
  EXPECT_FALSE(r.labels.empty());
}

TEST(Cases, CubeSegment) { EXPECT_EQ(reproduce_case("cube_segment").ft_set->tag, FTSetTag::Segment); }

TEST(Cases, PrismLifting) {
  const auto start = std::chrono::steady_clock::now();
  const CaseReport r = reproduce_case("prism_nonunique(6)");
  EXPECT_LT(std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count(), 5.0);
  EXPECT_GE(r.ft_set->affine_dim, 1);
  ASSERT_TRUE(r.evidence.has_value());
  EXPECT_GE(r.evidence->separation, 0.1 - 1e-9);
  EXPECT_GE(reproduce_case("prism_nonunique(6)", 5).ft_set->affine_dim, 1);
  EXPECT_GE(reproduce_case("prism_nonunique(4)", 4).ft_set->affine_dim, 1);
}

TEST(Cases, PrismWithoutBaseSet) {
  // The octagon has no consistent triple, so there is nothing to lift.
  try {
    reproduce_case("prism_nonunique(8)");
    FAIL();
  } catch (const CaseFailure& e) {
    EXPECT_FALSE(e.report().passed);
    EXPECT_EQ(e.report().verdict, Verdict::UniqueForAll);
  }
}

TEST(Cases, UnknownName) { EXPECT_THROW(reproduce_case("sphere"), Error); }

TEST(Cases, Deterministic) {
  const CaseReport a = reproduce_case("hexagon_triangle");
  const CaseReport b = reproduce_case("hexagon_triangle");
  ASSERT_EQ(a.ft_set->vertices.size(), b.ft_set->vertices.size());
  for (std::size_t i = 0; i < a.ft_set->vertices.size(); ++i) EXPECT_EQ(a.ft_set->vertices[i], b.ft_set->vertices[i]);
  EXPECT_EQ(a.oracle->grid_min, b.oracle->grid_min);
}

TEST(Scale, ClassificationIsScaleInvariant) {
  // Same witness at two ball scales: same tag, locus scales with the sites.
  const PolytopeBall ball = builtin_ball("cube");
  std::vector<Vector> big;
  for (const Vector& v : ball.vertices()) big.push_back(3.5 * v);
  const PolytopeBall scaled = build_ball(big);
  const Instance inst{ball, {Vector{{1, 1, 0}}, Vector{{1, -1, 0}}, Vector{{-1, 1, 0}}}};
  Instance inst2{scaled, {}};
  for (const Vector& s : inst.sites) inst2.sites.push_back(3.5 * s);
  const FTSet a = ft_locus(inst), b = ft_locus(inst2);
  EXPECT_EQ(a.tag, b.tag);
  ASSERT_EQ(a.vertices.size(), b.vertices.size());
  for (std::size_t i = 0; i < a.vertices.size(); ++i) EXPECT_LT((3.5 * a.vertices[i] - b.vertices[i]).norm(), 1e-9);
  EXPECT_EQ(uniqueness_audit(ball, 3).verdict, uniqueness_audit(scaled, 3).verdict);
  EXPECT_EQ(enumerate_consistent_sets(ball, 3).size(), enumerate_consistent_sets(scaled, 3).size());
}

}  // namespace
}  // namespace polyft
