#include "polyft/builtin.hpp"

#include <cmath>
#include <numbers>
#include <regex>

namespace polyft {

namespace {

Vector v3(double x, double y, double z) { return Vector{{x, y, z}}; }

std::vector<Vector> polygon(int m) {
  std::vector<Vector> vs;
  for (int k = 0; k < m; ++k) {
    const double a = 2.0 * std::numbers::pi * k / m;
    vs.push_back(Vector{{std::cos(a), std::sin(a)}});
  }
  return vs;
}

// All sign patterns of (x, y, z) with its three cyclic shifts.
void cyclic_signed(double x, double y, double z, std::vector<Vector>& out) {
  const double c[3] = {x, y, z};
  for (int shift = 0; shift < 3; ++shift) {
    for (int s = 0; s < 8; ++s) {
      Vector v(3);
      for (int k = 0; k < 3; ++k) v(k) = c[(k + shift) % 3] * ((s >> k) & 1 ? -1.0 : 1.0);
      bool seen = false;
      for (const Vector& o : out) seen = seen || (o - v).norm() < 1e-12;
      if (!seen) out.push_back(v);
    }
  }
}

int parse_count(const std::string& name, const std::string& family) {
  static const std::regex pattern(R"(([a-z_0-9]+)\((\d+)\))");
  std::smatch m;
  if (!std::regex_match(name, m, pattern) || m[1] != family) return -1;
  return std::stoi(m[2]);
}

}  // namespace

PolytopeBall builtin_ball(const std::string& name, double tol) {
  const double g = std::numbers::phi;
  if (name == "manhattan2d") {
    return build_ball({Vector{{1, 0}}, Vector{{-1, 0}}, Vector{{0, 1}}, Vector{{0, -1}}}, tol);
  }
  if (name == "square2d") {
    return build_ball({Vector{{1, 1}}, Vector{{-1, 1}}, Vector{{-1, -1}}, Vector{{1, -1}}}, tol);
  }
  if (name == "hexagon") return build_ball(polygon(6), tol);
  if (name == "cube") {
    std::vector<Vector> vs;
    cyclic_signed(1, 1, 1, vs);
    return build_ball(vs, tol);
  }
  if (name == "octahedron") {
    std::vector<Vector> vs;
    cyclic_signed(1, 0, 0, vs);
    return build_ball(vs, tol);
  }
  if (name == "dodecahedron") {
    std::vector<Vector> vs;
    cyclic_signed(1, 1, 1, vs);
    cyclic_signed(0, 1 / g, g, vs);
    return build_ball(vs, tol);
  }
  if (name == "icosahedron") {
    std::vector<Vector> vs;
    cyclic_signed(0, 1, g, vs);
    return build_ball(vs, tol);
  }
  if (name == "tetrahedron") {
    throw Error(ErrorCode::NotSymmetric, "the tetrahedron is not centrally symmetric");
  }
  if (const int m = parse_count(name, "regular_mgon"); m >= 0) {
    if (m < 4 || m % 2 == 1) throw Error(ErrorCode::NotSymmetric, "regular_mgon needs an even m >= 4");
    return build_ball(polygon(m), tol);
  }
  if (const int m = parse_count(name, "prism"); m >= 0) {
    if (m < 4 || m % 2 == 1) throw Error(ErrorCode::NotSymmetric, "prism needs an even m >= 4");
    std::vector<Vector> vs;
    for (const Vector& p : polygon(m)) {
      vs.push_back(v3(p(0), p(1), -1));
      vs.push_back(v3(p(0), p(1), 1));
    }
    return build_ball(vs, tol);
  }
  throw Error(ErrorCode::UnknownBall, "unknown ball '" + name + "'");
}

std::vector<std::string> builtin_names() {
  return {"manhattan2d", "square2d", "hexagon", "regular_mgon(m)", "cube",
          "octahedron",  "dodecahedron", "icosahedron", "prism(m)"};
}

std::vector<std::string> suite_names() {
  return {"manhattan2d", "square2d", "hexagon", "regular_mgon(8)", "cube",
          "octahedron",  "dodecahedron", "icosahedron", "prism(6)"};
}

}  // namespace polyft
