#pragma once

#include <string>
#include <vector>

#include "polyft/ball.hpp"

namespace polyft {

// Named unit balls: manhattan2d, square2d, hexagon, regular_mgon(m), cube,
// octahedron, dodecahedron, icosahedron, prism(m).
// The dodecahedron uses the unscaled coordinates (+-1,+-1,+-1), (0,+-1/g,+-g)
// and cyclic shifts, g the golden ratio; its circumradius is sqrt(3).
PolytopeBall builtin_ball(const std::string& name, double tolerance = 1e-9);

std::vector<std::string> builtin_names();

// The suite used for audits and reports.
std::vector<std::string> suite_names();

}  // namespace polyft
