#pragma once

#include <string>
#include <vector>

#include "polyft/solver.hpp"

namespace polyft {

// 480x480 canvas. The smallest square holding the unit ball, the sites, the
// set and the cone apices, padded by 10%, is mapped onto [20, 460]^2 with the
// y axis pointing up. Throws WrongDimension unless d = 2.
std::string render_svg(const Instance& instance, const FTSet* set, const std::vector<Cone>& cones = {});

// Wavefront OBJ text: objects "ball", "sites" and "ft_set" (with an l or f
// element for segments and polygons). Any dimension up to 3; lower
// dimensions are padded with zeros.
std::string vertex_dump(const Instance& instance, const FTSet* set);

}  // namespace polyft
