#pragma once

#include <string>

#include "arcchroma/coloring.hpp"
#include "arcchroma/geometry.hpp"

namespace arcchroma::svg {

// Renders a grid coloring as n x n filled squares with one legend row.
// Cartesian orientation: x grows rightward, y grows upward.  The palette is
// fixed and indexed by class, so equal inputs give byte-equal output.
std::string grid_svg(const Geometry& grid, const Coloring& coloring);

}  // namespace arcchroma::svg
