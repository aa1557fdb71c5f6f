#pragma once

#include "ctxg/geom/polygon.hpp"
#include "ctxg/types.hpp"

namespace ctxg::geom {

// Outer boundary of every 8-connected foreground component, in scanline
// discovery order (top to bottom, left to right of each component's first
// pixel). Boundaries follow pixel edges, so vertices sit on the corner
// lattice and a component's ring area equals its pixel count. Collinear runs
// are collapsed: only corners where the boundary turns are emitted. Holes are
// ignored.
std::vector<Polygon> extract_outer_contours(const Mask& mask);

// Scratch-buffer variant for tight per-frame loops; visited must be empty or
// reusable from a previous call on a mask of the same size.
std::vector<Polygon> extract_outer_contours(const Mask& mask, std::vector<uint8_t>& visited);

} // namespace ctxg::geom
