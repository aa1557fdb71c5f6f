#pragma once

#include "ctxg/geom/polygon.hpp"

namespace ctxg::geom {

// Ramer-Douglas-Peucker on an open chain. Endpoints are always kept;
// interior points are kept when their distance to the local chord is >=
// epsilon. epsilon <= 0 returns the chain unchanged.
std::vector<Point> rdp_chain(const std::vector<Point>& pts, double epsilon);

// Ring variant: splits the ring at the first vertex and the vertex farthest
// from it, simplifies both halves, and rejoins. May return fewer than 3
// points; callers drop such degenerate rings.
Polygon rdp_ring(const Polygon& ring, double epsilon);

} // namespace ctxg::geom
