#pragma once

#include "ctxg/geom/polygon.hpp"

namespace ctxg::geom {

// Minimum distance between two polygon boundaries; 0 when they cross, touch,
// or one contains the other.
double component_distance(const Polygon& a, const Polygon& b);

// Mean of component_distance over every pair of components of the two
// objects. Either object empty yields +infinity (rules comparing against a
// threshold then see an unreachable object).
double object_distance(const ObjectShape& a, const ObjectShape& b);

} // namespace ctxg::geom
