#pragma once

#include <vector>

#include "ctxg/types.hpp"

namespace ctxg::geom {

struct BBox {
    double x0 = 0.0, y0 = 0.0, x1 = 0.0, y1 = 0.0;

    bool intersects(const BBox& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }
};

// Simple closed ring. Vertices use the pixel-corner coordinate system: the
// corner lattice of a W x H image spans [0,W] x [0,H], so a filled w x h
// pixel block becomes a ring of area exactly w*h.
struct Polygon {
    std::vector<Point> pts;

    double signed_area() const;          // shoelace, sign follows winding
    double area() const;                 // absolute shoelace area
    Point midpoint() const;              // mean of the vertices
    BBox bbox() const;
};

// One object class in one frame: its connected components in discovery order.
struct ObjectShape {
    std::vector<Polygon> components;

    bool empty() const { return components.empty(); }
    double total_area() const;
    Point midpoint() const;              // mean over all vertices of all components
    BBox bbox() const;                   // union box; undefined when empty
};

// Even-odd point-in-polygon. Points exactly on the boundary may land on
// either side; callers that care pair this with a distance check.
bool point_in_polygon(const Point& p, const Polygon& poly);

} // namespace ctxg::geom
