#pragma once

#include "ctxg/geom/polygon.hpp"

namespace ctxg::geom {

// Even-odd scanline fill of every component into a w x h byte window whose
// top-left pixel is (ox, oy) in polygon coordinates. A pixel is covered when
// its center lies inside a component. Covered pixels are set to 1; the rest
// of the buffer is zeroed first.
void rasterize_even_odd(const std::vector<Polygon>& comps, int ox, int oy,
                        int w, int h, uint8_t* out);

// Overlap of two objects in square pixels: both rasterized over their shared
// bounding window on the original pixel grid, then the covered-by-both
// pixels are counted. Clamped so the result never exceeds either polygon
// area. Objects with disjoint bounding boxes report 0.
double intersection_area(const ObjectShape& a, const ObjectShape& b);

} // namespace ctxg::geom
