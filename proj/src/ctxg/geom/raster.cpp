#include "ctxg/geom/raster.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "ctxg/simd/kernels.hpp"

namespace ctxg::geom {

void rasterize_even_odd(const std::vector<Polygon>& comps, int ox, int oy,
                        int w, int h, uint8_t* out) {
    std::memset(out, 0, static_cast<size_t>(w) * h);
    std::vector<double> xs;
    for (const Polygon& poly : comps) {
        const size_t n = poly.pts.size();
        if (n < 3) continue;
        for (int y = 0; y < h; ++y) {
            const double sy = oy + y + 0.5;
            xs.clear();
            for (size_t i = 0; i < n; ++i) {
                const Point& a = poly.pts[i];
                const Point& b = poly.pts[(i + 1) % n];
                if ((a.y <= sy) != (b.y <= sy))
                    xs.push_back(a.x + (sy - a.y) * (b.x - a.x) / (b.y - a.y));
            }
            std::sort(xs.begin(), xs.end());
            uint8_t* row = out + static_cast<size_t>(y) * w;
            for (size_t k = 0; k + 1 < xs.size(); k += 2) {
                // pixel centers ox + x + 0.5 in [xs[k], xs[k+1])
                int x0 = static_cast<int>(std::ceil(xs[k] - ox - 0.5));
                int x1 = static_cast<int>(std::ceil(xs[k + 1] - ox - 0.5)) - 1;
                if (x0 < 0) x0 = 0;
                if (x1 > w - 1) x1 = w - 1;
                for (int x = x0; x <= x1; ++x) row[x] = 1;
            }
        }
    }
}

double intersection_area(const ObjectShape& a, const ObjectShape& b) {
    if (a.empty() || b.empty()) return 0.0;
    const BBox ba = a.bbox();
    const BBox bb = b.bbox();
    const double ix0 = std::max(ba.x0, bb.x0);
    const double iy0 = std::max(ba.y0, bb.y0);
    const double ix1 = std::min(ba.x1, bb.x1);
    const double iy1 = std::min(ba.y1, bb.y1);
    if (ix0 >= ix1 || iy0 >= iy1) return 0.0;

    const int wx0 = static_cast<int>(std::floor(ix0));
    const int wy0 = static_cast<int>(std::floor(iy0));
    const int wx1 = static_cast<int>(std::ceil(ix1));
    const int wy1 = static_cast<int>(std::ceil(iy1));
    const int w = wx1 - wx0;
    const int h = wy1 - wy0;
    if (w <= 0 || h <= 0) return 0.0;

    const size_t cells = static_cast<size_t>(w) * h;
    std::vector<uint8_t> bufa(cells);
    std::vector<uint8_t> bufb(cells);
    rasterize_even_odd(a.components, wx0, wy0, w, h, bufa.data());
    rasterize_even_odd(b.components, wx0, wy0, w, h, bufb.data());

    double count = static_cast<double>(simd::overlap_count(bufa.data(), bufb.data(), cells));
    const double cap = std::min(a.total_area(), b.total_area());
    if (count > cap) count = cap;
    return count;
}

} // namespace ctxg::geom
