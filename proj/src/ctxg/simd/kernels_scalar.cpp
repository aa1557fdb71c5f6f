#include <limits>

#include "ctxg/simd/kernels_internal.hpp"

namespace ctxg::simd::scalar {

void threshold_mask_impl(const uint8_t* src, uint8_t* dst, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = src[i] > 127 ? 1 : 0;
}

uint64_t overlap_count_impl(const uint8_t* a, const uint8_t* b, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += (a[i] != 0) & (b[i] != 0);
    return c;
}

uint64_t nonzero_count_impl(const uint8_t* a, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += a[i] != 0;
    return c;
}

double min_sqdist_point_segments_impl(double px, double py, const SegmentSoa& s) {
    double best = std::numeric_limits<double>::infinity();
    const size_t n = s.size();
    for (size_t i = 0; i < n; ++i) {
        const double rx = px - s.x0[i];
        const double ry = py - s.y0[i];
        double t = (rx * s.dx[i] + ry * s.dy[i]) * s.inv_len2[i];
        t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
        const double ex = rx - t * s.dx[i];
        const double ey = ry - t * s.dy[i];
        const double d = ex * ex + ey * ey;
        if (d < best) best = d;
    }
    return best;
}

MaxDist max_sqdist_points_segment_impl(const double* xs, const double* ys, size_t n,
                                       double ax, double ay, double bx, double by) {
    const double vx = bx - ax;
    const double vy = by - ay;
    const double len2 = vx * vx + vy * vy;
    const double inv = len2 > 0.0 ? 1.0 / len2 : 0.0;
    MaxDist out;
    for (size_t i = 0; i < n; ++i) {
        const double rx = xs[i] - ax;
        const double ry = ys[i] - ay;
        double t = (rx * vx + ry * vy) * inv;
        t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
        const double ex = rx - t * vx;
        const double ey = ry - t * vy;
        const double d = ex * ex + ey * ey;
        if (d > out.sq) {
            out.sq = d;
            out.idx = static_cast<ptrdiff_t>(i);
        }
    }
    return out;
}

const detail::Ops kOps = {
    threshold_mask_impl,
    overlap_count_impl,
    nonzero_count_impl,
    min_sqdist_point_segments_impl,
    max_sqdist_points_segment_impl,
};

} // namespace ctxg::simd::scalar
