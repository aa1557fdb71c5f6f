#include <arm_neon.h>

#include <limits>

#include "ctxg/simd/kernels_internal.hpp"

namespace ctxg::simd::neon {

namespace {

void threshold_mask_impl(const uint8_t* src, uint8_t* dst, size_t n) {
    const uint8x16_t lim = vdupq_n_u8(127);
    const uint8x16_t one = vdupq_n_u8(1);
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t v = vld1q_u8(src + i);
        vst1q_u8(dst + i, vandq_u8(vcgtq_u8(v, lim), one));
    }
    for (; i < n; ++i) dst[i] = src[i] > 127 ? 1 : 0;
}

uint64_t overlap_count_impl(const uint8_t* a, const uint8_t* b, size_t n) {
    const uint8x16_t one = vdupq_n_u8(1);
    uint64_t c = 0;
    size_t i = 0;
    for (; i + 16 <= n; i += 16) {
        uint8x16_t va = vminq_u8(vld1q_u8(a + i), one);
        uint8x16_t vb = vminq_u8(vld1q_u8(b + i), one);
        c += vaddvq_u8(vandq_u8(va, vb));
    }
    for (; i < n; ++i) c += static_cast<uint64_t>((a[i] != 0) & (b[i] != 0));
    return c;
}

uint64_t nonzero_count_impl(const uint8_t* a, size_t n) {
    const uint8x16_t one = vdupq_n_u8(1);
    uint64_t c = 0;
    size_t i = 0;
    for (; i + 16 <= n; i += 16) c += vaddvq_u8(vminq_u8(vld1q_u8(a + i), one));
    for (; i < n; ++i) c += a[i] != 0;
    return c;
}

double min_sqdist_point_segments_impl(double px, double py, const SegmentSoa& s) {
    const size_t n = s.size();
    const float64x2_t vpx = vdupq_n_f64(px);
    const float64x2_t vpy = vdupq_n_f64(py);
    const float64x2_t vzero = vdupq_n_f64(0.0);
    const float64x2_t vone = vdupq_n_f64(1.0);
    float64x2_t bestv = vdupq_n_f64(std::numeric_limits<double>::infinity());
    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t rx = vsubq_f64(vpx, vld1q_f64(&s.x0[i]));
        float64x2_t ry = vsubq_f64(vpy, vld1q_f64(&s.y0[i]));
        float64x2_t dx = vld1q_f64(&s.dx[i]);
        float64x2_t dy = vld1q_f64(&s.dy[i]);
        float64x2_t il = vld1q_f64(&s.inv_len2[i]);
        float64x2_t t =
            vmulq_f64(vaddq_f64(vmulq_f64(rx, dx), vmulq_f64(ry, dy)), il);
        t = vmaxq_f64(vzero, vminq_f64(t, vone));
        float64x2_t ex = vsubq_f64(rx, vmulq_f64(t, dx));
        float64x2_t ey = vsubq_f64(ry, vmulq_f64(t, dy));
        float64x2_t d = vaddq_f64(vmulq_f64(ex, ex), vmulq_f64(ey, ey));
        bestv = vminq_f64(bestv, d);
    }
    double best = vgetq_lane_f64(bestv, 0);
    const double lane1 = vgetq_lane_f64(bestv, 1);
    if (lane1 < best) best = lane1;
    for (; i < n; ++i) {
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

    const float64x2_t vax = vdupq_n_f64(ax);
    const float64x2_t vay = vdupq_n_f64(ay);
    const float64x2_t vvx = vdupq_n_f64(vx);
    const float64x2_t vvy = vdupq_n_f64(vy);
    const float64x2_t vinv = vdupq_n_f64(inv);
    const float64x2_t vzero = vdupq_n_f64(0.0);
    const float64x2_t vone = vdupq_n_f64(1.0);

    float64x2_t bestv = vdupq_n_f64(-1.0);
    float64x2_t idxv = vdupq_n_f64(-1.0);
    float64x2_t cur = {0.0, 1.0};
    const float64x2_t step = vdupq_n_f64(2.0);

    size_t i = 0;
    for (; i + 2 <= n; i += 2) {
        float64x2_t rx = vsubq_f64(vld1q_f64(xs + i), vax);
        float64x2_t ry = vsubq_f64(vld1q_f64(ys + i), vay);
        float64x2_t t =
            vmulq_f64(vaddq_f64(vmulq_f64(rx, vvx), vmulq_f64(ry, vvy)), vinv);
        t = vmaxq_f64(vzero, vminq_f64(t, vone));
        float64x2_t ex = vsubq_f64(rx, vmulq_f64(t, vvx));
        float64x2_t ey = vsubq_f64(ry, vmulq_f64(t, vvy));
        float64x2_t d = vaddq_f64(vmulq_f64(ex, ex), vmulq_f64(ey, ey));
        uint64x2_t gt = vcgtq_f64(d, bestv);
        bestv = vbslq_f64(gt, d, bestv);
        idxv = vbslq_f64(gt, cur, idxv);
        cur = vaddq_f64(cur, step);
    }

    MaxDist out;
    const double lv[2] = {vgetq_lane_f64(bestv, 0), vgetq_lane_f64(bestv, 1)};
    const double li[2] = {vgetq_lane_f64(idxv, 0), vgetq_lane_f64(idxv, 1)};
    for (int k = 0; k < 2; ++k) {
        if (li[k] < 0) continue;
        if (lv[k] > out.sq || (lv[k] == out.sq && static_cast<ptrdiff_t>(li[k]) < out.idx)) {
            out.sq = lv[k];
            out.idx = static_cast<ptrdiff_t>(li[k]);
        }
    }
    for (; i < n; ++i) {
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

} // namespace

const detail::Ops kOps = {
    threshold_mask_impl,
    overlap_count_impl,
    nonzero_count_impl,
    min_sqdist_point_segments_impl,
    max_sqdist_points_segment_impl,
};

} // namespace ctxg::simd::neon
