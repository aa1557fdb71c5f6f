#include <immintrin.h>

#include <limits>

#include "ctxg/simd/kernels_internal.hpp"

namespace ctxg::simd::avx2 {

namespace {

void threshold_mask_impl(const uint8_t* src, uint8_t* dst, size_t n) {
    // Unsigned compare via sign-bias: (v ^ 0x80) > (127 ^ 0x80) <=> v > 127.
    const __m256i bias = _mm256_set1_epi8(static_cast<char>(0x80));
    const __m256i lim = _mm256_set1_epi8(static_cast<char>(127 ^ 0x80));
    const __m256i one = _mm256_set1_epi8(1);
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i m = _mm256_cmpgt_epi8(_mm256_xor_si256(v, bias), lim);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_and_si256(m, one));
    }
    for (; i < n; ++i) dst[i] = src[i] > 127 ? 1 : 0;
}

uint64_t hsum_epi64(__m256i v) {
    alignas(32) uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), v);
    return lanes[0] + lanes[1] + lanes[2] + lanes[3];
}

uint64_t overlap_count_impl(const uint8_t* a, const uint8_t* b, size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi8(1);
    __m256i acc = zero;
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i both = _mm256_and_si256(_mm256_min_epu8(va, one), _mm256_min_epu8(vb, one));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(both, zero));
    }
    uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += static_cast<uint64_t>((a[i] != 0) & (b[i] != 0));
    return c;
}

uint64_t nonzero_count_impl(const uint8_t* a, size_t n) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi8(1);
    __m256i acc = zero;
    size_t i = 0;
    for (; i + 32 <= n; i += 32) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        acc = _mm256_add_epi64(acc, _mm256_sad_epu8(_mm256_min_epu8(va, one), zero));
    }
    uint64_t c = hsum_epi64(acc);
    for (; i < n; ++i) c += a[i] != 0;
    return c;
}

double min_sqdist_point_segments_impl(double px, double py, const SegmentSoa& s) {
    const size_t n = s.size();
    const __m256d vpx = _mm256_set1_pd(px);
    const __m256d vpy = _mm256_set1_pd(py);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d vone = _mm256_set1_pd(1.0);
    __m256d bestv = _mm256_set1_pd(std::numeric_limits<double>::infinity());
    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d rx = _mm256_sub_pd(vpx, _mm256_loadu_pd(&s.x0[i]));
        __m256d ry = _mm256_sub_pd(vpy, _mm256_loadu_pd(&s.y0[i]));
        __m256d dx = _mm256_loadu_pd(&s.dx[i]);
        __m256d dy = _mm256_loadu_pd(&s.dy[i]);
        __m256d il = _mm256_loadu_pd(&s.inv_len2[i]);
        __m256d t = _mm256_mul_pd(
            _mm256_add_pd(_mm256_mul_pd(rx, dx), _mm256_mul_pd(ry, dy)), il);
        t = _mm256_max_pd(vzero, _mm256_min_pd(t, vone));
        __m256d ex = _mm256_sub_pd(rx, _mm256_mul_pd(t, dx));
        __m256d ey = _mm256_sub_pd(ry, _mm256_mul_pd(t, dy));
        __m256d d = _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));
        bestv = _mm256_min_pd(bestv, d);
    }
    alignas(32) double lanes[4];
    _mm256_store_pd(lanes, bestv);
    double best = lanes[0];
    for (int k = 1; k < 4; ++k)
        if (lanes[k] < best) best = lanes[k];
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

    const __m256d vax = _mm256_set1_pd(ax);
    const __m256d vay = _mm256_set1_pd(ay);
    const __m256d vvx = _mm256_set1_pd(vx);
    const __m256d vvy = _mm256_set1_pd(vy);
    const __m256d vinv = _mm256_set1_pd(inv);
    const __m256d vzero = _mm256_setzero_pd();
    const __m256d vone = _mm256_set1_pd(1.0);

    __m256d bestv = _mm256_set1_pd(-1.0);
    __m256d idxv = _mm256_set1_pd(-1.0);
    __m256d cur = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    const __m256d step = _mm256_set1_pd(4.0);

    size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d rx = _mm256_sub_pd(_mm256_loadu_pd(xs + i), vax);
        __m256d ry = _mm256_sub_pd(_mm256_loadu_pd(ys + i), vay);
        __m256d t = _mm256_mul_pd(
            _mm256_add_pd(_mm256_mul_pd(rx, vvx), _mm256_mul_pd(ry, vvy)), vinv);
        t = _mm256_max_pd(vzero, _mm256_min_pd(t, vone));
        __m256d ex = _mm256_sub_pd(rx, _mm256_mul_pd(t, vvx));
        __m256d ey = _mm256_sub_pd(ry, _mm256_mul_pd(t, vvy));
        __m256d d = _mm256_add_pd(_mm256_mul_pd(ex, ex), _mm256_mul_pd(ey, ey));
        __m256d gt = _mm256_cmp_pd(d, bestv, _CMP_GT_OQ);
        bestv = _mm256_blendv_pd(bestv, d, gt);
        idxv = _mm256_blendv_pd(idxv, cur, gt);
        cur = _mm256_add_pd(cur, step);
    }

    alignas(32) double lv[4];
    alignas(32) double li[4];
    _mm256_store_pd(lv, bestv);
    _mm256_store_pd(li, idxv);
    MaxDist out;
    // Lane k holds the earliest per-lane maximum at absolute index li[k]; the
    // global earliest maximum is the value max with the smallest index.
    for (int k = 0; k < 4; ++k) {
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

} // namespace ctxg::simd::avx2
