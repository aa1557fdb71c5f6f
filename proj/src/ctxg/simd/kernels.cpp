#include <atomic>

#include "ctxg/simd/kernels_internal.hpp"

namespace ctxg::simd {

namespace {

bool level_supported(Level l) {
    switch (l) {
        case Level::Scalar:
            return true;
        case Level::Avx2:
#if defined(CTXG_HAVE_AVX2)
            return __builtin_cpu_supports("avx2") != 0;
#else
            return false;
#endif
        case Level::Neon:
#if defined(CTXG_HAVE_NEON)
            return true;
#else
            return false;
#endif
    }
    return false;
}

Level detect_best() {
    if (level_supported(Level::Avx2)) return Level::Avx2;
    if (level_supported(Level::Neon)) return Level::Neon;
    return Level::Scalar;
}

std::atomic<const detail::Ops*> g_ops{nullptr};
std::atomic<Level> g_level{Level::Scalar};

const detail::Ops& resolve() {
    const detail::Ops* p = g_ops.load(std::memory_order_acquire);
    if (!p) {
        const Level l = detect_best();
        p = &detail::ops_for(l);
        g_level.store(l, std::memory_order_relaxed);
        g_ops.store(p, std::memory_order_release);
    }
    return *p;
}

} // namespace

const char* level_name(Level l) {
    switch (l) {
        case Level::Scalar: return "scalar";
        case Level::Avx2: return "avx2";
        case Level::Neon: return "neon";
    }
    return "?";
}

std::vector<Level> available_levels() {
    std::vector<Level> out{Level::Scalar};
    if (level_supported(Level::Avx2)) out.push_back(Level::Avx2);
    if (level_supported(Level::Neon)) out.push_back(Level::Neon);
    return out;
}

Level active_level() {
    resolve();
    return g_level.load(std::memory_order_relaxed);
}

void force_level(Level l) {
    if (!level_supported(l))
        throw ConfigError(std::string("simd variant not available on this machine: ") + level_name(l));
    g_level.store(l, std::memory_order_relaxed);
    g_ops.store(&detail::ops_for(l), std::memory_order_release);
}

void reset_level() {
    g_ops.store(nullptr, std::memory_order_release);
}

const detail::Ops& detail::ops_for(Level l) {
    switch (l) {
        case Level::Scalar:
            return scalar::kOps;
        case Level::Avx2:
#if defined(CTXG_HAVE_AVX2)
            return avx2::kOps;
#else
            break;
#endif
        case Level::Neon:
#if defined(CTXG_HAVE_NEON)
            return neon::kOps;
#else
            break;
#endif
    }
    throw ConfigError(std::string("simd variant not compiled into this binary: ") + level_name(l));
}

void threshold_mask(const uint8_t* src, uint8_t* dst, size_t n) {
    resolve().threshold_mask(src, dst, n);
}

uint64_t overlap_count(const uint8_t* a, const uint8_t* b, size_t n) {
    return resolve().overlap_count(a, b, n);
}

uint64_t nonzero_count(const uint8_t* a, size_t n) {
    return resolve().nonzero_count(a, n);
}

double min_sqdist_point_segments(double px, double py, const SegmentSoa& segs) {
    return resolve().min_sqdist_point_segments(px, py, segs);
}

MaxDist max_sqdist_points_segment(const double* xs, const double* ys, size_t n,
                                  double ax, double ay, double bx, double by) {
    return resolve().max_sqdist_points_segment(xs, ys, n, ax, ay, bx, by);
}

void SegmentSoa::push(double ax, double ay, double bx, double by) {
    const double ddx = bx - ax;
    const double ddy = by - ay;
    const double len2 = ddx * ddx + ddy * ddy;
    x0.push_back(ax);
    y0.push_back(ay);
    dx.push_back(ddx);
    dy.push_back(ddy);
    inv_len2.push_back(len2 > 0.0 ? 1.0 / len2 : 0.0);
}

SegmentSoa SegmentSoa::from_ring(const std::vector<Point>& ring) {
    SegmentSoa s;
    const size_t n = ring.size();
    if (n == 0) return s;
    s.x0.reserve(n);
    s.y0.reserve(n);
    s.dx.reserve(n);
    s.dy.reserve(n);
    s.inv_len2.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        const Point& a = ring[i];
        const Point& b = ring[(i + 1) % n];
        s.push(a.x, a.y, b.x, b.y);
    }
    return s;
}

} // namespace ctxg::simd
