#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"

#include "ctxg/simd/kernels.hpp"
#include "ctxg/types.hpp"

using namespace ctxg;

namespace {

// Reference implementations the variants must agree with exactly.

void ref_threshold(const uint8_t* src, uint8_t* dst, size_t n) {
    for (size_t i = 0; i < n; ++i) dst[i] = src[i] > 127 ? 1 : 0;
}

uint64_t ref_overlap(const uint8_t* a, const uint8_t* b, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += (a[i] != 0 && b[i] != 0) ? 1 : 0;
    return c;
}

uint64_t ref_nonzero(const uint8_t* a, size_t n) {
    uint64_t c = 0;
    for (size_t i = 0; i < n; ++i) c += a[i] != 0 ? 1 : 0;
    return c;
}

// The kernels promise bit-identical results across variants, so the reference
// spells out the contracted elementwise op sequence: work relative to the
// point, clamp t, square the residual.
double ref_point_segments(double px, double py, const simd::SegmentSoa& segs) {
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < segs.x0.size(); ++i) {
        const double rx = px - segs.x0[i];
        const double ry = py - segs.y0[i];
        double t = (rx * segs.dx[i] + ry * segs.dy[i]) * segs.inv_len2[i];
        t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
        const double ex = rx - t * segs.dx[i];
        const double ey = ry - t * segs.dy[i];
        best = std::min(best, ex * ex + ey * ey);
    }
    return best;
}

simd::MaxDist ref_points_segment(const double* xs, const double* ys, size_t n, double ax,
                                 double ay, double bx, double by) {
    simd::MaxDist out;
    const double dx = bx - ax, dy = by - ay;
    const double len2 = dx * dx + dy * dy;
    const double inv = len2 > 0.0 ? 1.0 / len2 : 0.0;
    for (size_t i = 0; i < n; ++i) {
        const double rx = xs[i] - ax;
        const double ry = ys[i] - ay;
        double t = (rx * dx + ry * dy) * inv;
        t = t < 0.0 ? 0.0 : (t > 1.0 ? 1.0 : t);
        const double ex = rx - t * dx;
        const double ey = ry - t * dy;
        const double d = ex * ex + ey * ey;
        if (d > out.sq) {
            out.sq = d;
            out.idx = static_cast<int64_t>(i);
        }
    }
    return out;
}

struct LevelGuard {
    ~LevelGuard() { simd::reset_level(); }
};

} // namespace

TEST_CASE("byte kernels match the reference on every available level") {
    LevelGuard guard;
    std::mt19937_64 rng(7);
    for (size_t n : {size_t{0}, size_t{1}, size_t{15}, size_t{31}, size_t{32}, size_t{33},
                     size_t{200}, size_t{4096}, size_t{4101}}) {
        std::vector<uint8_t> a(n), b(n);
        for (auto& v : a) v = static_cast<uint8_t>(rng());
        for (auto& v : b) v = static_cast<uint8_t>(rng() & (rng() & 1 ? 0xFF : 0x01));
        std::vector<uint8_t> want(n);
        ref_threshold(a.data(), want.data(), n);
        const uint64_t want_ov = ref_overlap(a.data(), b.data(), n);
        const uint64_t want_nz = ref_nonzero(a.data(), n);

        for (simd::Level level : simd::available_levels()) {
            CAPTURE(simd::level_name(level));
            CAPTURE(n);
            simd::force_level(level);
            std::vector<uint8_t> got(n);
            simd::threshold_mask(a.data(), got.data(), n);
            CHECK(got == want);
            CHECK(simd::overlap_count(a.data(), b.data(), n) == want_ov);
            CHECK(simd::nonzero_count(a.data(), n) == want_nz);
        }
    }
}

TEST_CASE("threshold boundary values 127 and 128") {
    LevelGuard guard;
    const std::vector<uint8_t> src = {0, 1, 126, 127, 128, 129, 254, 255};
    for (simd::Level level : simd::available_levels()) {
        simd::force_level(level);
        std::vector<uint8_t> dst(src.size());
        simd::threshold_mask(src.data(), dst.data(), src.size());
        CHECK(dst == std::vector<uint8_t>{0, 0, 0, 0, 1, 1, 1, 1});
    }
}

TEST_CASE("point-to-segments distance matches the reference exactly") {
    LevelGuard guard;
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> coord(-50.0, 50.0);
    for (int iter = 0; iter < 200; ++iter) {
        simd::SegmentSoa segs;
        const int count = 1 + static_cast<int>(rng() % 9);
        for (int i = 0; i < count; ++i) {
            const double x = coord(rng), y = coord(rng);
            // Include degenerate zero-length segments now and then.
            if (rng() % 7 == 0) {
                segs.push(x, y, x, y);
            } else {
                segs.push(x, y, coord(rng), coord(rng));
            }
        }
        const double px = coord(rng), py = coord(rng);
        const double want = ref_point_segments(px, py, segs);
        for (simd::Level level : simd::available_levels()) {
            CAPTURE(simd::level_name(level));
            simd::force_level(level);
            CHECK(simd::min_sqdist_point_segments(px, py, segs) == want);
        }
    }
}

TEST_CASE("point-to-segments distance of an empty set is infinite") {
    simd::SegmentSoa segs;
    CHECK(std::isinf(simd::min_sqdist_point_segments(1.0, 2.0, segs)));
}

TEST_CASE("farthest point from a segment matches the reference and keeps the earliest index") {
    LevelGuard guard;
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> coord(-40.0, 40.0);
    for (int iter = 0; iter < 200; ++iter) {
        const size_t n = rng() % 40;
        std::vector<double> xs(n), ys(n);
        for (size_t i = 0; i < n; ++i) {
            xs[i] = coord(rng);
            ys[i] = coord(rng);
        }
        const double ax = coord(rng), ay = coord(rng), bx = coord(rng), by = coord(rng);
        const simd::MaxDist want = ref_points_segment(xs.data(), ys.data(), n, ax, ay, bx, by);
        for (simd::Level level : simd::available_levels()) {
            CAPTURE(simd::level_name(level));
            CAPTURE(n);
            simd::force_level(level);
            const simd::MaxDist got =
                simd::max_sqdist_points_segment(xs.data(), ys.data(), n, ax, ay, bx, by);
            CHECK(got.sq == want.sq);
            CHECK(got.idx == want.idx);
        }
    }
}

TEST_CASE("farthest point ties resolve to the earliest point on every level") {
    LevelGuard guard;
    // Nine points mirrored around the x axis: equal distances in many lanes.
    const std::vector<double> xs = {0, 1, 2, 3, 4, 5, 6, 7, 8};
    const std::vector<double> ys = {3, -3, 3, -3, 3, -3, 3, -3, 3};
    for (simd::Level level : simd::available_levels()) {
        simd::force_level(level);
        const simd::MaxDist got =
            simd::max_sqdist_points_segment(xs.data(), ys.data(), xs.size(), -10, 0, 20, 0);
        CHECK(got.sq == 9.0);
        CHECK(got.idx == 0);
    }
}

TEST_CASE("empty point set reports index -1") {
    const simd::MaxDist got = simd::max_sqdist_points_segment(nullptr, nullptr, 0, 0, 0, 1, 0);
    CHECK(got.idx == -1);
    CHECK(got.sq == -1.0);
}

TEST_CASE("forcing an unavailable level is a configuration error") {
    LevelGuard guard;
    const auto levels = simd::available_levels();
    for (simd::Level l : {simd::Level::Avx2, simd::Level::Neon}) {
        if (std::find(levels.begin(), levels.end(), l) == levels.end()) {
            CHECK_THROWS_AS(simd::force_level(l), ConfigError);
        }
    }
    CHECK_NOTHROW(simd::force_level(simd::Level::Scalar));
}

TEST_CASE("scalar level is always available") {
    const auto levels = simd::available_levels();
    CHECK(std::find(levels.begin(), levels.end(), simd::Level::Scalar) != levels.end());
}
