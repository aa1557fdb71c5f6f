#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "ctxg/types.hpp"

// Data-parallel inner loops used by the geometry pipeline. Every kernel has a
// scalar reference implementation plus optional AVX2/NEON variants compiled
// into the same binary and selected at runtime. Float kernels are written so
// that every variant produces bit-identical results (elementwise IEEE ops,
// order-independent reductions, contraction disabled), which the equivalence
// tests assert.

namespace ctxg::simd {

enum class Level : uint8_t { Scalar, Avx2, Neon };

const char* level_name(Level l);

// Variants compiled in AND usable on this machine, scalar first.
std::vector<Level> available_levels();

// The variant the public kernel entry points currently route to.
Level active_level();

// Pin dispatch to one variant; throws ConfigError if it is unavailable.
void force_level(Level l);

// Reset to auto-detection (best available).
void reset_level();

// dst[i] = src[i] > 127 ? 1 : 0. src/dst may alias exactly, not partially.
void threshold_mask(const uint8_t* src, uint8_t* dst, size_t n);

// Number of positions where both bytes are nonzero.
uint64_t overlap_count(const uint8_t* a, const uint8_t* b, size_t n);

// Number of nonzero bytes.
uint64_t nonzero_count(const uint8_t* a, size_t n);

// Segment set in struct-of-arrays form. Degenerate segments (zero length)
// behave as points.
struct SegmentSoa {
    std::vector<double> x0, y0, dx, dy, inv_len2;

    size_t size() const { return x0.size(); }
    void push(double ax, double ay, double bx, double by);

    // Closed ring: one segment per vertex, including the wrap-around edge.
    static SegmentSoa from_ring(const std::vector<Point>& ring);
};

// min over all segments of squared distance from (px,py) to the segment.
// Empty set yields +infinity.
double min_sqdist_point_segments(double px, double py, const SegmentSoa& segs);

struct MaxDist {
    double sq = -1.0;       // squared distance; -1 when n == 0
    ptrdiff_t idx = -1;     // earliest index attaining it
};

// max over points (xs[i], ys[i]) of squared distance to segment a-b, with the
// earliest maximizing index. Ties resolve to the smallest index.
MaxDist max_sqdist_points_segment(const double* xs, const double* ys, size_t n,
                                  double ax, double ay, double bx, double by);

namespace detail {

struct Ops {
    void (*threshold_mask)(const uint8_t*, uint8_t*, size_t);
    uint64_t (*overlap_count)(const uint8_t*, const uint8_t*, size_t);
    uint64_t (*nonzero_count)(const uint8_t*, size_t);
    double (*min_sqdist_point_segments)(double, double, const SegmentSoa&);
    MaxDist (*max_sqdist_points_segment)(const double*, const double*, size_t,
                                         double, double, double, double);
};

// Table for one variant; throws ConfigError if that variant is unavailable.
const Ops& ops_for(Level l);

} // namespace detail

} // namespace ctxg::simd
