#include "ctxg/geom/distance.hpp"

#include <cmath>
#include <limits>

#include "ctxg/simd/kernels.hpp"

namespace ctxg::geom {

namespace {

inline double orient(const Point& p, const Point& q, const Point& r) {
    return (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x);
}

// Transversal crossing with both segments strictly split by the other's
// line. Touching configurations are left to the distance fallback, which
// reports 0 for them anyway.
bool properly_cross(const Point& a1, const Point& a2, const Point& b1, const Point& b2) {
    const double o1 = orient(a1, a2, b1);
    const double o2 = orient(a1, a2, b2);
    const double o3 = orient(b1, b2, a1);
    const double o4 = orient(b1, b2, a2);
    return ((o1 > 0 && o2 < 0) || (o1 < 0 && o2 > 0)) &&
           ((o3 > 0 && o4 < 0) || (o3 < 0 && o4 > 0));
}

bool boundaries_cross(const Polygon& a, const Polygon& b) {
    const size_t na = a.pts.size();
    const size_t nb = b.pts.size();
    for (size_t i = 0; i < na; ++i) {
        const Point& a1 = a.pts[i];
        const Point& a2 = a.pts[(i + 1) % na];
        for (size_t j = 0; j < nb; ++j) {
            if (properly_cross(a1, a2, b.pts[j], b.pts[(j + 1) % nb])) return true;
        }
    }
    return false;
}

double min_boundary_sqdist(const Polygon& a, const simd::SegmentSoa& sa,
                           const Polygon& b, const simd::SegmentSoa& sb) {
    double best = std::numeric_limits<double>::infinity();
    for (const Point& p : a.pts) {
        const double d = simd::min_sqdist_point_segments(p.x, p.y, sb);
        if (d < best) best = d;
    }
    for (const Point& p : b.pts) {
        const double d = simd::min_sqdist_point_segments(p.x, p.y, sa);
        if (d < best) best = d;
    }
    return best;
}

double component_distance_prepared(const Polygon& a, const simd::SegmentSoa& sa,
                                   const Polygon& b, const simd::SegmentSoa& sb) {
    if (a.pts.empty() || b.pts.empty()) return std::numeric_limits<double>::infinity();
    if (boundaries_cross(a, b)) return 0.0;
    // No crossing: containment means one polygon lies entirely inside the other.
    if (point_in_polygon(a.pts[0], b) || point_in_polygon(b.pts[0], a)) return 0.0;
    // For non-crossing boundaries the closest approach is attained at a
    // vertex of one chain against a segment of the other.
    return std::sqrt(min_boundary_sqdist(a, sa, b, sb));
}

} // namespace

double component_distance(const Polygon& a, const Polygon& b) {
    const auto sa = simd::SegmentSoa::from_ring(a.pts);
    const auto sb = simd::SegmentSoa::from_ring(b.pts);
    return component_distance_prepared(a, sa, b, sb);
}

double object_distance(const ObjectShape& a, const ObjectShape& b) {
    if (a.empty() || b.empty()) return std::numeric_limits<double>::infinity();

    std::vector<simd::SegmentSoa> sa;
    sa.reserve(a.components.size());
    for (const Polygon& c : a.components) sa.push_back(simd::SegmentSoa::from_ring(c.pts));
    std::vector<simd::SegmentSoa> sb;
    sb.reserve(b.components.size());
    for (const Polygon& c : b.components) sb.push_back(simd::SegmentSoa::from_ring(c.pts));

    double sum = 0.0;
    for (size_t i = 0; i < a.components.size(); ++i)
        for (size_t j = 0; j < b.components.size(); ++j)
            sum += component_distance_prepared(a.components[i], sa[i], b.components[j], sb[j]);
    return sum / (static_cast<double>(a.components.size()) * static_cast<double>(b.components.size()));
}

} // namespace ctxg::geom
