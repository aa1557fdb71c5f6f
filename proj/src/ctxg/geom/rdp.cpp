#include "ctxg/geom/rdp.hpp"

#include <utility>

#include "ctxg/simd/kernels.hpp"

namespace ctxg::geom {

namespace {

// Chain simplification over SoA coordinates; marks kept indices in keep.
void rdp_mark(const double* xs, const double* ys, size_t lo, size_t hi,
              double eps_sq, std::vector<uint8_t>& keep) {
    std::vector<std::pair<size_t, size_t>> work{{lo, hi}};
    while (!work.empty()) {
        auto [a, b] = work.back();
        work.pop_back();
        if (b - a < 2) continue;
        const auto md = simd::max_sqdist_points_segment(xs + a + 1, ys + a + 1, b - a - 1,
                                                        xs[a], ys[a], xs[b], ys[b]);
        if (md.sq >= eps_sq) {
            const size_t split = a + 1 + static_cast<size_t>(md.idx);
            keep[split] = 1;
            work.emplace_back(a, split);
            work.emplace_back(split, b);
        }
    }
}

std::vector<Point> collect(const std::vector<Point>& pts, const std::vector<uint8_t>& keep) {
    std::vector<Point> out;
    for (size_t i = 0; i < pts.size(); ++i)
        if (keep[i]) out.push_back(pts[i]);
    return out;
}

} // namespace

std::vector<Point> rdp_chain(const std::vector<Point>& pts, double epsilon) {
    if (epsilon <= 0.0 || pts.size() < 3) return pts;
    const size_t n = pts.size();
    std::vector<double> xs(n), ys(n);
    for (size_t i = 0; i < n; ++i) {
        xs[i] = pts[i].x;
        ys[i] = pts[i].y;
    }
    std::vector<uint8_t> keep(n, 0);
    keep[0] = keep[n - 1] = 1;
    rdp_mark(xs.data(), ys.data(), 0, n - 1, epsilon * epsilon, keep);
    return collect(pts, keep);
}

Polygon rdp_ring(const Polygon& ring, double epsilon) {
    if (epsilon <= 0.0 || ring.pts.size() < 3) return ring;
    const size_t n = ring.pts.size();

    // Anchor at vertex 0 and the vertex farthest from it (earliest on ties),
    // then simplify the two halves independently.
    size_t far_idx = 1;
    double far_sq = -1.0;
    for (size_t i = 1; i < n; ++i) {
        const double dx = ring.pts[i].x - ring.pts[0].x;
        const double dy = ring.pts[i].y - ring.pts[0].y;
        const double d = dx * dx + dy * dy;
        if (d > far_sq) {
            far_sq = d;
            far_idx = i;
        }
    }

    std::vector<Point> half1(ring.pts.begin(), ring.pts.begin() + far_idx + 1);
    std::vector<Point> half2(ring.pts.begin() + far_idx, ring.pts.end());
    half2.push_back(ring.pts[0]);

    std::vector<Point> s1 = rdp_chain(half1, epsilon);
    std::vector<Point> s2 = rdp_chain(half2, epsilon);

    Polygon out;
    out.pts.assign(s1.begin(), s1.end());
    // s2 starts with the far anchor (already present) and ends with vertex 0.
    out.pts.insert(out.pts.end(), s2.begin() + 1, s2.end() - 1);
    return out;
}

} // namespace ctxg::geom
