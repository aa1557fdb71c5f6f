#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "doctest.h"

#include "ctxg/geom/distance.hpp"
#include "ctxg/geom/raster.hpp"
#include "ctxg/geom/rdp.hpp"

using namespace ctxg;

namespace {

geom::Polygon poly(std::initializer_list<Point> pts) {
    geom::Polygon p;
    p.pts = pts;
    return p;
}

geom::Polygon rect(double x0, double y0, double x1, double y1) {
    return poly({{x0, y0}, {x1, y0}, {x1, y1}, {x0, y1}});
}

// Independent segment-segment distance for the distance oracle.
double seg_point_dist2(Point a, Point b, Point p) {
    const double dx = b.x - a.x, dy = b.y - a.y;
    const double len2 = dx * dx + dy * dy;
    double t = len2 > 0 ? ((p.x - a.x) * dx + (p.y - a.y) * dy) / len2 : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double ex = p.x - (a.x + t * dx), ey = p.y - (a.y + t * dy);
    return ex * ex + ey * ey;
}

double cross3(Point o, Point a, Point b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

bool segs_intersect(Point a, Point b, Point c, Point d) {
    const double d1 = cross3(c, d, a), d2 = cross3(c, d, b);
    const double d3 = cross3(a, b, c), d4 = cross3(a, b, d);
    if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
        ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
        return true;
    }
    const auto on = [](Point p, Point q, Point r) {
        return cross3(p, q, r) == 0 && std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) &&
               std::min(p.y, q.y) <= r.y && r.y <= std::max(p.y, q.y);
    };
    return on(c, d, a) || on(c, d, b) || on(a, b, c) || on(a, b, d);
}

bool pip_oracle(const geom::Polygon& p, Point q) {
    bool inside = false;
    const size_t n = p.pts.size();
    for (size_t i = 0, j = n - 1; i < n; j = i++) {
        const Point& a = p.pts[j];
        const Point& b = p.pts[i];
        if ((b.y <= q.y) != (a.y <= q.y)) {
            const double x = b.x + (q.y - b.y) * (a.x - b.x) / (a.y - b.y);
            if (q.x < x) inside = !inside;
        }
    }
    return inside;
}

double brute_polygon_dist(const geom::Polygon& a, const geom::Polygon& b) {
    const size_t n = a.pts.size(), m = b.pts.size();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            if (segs_intersect(a.pts[i], a.pts[(i + 1) % n], b.pts[j], b.pts[(j + 1) % m])) {
                return 0.0;
            }
        }
    }
    if (pip_oracle(b, a.pts[0]) || pip_oracle(a, b.pts[0])) return 0.0;
    double best = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j < m; ++j) {
            best = std::min(best, seg_point_dist2(b.pts[j], b.pts[(j + 1) % m], a.pts[i]));
            best = std::min(best, seg_point_dist2(a.pts[i], a.pts[(i + 1) % n], b.pts[j]));
        }
    }
    return std::sqrt(best);
}

geom::Polygon random_convex(std::mt19937_64& rng, double cx, double cy, double radius) {
    std::uniform_real_distribution<double> rd(radius * 0.4, radius);
    const int n = 3 + static_cast<int>(rng() % 8);
    std::vector<double> angles(n);
    std::uniform_real_distribution<double> ad(0.0, 6.283185307179586);
    for (auto& a : angles) a = ad(rng);
    std::sort(angles.begin(), angles.end());
    geom::Polygon p;
    const double r = rd(rng);
    for (double a : angles) p.pts.push_back({cx + r * std::cos(a), cy + r * std::sin(a)});
    return p;
}

} // namespace

TEST_CASE("polygon area, midpoint and bbox") {
    const geom::Polygon p = rect(2, 3, 7, 9);
    CHECK(p.area() == 30.0);
    CHECK(p.midpoint().x == 4.5);
    CHECK(p.midpoint().y == 6.0);
    const geom::BBox b = p.bbox();
    CHECK(b.x0 == 2);
    CHECK(b.y1 == 9);
}

TEST_CASE("shape midpoint averages all vertices across components") {
    geom::ObjectShape s;
    s.components.push_back(rect(0, 0, 2, 2));
    s.components.push_back(poly({{10, 10}, {14, 10}, {12, 14}}));
    // 4 + 3 vertices, mean of all of them.
    const Point mid = s.midpoint();
    CHECK(mid.x == doctest::Approx((0 + 2 + 2 + 0 + 10 + 14 + 12) / 7.0));
    CHECK(mid.y == doctest::Approx((0 + 0 + 2 + 2 + 10 + 10 + 14) / 7.0));
}

TEST_CASE("chain simplification keeps clear corners and drops jitter") {
    std::vector<Point> chain;
    for (int x = 0; x <= 20; ++x) chain.push_back({double(x), (x % 2) * 0.4});
    const auto simplified = geom::rdp_chain(chain, 1.5);
    CHECK(simplified.size() == 2);
    CHECK(simplified.front().x == 0);
    CHECK(simplified.back().x == 20);

    std::vector<Point> spike = {{0, 0}, {5, 0}, {6, 4}, {7, 0}, {12, 0}};
    const auto kept = geom::rdp_chain(spike, 1.5);
    CHECK(kept.size() == 5);
}

TEST_CASE("ring simplification collapses edge midpoints of a square") {
    const geom::Polygon ring = poly({{0, 0}, {5, 0}, {10, 0}, {10, 5},
                                     {10, 10}, {5, 10}, {0, 10}, {0, 5}});
    const geom::Polygon out = geom::rdp_ring(ring, 1.5);
    REQUIRE(out.pts.size() == 4);
    CHECK(out.area() == 100.0);
}

TEST_CASE("zero epsilon leaves rings untouched") {
    const geom::Polygon ring = poly({{0, 0}, {5, 0}, {10, 0}, {10, 10}, {0, 10}});
    CHECK(geom::rdp_ring(ring, 0.0).pts.size() == 5);
}

TEST_CASE("component distance: touching, crossing, containment, gap") {
    CHECK(geom::object_distance({{rect(0, 0, 4, 4)}}, {{rect(4, 0, 8, 4)}}) == 0.0);
    CHECK(geom::object_distance({{rect(0, 0, 4, 4)}}, {{rect(2, 2, 8, 8)}}) == 0.0);
    CHECK(geom::object_distance({{rect(0, 0, 10, 10)}}, {{rect(4, 4, 6, 6)}}) == 0.0);
    CHECK(geom::object_distance({{rect(0, 0, 4, 4)}}, {{rect(5, 0, 9, 4)}}) == 1.0);
    CHECK(geom::object_distance({{rect(0, 0, 4, 4)}}, {{rect(7, 7, 9, 9)}}) ==
          doctest::Approx(std::sqrt(18.0)));
}

TEST_CASE("object distance averages over component pairs") {
    geom::ObjectShape a;
    a.components.push_back(rect(0, 0, 2, 2));    // 1 away from b
    a.components.push_back(rect(13, 0, 15, 2));  // 3 away from b
    geom::ObjectShape b;
    b.components.push_back(rect(3, 0, 10, 2));
    CHECK(geom::object_distance(a, b) == doctest::Approx(2.0));
}

TEST_CASE("distance to an empty shape is infinite") {
    geom::ObjectShape a;
    a.components.push_back(rect(0, 0, 2, 2));
    CHECK(std::isinf(geom::object_distance(a, {})));
    CHECK(std::isinf(geom::object_distance({}, {})));
}

TEST_CASE("component distance agrees with a brute-force oracle") {
    std::mt19937_64 rng(29);
    std::uniform_real_distribution<double> off(-60.0, 60.0);
    for (int iter = 0; iter < 250; ++iter) {
        const geom::Polygon a = random_convex(rng, 60, 60, 25);
        const geom::Polygon b = random_convex(rng, 60 + off(rng), 60 + off(rng), 20);
        const double got = geom::object_distance({{a}}, {{b}});
        const double want = brute_polygon_dist(a, b);
        CAPTURE(iter);
        CHECK(got == doctest::Approx(want).epsilon(1e-9));
    }
}

TEST_CASE("intersection area is exact for pixel-aligned rectangles") {
    CHECK(geom::intersection_area({{rect(0, 0, 10, 10)}}, {{rect(5, 5, 15, 15)}}) == 25.0);
    CHECK(geom::intersection_area({{rect(0, 0, 10, 10)}}, {{rect(10, 0, 20, 10)}}) == 0.0);
    CHECK(geom::intersection_area({{rect(0, 0, 10, 10)}}, {{rect(20, 20, 30, 30)}}) == 0.0);
}

TEST_CASE("intersection of identical shapes is clamped to the polygon area") {
    const geom::Polygon tri = poly({{0.5, 0.5}, {20.5, 0.5}, {0.5, 20.5}});
    const double area = tri.area();
    CHECK(geom::intersection_area({{tri}}, {{tri}}) == area);
}

TEST_CASE("nested shapes intersect with the inner area") {
    CHECK(geom::intersection_area({{rect(0, 0, 30, 30)}}, {{rect(10, 10, 14, 14)}}) == 16.0);
}

TEST_CASE("intersection area matches a point-in-polygon pixel oracle") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> off(-25.0, 25.0);
    for (int iter = 0; iter < 60; ++iter) {
        const geom::Polygon a = random_convex(rng, 50, 50, 22);
        const geom::Polygon b = random_convex(rng, 50 + off(rng), 50 + off(rng), 22);
        double oracle = 0;
        for (int y = 0; y < 100; ++y) {
            for (int x = 0; x < 100; ++x) {
                const Point c{x + 0.5, y + 0.5};
                if (pip_oracle(a, c) && pip_oracle(b, c)) oracle += 1.0;
            }
        }
        const double got = geom::intersection_area({{a}}, {{b}});
        CAPTURE(iter);
        CHECK(std::abs(got - oracle) <= std::max(0.05 * oracle, 8.0));
    }
}

TEST_CASE("empty shapes never intersect") {
    CHECK(geom::intersection_area({}, {{rect(0, 0, 5, 5)}}) == 0.0);
}
