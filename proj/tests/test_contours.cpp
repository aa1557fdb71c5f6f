#include <algorithm>

#include "doctest.h"

#include "ctxg/geom/contours.hpp"
#include "ctxg/geom/polygon.hpp"

using namespace ctxg;

namespace {

Mask mask_from(int w, int h, const char* rows) {
    Mask m(w, h);
    for (int y = 0; y < h; ++y) {
        for (int x = 0; x < w; ++x) {
            m.set(x, y, rows[y * w + x] == '#' ? 1 : 0);
        }
    }
    return m;
}

bool has_point(const geom::Polygon& p, double x, double y) {
    return std::any_of(p.pts.begin(), p.pts.end(),
                       [&](const Point& q) { return q.x == x && q.y == y; });
}

} // namespace

TEST_CASE("solid block traces to its four pixel-grid corners") {
    Mask m(16, 16);
    for (int y = 3; y < 13; ++y) {
        for (int x = 2; x < 12; ++x) m.set(x, y, 1);
    }
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].pts.size() == 4);
    CHECK(polys[0].area() == 100.0);
    CHECK(has_point(polys[0], 2, 3));
    CHECK(has_point(polys[0], 12, 3));
    CHECK(has_point(polys[0], 12, 13));
    CHECK(has_point(polys[0], 2, 13));
}

TEST_CASE("single pixel becomes a unit square") {
    Mask m(4, 4);
    m.set(2, 1, 1);
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].pts.size() == 4);
    CHECK(polys[0].area() == 1.0);
    CHECK(has_point(polys[0], 2, 1));
    CHECK(has_point(polys[0], 3, 2));
}

TEST_CASE("diagonally touching pixels are one component traced through the pinch") {
    const Mask m = mask_from(3, 3,
                             "#.."
                             ".#."
                             "...");
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].area() == 2.0);
    // The shared corner is passed twice.
    int visits = 0;
    for (const Point& p : polys[0].pts) {
        if (p.x == 1 && p.y == 1) ++visits;
    }
    CHECK(visits == 2);
}

TEST_CASE("anti-diagonal pinch also stays one component") {
    const Mask m = mask_from(3, 3,
                             ".#."
                             "#.."
                             "...");
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].area() == 2.0);
}

TEST_CASE("interior holes are not traced") {
    const Mask m = mask_from(5, 5,
                             "#####"
                             "#####"
                             "##.##"
                             "#####"
                             "#####");
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].pts.size() == 4);
    CHECK(polys[0].area() == 25.0);
}

TEST_CASE("separate components come out in scanline order") {
    const Mask m = mask_from(8, 4,
                             "......##"
                             "##....##"
                             "##......"
                             ".....#..");
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 3);
    // First encountered scanning rows: top-right block, then left block, then
    // the bottom pixel.
    CHECK(has_point(polys[0], 6, 0));
    CHECK(has_point(polys[1], 0, 1));
    CHECK(has_point(polys[2], 5, 3));
    CHECK(polys[0].area() == 4.0);
    CHECK(polys[1].area() == 4.0);
    CHECK(polys[2].area() == 1.0);
}

TEST_CASE("L shape emits only its six corners") {
    const Mask m = mask_from(4, 4,
                             "#..."
                             "#..."
                             "##.."
                             "....");
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].pts.size() == 6);
    CHECK(polys[0].area() == 4.0);
}

TEST_CASE("empty mask yields no contours") {
    const Mask m(10, 10);
    CHECK(geom::extract_outer_contours(m).empty());
}

TEST_CASE("full-frame mask traces the frame border") {
    Mask m(6, 3);
    std::fill(m.data.begin(), m.data.end(), uint8_t{1});
    const auto polys = geom::extract_outer_contours(m);
    REQUIRE(polys.size() == 1);
    CHECK(polys[0].area() == 18.0);
}
