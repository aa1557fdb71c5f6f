#include "ctxg/geom/polygon.hpp"

#include <cmath>
#include <limits>

namespace ctxg::geom {

double Polygon::signed_area() const {
    const size_t n = pts.size();
    if (n < 3) return 0.0;
    double acc = 0.0;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = pts[i];
        const Point& b = pts[(i + 1) % n];
        acc += a.x * b.y - b.x * a.y;
    }
    return acc * 0.5;
}

double Polygon::area() const { return std::fabs(signed_area()); }

Point Polygon::midpoint() const {
    Point m;
    if (pts.empty()) return m;
    for (const Point& p : pts) {
        m.x += p.x;
        m.y += p.y;
    }
    m.x /= static_cast<double>(pts.size());
    m.y /= static_cast<double>(pts.size());
    return m;
}

BBox Polygon::bbox() const {
    BBox b;
    if (pts.empty()) return b;
    b.x0 = b.x1 = pts[0].x;
    b.y0 = b.y1 = pts[0].y;
    for (const Point& p : pts) {
        if (p.x < b.x0) b.x0 = p.x;
        if (p.x > b.x1) b.x1 = p.x;
        if (p.y < b.y0) b.y0 = p.y;
        if (p.y > b.y1) b.y1 = p.y;
    }
    return b;
}

double ObjectShape::total_area() const {
    double a = 0.0;
    for (const Polygon& c : components) a += c.area();
    return a;
}

Point ObjectShape::midpoint() const {
    Point m;
    size_t n = 0;
    for (const Polygon& c : components) {
        for (const Point& p : c.pts) {
            m.x += p.x;
            m.y += p.y;
            ++n;
        }
    }
    if (n == 0) return m;
    m.x /= static_cast<double>(n);
    m.y /= static_cast<double>(n);
    return m;
}

BBox ObjectShape::bbox() const {
    BBox b;
    bool first = true;
    for (const Polygon& c : components) {
        if (c.pts.empty()) continue;
        BBox cb = c.bbox();
        if (first) {
            b = cb;
            first = false;
        } else {
            if (cb.x0 < b.x0) b.x0 = cb.x0;
            if (cb.y0 < b.y0) b.y0 = cb.y0;
            if (cb.x1 > b.x1) b.x1 = cb.x1;
            if (cb.y1 > b.y1) b.y1 = cb.y1;
        }
    }
    return b;
}

bool point_in_polygon(const Point& p, const Polygon& poly) {
    const size_t n = poly.pts.size();
    bool inside = false;
    for (size_t i = 0; i < n; ++i) {
        const Point& a = poly.pts[i];
        const Point& b = poly.pts[(i + 1) % n];
        if ((a.y <= p.y) != (b.y <= p.y)) {
            const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
            if (p.x < x) inside = !inside;
        }
    }
    return inside;
}

} // namespace ctxg::geom
