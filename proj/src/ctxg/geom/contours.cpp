#include "ctxg/geom/contours.hpp"

#include <cstring>

namespace ctxg::geom {

namespace {

enum Dir : uint8_t { E = 0, S = 1, W = 2, N = 3 };

constexpr int kDx[4] = {1, 0, -1, 0};
constexpr int kDy[4] = {0, 1, 0, -1};

inline Dir turn_left(Dir d) { return static_cast<Dir>((d + 3) & 3); }
inline Dir turn_right(Dir d) { return static_cast<Dir>((d + 1) & 3); }

struct Grid {
    const uint8_t* data;
    int w, h;

    bool fg(int x, int y) const {
        if (x < 0 || y < 0 || x >= w || y >= h) return false;
        return data[static_cast<size_t>(y) * w + x] != 0;
    }
};

// Pixel to the left/right of travel direction d at corner (cx, cy). The wall
// follower keeps the component on its right; at diagonal pinches the left
// turn wins, which treats diagonally touching pixels as connected (matching
// the 8-connected labeling).
inline bool left_pixel(const Grid& g, int cx, int cy, Dir d) {
    switch (d) {
        case E: return g.fg(cx, cy - 1);
        case S: return g.fg(cx, cy);
        case W: return g.fg(cx - 1, cy);
        case N: return g.fg(cx - 1, cy - 1);
    }
    return false;
}

inline bool right_pixel(const Grid& g, int cx, int cy, Dir d) {
    switch (d) {
        case E: return g.fg(cx, cy);
        case S: return g.fg(cx - 1, cy);
        case W: return g.fg(cx - 1, cy - 1);
        case N: return g.fg(cx, cy - 1);
    }
    return false;
}

// Trace the crack boundary starting at the top-left corner of the
// component's first scanline pixel. Distinct 8-connected components never
// share a 2x2 pixel block, so the raw mask is a safe membership test here.
Polygon trace_boundary(const Grid& g, int sx, int sy) {
    Polygon poly;
    const int startx = sx;
    const int starty = sy;
    int cx = startx;
    int cy = starty;
    Dir dir = E;

    do {
        cx += kDx[dir];
        cy += kDy[dir];
        Dir ndir;
        if (left_pixel(g, cx, cy, dir)) {
            ndir = turn_left(dir);
        } else if (right_pixel(g, cx, cy, dir)) {
            ndir = dir;
        } else {
            ndir = turn_right(dir);
        }
        if (ndir != dir)
            poly.pts.push_back({static_cast<double>(cx), static_cast<double>(cy)});
        dir = ndir;
    } while (!(cx == startx && cy == starty && dir == E));

    // Corners are emitted in traversal order ending at the start corner
    // (always a turn, entered heading N and left heading E); rotate so the
    // ring begins there.
    if (!poly.pts.empty()) {
        poly.pts.insert(poly.pts.begin(), poly.pts.back());
        poly.pts.pop_back();
    }
    return poly;
}

} // namespace

std::vector<Polygon> extract_outer_contours(const Mask& mask, std::vector<uint8_t>& visited) {
    std::vector<Polygon> out;
    const int w = mask.width;
    const int h = mask.height;
    if (w <= 0 || h <= 0) return out;

    visited.assign(static_cast<size_t>(w) * h, 0);
    const Grid grid{mask.data.data(), w, h};

    // Word-at-a-time scan: most rows of a mask are empty.
    const uint8_t* bytes = mask.data.data();
    const size_t total = mask.data.size();
    std::vector<int> stack;

    size_t i = 0;
    while (i < total) {
        if ((i & 7) == 0 && i + 8 <= total) {
            uint64_t word;
            std::memcpy(&word, bytes + i, 8);
            if (word == 0) {
                i += 8;
                continue;
            }
        }
        if (bytes[i] != 0 && !visited[i]) {
            const int sx = static_cast<int>(i % w);
            const int sy = static_cast<int>(i / w);
            out.push_back(trace_boundary(grid, sx, sy));

            // Flood-fill the component so later pixels do not retrigger it.
            stack.clear();
            stack.push_back(static_cast<int>(i));
            visited[i] = 1;
            while (!stack.empty()) {
                const int p = stack.back();
                stack.pop_back();
                const int px = p % w;
                const int py = p / w;
                for (int dy = -1; dy <= 1; ++dy) {
                    for (int dx = -1; dx <= 1; ++dx) {
                        if (dx == 0 && dy == 0) continue;
                        const int nx = px + dx;
                        const int ny = py + dy;
                        if (nx < 0 || ny < 0 || nx >= w || ny >= h) continue;
                        const size_t q = static_cast<size_t>(ny) * w + nx;
                        if (bytes[q] != 0 && !visited[q]) {
                            visited[q] = 1;
                            stack.push_back(static_cast<int>(q));
                        }
                    }
                }
            }
        }
        ++i;
    }
    return out;
}

std::vector<Polygon> extract_outer_contours(const Mask& mask) {
    std::vector<uint8_t> visited;
    return extract_outer_contours(mask, visited);
}

} // namespace ctxg::geom
