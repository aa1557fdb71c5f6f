#pragma once

#include <filesystem>

#include "ctxg/types.hpp"

namespace ctxg::io {

// Jaw end markers for both graspers in one frame.
struct JawFrame {
    Point l1, l2, r1, r2;
};

// CSV rows "frame,lx1,ly1,lx2,ly2,rx1,ry1,rx2,ry2" with an optional header
// line. Rows are sparse: frames between annotated rows inherit the previous
// row, frames before the first row inherit the first. All points must lie
// within [0,width] x [0,height]. Returns one entry per native frame.
std::vector<JawFrame> load_jaw_series(const std::filesystem::path& p, int frame_count,
                                      int width, int height);

// One "x,y" pair per line; same bounds check.
std::vector<Point> load_points_file(const std::filesystem::path& p, int width, int height);

} // namespace ctxg::io
