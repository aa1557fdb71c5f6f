#include "ctxg/io/annotations.hpp"

#include <cstdlib>
#include <sstream>

#include "ctxg/io/fsio.hpp"
#include "ctxg/io/text_config.hpp"

namespace ctxg::io {

namespace {

std::vector<std::string> csv_fields(const std::string& line) {
    std::vector<std::string> out;
    std::stringstream ss(line);
    std::string f;
    while (std::getline(ss, f, ',')) out.push_back(trim(f));
    return out;
}

double num(const std::string& s, const std::string& where) {
    char* end = nullptr;
    const double v = std::strtod(s.c_str(), &end);
    if (end == s.c_str() || *end != '\0')
        throw DataError(where + ": not a number: '" + s + "'");
    return v;
}

void check_bounds(const Point& pt, int width, int height, const std::string& where) {
    if (pt.x < 0 || pt.y < 0 || pt.x > width || pt.y > height)
        throw DataError(where + ": point (" + std::to_string(pt.x) + "," + std::to_string(pt.y) +
                        ") outside image bounds " + std::to_string(width) + "x" + std::to_string(height));
}

} // namespace

std::vector<JawFrame> load_jaw_series(const std::filesystem::path& p, int frame_count,
                                      int width, int height) {
    const std::string content = read_file(p);
    std::vector<std::pair<int, JawFrame>> rows;

    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        if (line_no == 1 && line.find_first_not_of("0123456789 \t,.-+eE") != std::string::npos)
            continue; // header row
        const std::string where = p.string() + ":" + std::to_string(line_no);
        const auto f = csv_fields(line);
        if (f.size() != 9) throw DataError(where + ": expected 9 fields, got " + std::to_string(f.size()));
        const int frame = static_cast<int>(num(f[0], where));
        JawFrame jf;
        jf.l1 = {num(f[1], where), num(f[2], where)};
        jf.l2 = {num(f[3], where), num(f[4], where)};
        jf.r1 = {num(f[5], where), num(f[6], where)};
        jf.r2 = {num(f[7], where), num(f[8], where)};
        for (const Point& pt : {jf.l1, jf.l2, jf.r1, jf.r2}) check_bounds(pt, width, height, where);
        if (frame < 0 || frame >= frame_count)
            throw DataError(where + ": frame " + std::to_string(frame) + " outside [0," +
                            std::to_string(frame_count) + ")");
        if (!rows.empty() && frame <= rows.back().first)
            throw DataError(where + ": frames must be strictly increasing");
        rows.emplace_back(frame, jf);
    }
    if (rows.empty()) throw DataError(p.string() + ": no jaw annotation rows");

    std::vector<JawFrame> out(static_cast<size_t>(frame_count));
    size_t r = 0;
    for (int f = 0; f < frame_count; ++f) {
        while (r + 1 < rows.size() && rows[r + 1].first <= f) ++r;
        // frames before the first row inherit it
        out[static_cast<size_t>(f)] = rows[r].second;
    }
    return out;
}

std::vector<Point> load_points_file(const std::filesystem::path& p, int width, int height) {
    const std::string content = read_file(p);
    std::vector<Point> out;
    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty() || line[0] == '#') continue;
        const std::string where = p.string() + ":" + std::to_string(line_no);
        const auto f = csv_fields(line);
        if (f.size() != 2) throw DataError(where + ": expected x,y");
        Point pt{num(f[0], where), num(f[1], where)};
        check_bounds(pt, width, height, where);
        out.push_back(pt);
    }
    if (out.empty()) throw DataError(p.string() + ": no points");
    return out;
}

} // namespace ctxg::io
