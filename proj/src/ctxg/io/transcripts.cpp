#include "ctxg/io/transcripts.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

#include "ctxg/io/fsio.hpp"
#include "ctxg/io/text_config.hpp"

namespace ctxg::io {

namespace {

std::string rate_comment(double rate_hz) {
    if (rate_hz <= 0) return "";
    char buf[64];
    std::snprintf(buf, sizeof buf, "# rate_hz=%g\n", rate_hz);
    return buf;
}

// "# rate_hz=3" anywhere in the leading comments.
double scan_rate(const std::string& line) {
    const size_t at = line.find("rate_hz=");
    if (at == std::string::npos) return 0.0;
    return std::strtod(line.c_str() + at + 8, nullptr);
}

} // namespace

std::string context_to_csv(const ContextTranscript& t) {
    std::string out = rate_comment(t.rate_hz);
    out += "sample_index,LH,LC,RH,RC,S5\n";
    for (size_t i = 0; i < t.samples.size(); ++i) {
        const ContextState& s = t.samples[i];
        out += std::to_string(i);
        for (int k = 0; k < 5; ++k) {
            out += ',';
            out += std::to_string(static_cast<int>(s[static_cast<size_t>(k)]));
        }
        out += '\n';
    }
    return out;
}

ContextTranscript context_from_csv(const std::string& content, const std::string& origin) {
    ContextTranscript t;
    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    bool saw_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const double r = scan_rate(line);
            if (r > 0) t.rate_hz = r;
            continue;
        }
        if (!saw_header) {
            if (line.find("sample_index") == std::string::npos)
                throw DataError(origin + ":" + std::to_string(line_no) +
                                ": expected header 'sample_index,LH,LC,RH,RC,S5'");
            saw_header = true;
            continue;
        }
        const std::string where = origin + ":" + std::to_string(line_no);
        std::stringstream ss(line);
        std::string f;
        std::vector<std::string> fields;
        while (std::getline(ss, f, ',')) fields.push_back(trim(f));
        if (fields.size() != 6) throw DataError(where + ": expected 6 fields");
        const long long idx = parse_int(fields[0], where);
        if (idx != static_cast<long long>(t.samples.size()))
            throw DataError(where + ": sample_index must be dense from 0, got " + fields[0]);
        ContextState s;
        for (int k = 0; k < 5; ++k) {
            const long long v = parse_int(fields[static_cast<size_t>(k + 1)], where);
            if (v < 0 || v > 9) throw DataError(where + ": variable out of range: " + fields[static_cast<size_t>(k + 1)]);
            s[static_cast<size_t>(k)] = static_cast<uint8_t>(v);
        }
        t.samples.push_back(s);
    }
    if (!saw_header) throw DataError(origin + ": missing context CSV header");
    return t;
}

void write_context_csv(const std::filesystem::path& p, const ContextTranscript& t) {
    write_file_atomic(p, context_to_csv(t));
}

ContextTranscript read_context_csv(const std::filesystem::path& p) {
    return context_from_csv(read_file(p), p.string());
}

void check_segments(const GestureTranscript& t, const std::string& origin) {
    int64_t prev_end = INT64_MIN;
    for (size_t i = 0; i < t.segments.size(); ++i) {
        const GestureSegment& s = t.segments[i];
        const std::string where = origin + ", segment " + std::to_string(i);
        if (s.label.empty()) throw ValidationError(where + ": empty label");
        if (s.start >= s.end)
            throw ValidationError(where + ": start " + std::to_string(s.start) +
                                  " not before end " + std::to_string(s.end));
        if (s.start < prev_end)
            throw ValidationError(where + ": overlaps or precedes previous segment");
        prev_end = s.end;
    }
}

std::string gestures_to_text(const GestureTranscript& t) {
    check_segments(t, "gesture transcript");
    std::string out = rate_comment(t.rate_hz);
    for (const GestureSegment& s : t.segments) {
        out += std::to_string(s.start);
        out += ' ';
        out += std::to_string(s.end - 1); // inclusive on disk
        out += ' ';
        out += s.label;
        out += '\n';
    }
    return out;
}

GestureTranscript gestures_from_text(const std::string& content, const std::string& origin) {
    GestureTranscript t;
    std::istringstream in(content);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        line = trim(line);
        if (line.empty()) continue;
        if (line[0] == '#') {
            const double r = scan_rate(line);
            if (r > 0) t.rate_hz = r;
            continue;
        }
        const std::string where = origin + ":" + std::to_string(line_no);
        std::istringstream ls(line);
        long long a = 0, b = 0;
        std::string label;
        if (!(ls >> a >> b >> label))
            throw DataError(where + ": expected 'start end label'");
        std::string extra;
        if (ls >> extra) throw DataError(where + ": trailing content '" + extra + "'");
        t.segments.push_back({a, b + 1, label});
    }
    check_segments(t, origin);
    return t;
}

void write_gesture_transcript(const std::filesystem::path& p, const GestureTranscript& t) {
    write_file_atomic(p, gestures_to_text(t));
}

GestureTranscript read_gesture_transcript(const std::filesystem::path& p) {
    return gestures_from_text(read_file(p), p.string());
}

} // namespace ctxg::io
