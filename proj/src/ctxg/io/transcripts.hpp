#pragma once

#include <filesystem>
#include <string>

#include "ctxg/types.hpp"

namespace ctxg::io {

// Downsampled context samples for one trial.
struct ContextTranscript {
    double rate_hz = 0.0;   // samples per second; 0 = unknown
    std::vector<ContextState> samples;
};

// CSV with header "sample_index,LH,LC,RH,RC,S5"; the sample rate rides along
// in a "# rate_hz=" comment so a round trip is lossless.
std::string context_to_csv(const ContextTranscript& t);
ContextTranscript context_from_csv(const std::string& content, const std::string& origin);
void write_context_csv(const std::filesystem::path& p, const ContextTranscript& t);
ContextTranscript read_context_csv(const std::filesystem::path& p);

// One labeled span. Internally half-open [start, end) in frames of the
// transcript's rate basis; the file format uses inclusive ends.
struct GestureSegment {
    int64_t start = 0;
    int64_t end = 0;       // exclusive
    std::string label;

    bool operator==(const GestureSegment&) const = default;
};

struct GestureTranscript {
    double rate_hz = 0.0;
    std::vector<GestureSegment> segments;
};

// Lines "start end label" with inclusive end frames, preceded by a
// "# rate_hz=" comment when the rate is known.
std::string gestures_to_text(const GestureTranscript& t);
GestureTranscript gestures_from_text(const std::string& content, const std::string& origin);
void write_gesture_transcript(const std::filesystem::path& p, const GestureTranscript& t);
GestureTranscript read_gesture_transcript(const std::filesystem::path& p);

// Structural checks shared by reader and writer: nonempty labels, start <
// end, segments ordered and non-overlapping. Throws ValidationError.
void check_segments(const GestureTranscript& t, const std::string& origin);

} // namespace ctxg::io
