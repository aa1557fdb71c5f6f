#pragma once

#include "ctxg/fsm/grammar.hpp"
#include "ctxg/io/transcripts.hpp"

namespace ctxg::fsm {

// Why the machine moved (or stayed) at a given sample.
enum class StepCause { None, Context, Duration };

struct TraceStep {
    int64_t sample = 0;            // output-rate sample index
    std::string context;           // 5-digit code seen at this sample
    std::string state_before;
    std::string state_after;       // == state_before when cause is None
    StepCause cause = StepCause::None;
    int64_t dwell_before = 0;      // samples spent in state_before prior to this one
};

struct Translation {
    io::GestureTranscript transcript;   // segment bounds in native frames
    std::vector<TraceStep> trace;       // one entry per sample when requested
};

// Runs the machine over a downsampled context transcript. Context triggers are
// checked first; a state's duration rule fires only when no context matched and
// (dwell + 1) * sample_period exceeds its threshold. Samples seen before the
// first transition out of the start state take the first reached state's label.
// Segment bounds are scaled to native frames by `stride`, and the terminal
// label (when configured) is appended as one extra sample worth of frames.
Translation translate(const io::ContextTranscript& ctx, const Grammar& g, int64_t stride,
                      bool want_trace = false);

// Rejects labels outside the grammar (terminal allowed), excluded labels, and
// malformed segment lists.
void validate_transcript(const io::GestureTranscript& t, const Grammar& g);

std::string trace_to_text(const std::vector<TraceStep>& trace, double rate_hz);

} // namespace ctxg::fsm
