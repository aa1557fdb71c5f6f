#pragma once

#include <cstdint>

#include "ctxg/fsm/grammar.hpp"
#include "ctxg/io/transcripts.hpp"

namespace ctxg::fsm {

struct WalkOptions {
    uint64_t seed = 1;
    int min_gestures = 6;
    int max_gestures = 12;
    int64_t min_samples = 0;    // keep walking until at least this many samples
    int64_t max_samples = 0;    // >0: truncate the emission to exactly this many
};

// A random traversal of the grammar, realised as per-sample context emissions
// with the ground-truth state label alongside each sample.
struct Walk {
    std::vector<std::string> gestures;      // visited states, start state omitted
    std::vector<ContextState> contexts;     // one per output sample
    std::vector<std::string> labels;        // parallel to contexts
};

// Emits each visited state's grouping sequence with randomised per-context
// repeat counts, capped so duration rules never fire mid-state. Each hop is
// chosen among successors whose grouping opens with a context that triggers
// the edge, so running the machine over `contexts` reproduces `labels`
// exactly. Throws ConfigError when the grammar's groupings cannot support
// such a traversal.
Walk generate_walk(const Grammar& g, const WalkOptions& opts);

// Ground-truth transcript for a walk: run lengths scaled to native frames by
// `stride`, terminal label appended when the grammar configures one.
io::GestureTranscript walk_transcript(const Walk& w, const Grammar& g, int64_t stride,
                                      double sample_rate_hz);

} // namespace ctxg::fsm
