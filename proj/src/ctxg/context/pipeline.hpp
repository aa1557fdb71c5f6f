#pragma once

#include "ctxg/context/rules.hpp"
#include "ctxg/io/manifest.hpp"
#include "ctxg/io/transcripts.hpp"

namespace ctxg::context {

// Mask to polygons: outer contours, RDP smoothing, degenerate rings dropped,
// then the small-area filter.
geom::ObjectShape build_shape(const Mask& m, double rdp_epsilon, double min_area,
                              std::vector<uint8_t>& scratch);
geom::ObjectShape build_shape(const Mask& m, double rdp_epsilon, double min_area);

// One frame: evaluate the rule set against already-built shapes.
ContextState infer_frame_state(const ShapeMap& shapes, bool alpha_left, bool alpha_right,
                               const RuleSet& rules);

struct TrialContext {
    io::ContextTranscript native;       // one state per input frame
    io::ContextTranscript downsampled;  // rolling-mode summary at the output rate
};

// Full per-trial inference over the manifest's mask streams. Frames are
// processed in parallel across `jobs` workers; the result is identical for
// any worker count. Streams the rules require but the manifest lacks raise
// ConfigError before any frame work starts.
TrialContext infer_trial_context(const io::TrialManifest& manifest, const RuleSet& rules,
                                 int jobs);

} // namespace ctxg::context
