#pragma once

#include <filesystem>

#include "ctxg/context/rules.hpp"
#include "ctxg/fsm/walk.hpp"
#include "ctxg/io/manifest.hpp"

namespace ctxg::synth {

struct SynthSpec {
    std::filesystem::path dir;      // trial directory, created if needed
    std::string trial_id = "synth";
    uint64_t seed = 1;
    int width = 640;
    int height = 480;
    double frame_rate_hz = 30.0;
    double output_rate_hz = 3.0;
    int min_gestures = 6;
    int max_gestures = 12;
    int64_t exact_samples = 0;      // >0: force this many output samples
    bool png = false;               // masks default to PGM
};

struct SynthResult {
    io::TrialManifest manifest;
    fsm::Walk walk;
    io::ContextTranscript gt_context;    // output-rate ground truth
    io::GestureTranscript gt_gestures;   // native-frame ground truth, terminal included
    std::filesystem::path manifest_path;
    std::filesystem::path gt_context_path;
    std::filesystem::path gt_gesture_path;
};

// Generates a seeded grammar walk and realises it on disk: one mask per frame
// per referenced class plus jaw-end annotations, a manifest, and the two
// ground-truth transcripts. Scene construction places axis-aligned blocks so
// the geometric rules reproduce each walked context exactly (verified against
// the rule set while generating; a context the scene builder cannot realise
// raises ValidationError). Only Suturing layouts are defined.
SynthResult synthesize_trial(const SynthSpec& spec, const fsm::Grammar& grammar,
                             const context::RuleSet& rules);

} // namespace ctxg::synth
