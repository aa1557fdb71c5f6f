#pragma once

#include "ctxg/io/transcripts.hpp"

namespace ctxg::render {

// One horizontal track. Segment bounds are interpreted in the transcript's
// rate basis and drawn in seconds (frames when the rate is unknown).
struct Band {
    std::string name;
    io::GestureTranscript track;
};

// Five tracks, one per state variable, run-length collapsed with the digit
// value as the segment label.
std::vector<Band> context_bands(const io::ContextTranscript& t);

// Self-contained SVG. Colors are assigned per label in order of first
// appearance from a fixed palette, so identical inputs render identically.
std::string timeline_svg(const std::vector<Band>& bands);

} // namespace ctxg::render
