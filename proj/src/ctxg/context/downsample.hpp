#pragma once

#include "ctxg/types.hpp"

namespace ctxg::context {

// Trailing rolling mode: output sample k summarizes the `window` native
// values ending at frame (k+1)*stride - 1, clamped at the series start.
// Among equally frequent values the one seen latest in the window wins.
// Produces floor(n / stride) samples.
std::vector<uint8_t> rolling_mode(const std::vector<uint8_t>& series, int stride, int window);

// Apply per variable across a context series.
std::vector<ContextState> downsample_context(const std::vector<ContextState>& native,
                                             int stride, int window);

} // namespace ctxg::context
