#include "ctxg/context/downsample.hpp"

namespace ctxg::context {

namespace {

void check_args(int stride, int window) {
    if (stride < 1) throw ConfigError("downsample stride must be >= 1");
    if (window < 1) throw ConfigError("downsample window must be >= 1");
}

// Mode of series[begin, end); ties resolve to the latest occurrence.
uint8_t window_mode(const uint8_t* series, size_t begin, size_t end) {
    int count[256] = {0};
    size_t last[256] = {0};
    uint8_t best = series[end - 1];
    int best_count = 0;
    for (size_t i = begin; i < end; ++i) {
        const uint8_t v = series[i];
        ++count[v];
        last[v] = i;
        if (count[v] > best_count || (count[v] == best_count && last[v] > last[best])) {
            best = v;
            best_count = count[v];
        }
    }
    return best;
}

} // namespace

std::vector<uint8_t> rolling_mode(const std::vector<uint8_t>& series, int stride, int window) {
    check_args(stride, window);
    const size_t n = series.size();
    const size_t out_n = n / static_cast<size_t>(stride);
    std::vector<uint8_t> out(out_n);
    for (size_t k = 0; k < out_n; ++k) {
        const size_t end = (k + 1) * static_cast<size_t>(stride);
        const size_t begin = end > static_cast<size_t>(window) ? end - static_cast<size_t>(window) : 0;
        out[k] = window_mode(series.data(), begin, end);
    }
    return out;
}

std::vector<ContextState> downsample_context(const std::vector<ContextState>& native,
                                             int stride, int window) {
    check_args(stride, window);
    const size_t n = native.size();
    const size_t out_n = n / static_cast<size_t>(stride);
    std::vector<ContextState> out(out_n);

    std::vector<uint8_t> series(n);
    for (int v = 0; v < 5; ++v) {
        for (size_t i = 0; i < n; ++i) series[i] = native[i][static_cast<size_t>(v)];
        for (size_t k = 0; k < out_n; ++k) {
            const size_t end = (k + 1) * static_cast<size_t>(stride);
            const size_t begin = end > static_cast<size_t>(window) ? end - static_cast<size_t>(window) : 0;
            out[k][static_cast<size_t>(v)] = window_mode(series.data(), begin, end);
        }
    }
    return out;
}

} // namespace ctxg::context
