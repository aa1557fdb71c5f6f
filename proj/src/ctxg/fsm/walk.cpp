#include "ctxg/fsm/walk.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace ctxg::fsm {

namespace {

// Largest dwell (in samples) a state can hold before its duration rule would
// fire: at every sample we need (dwell + 1) * period <= seconds.
int64_t dwell_cap(const Grammar& g, const std::string& state, double rate_hz) {
    const DurationRule* d = g.duration_for(state);
    if (!d) return INT64_MAX;
    return static_cast<int64_t>(std::floor(d->seconds * rate_hz + 1e-9));
}

uint64_t pick(std::mt19937_64& rng, uint64_t n) {
    return rng() % n;
}

} // namespace

Walk generate_walk(const Grammar& g, const WalkOptions& opts) {
    if (opts.min_gestures < 1 || opts.max_gestures < opts.min_gestures) {
        throw ConfigError("walk: need 1 <= min_gestures <= max_gestures");
    }
    // The machine runs at the downsampled rate; duration caps below assume the
    // configured default of one sample per 1/3 s unless the caller retranslates
    // at another rate, so cap against the stingiest plausible rate.
    const double rate_hz = 3.0;

    std::mt19937_64 rng(opts.seed);
    Walk w;
    const int target_gestures =
        opts.min_gestures +
        static_cast<int>(pick(rng, static_cast<uint64_t>(opts.max_gestures - opts.min_gestures + 1)));

    std::string state = g.start_state;
    while (static_cast<int>(w.gestures.size()) < target_gestures ||
           static_cast<int64_t>(w.contexts.size()) < opts.min_samples) {
        // Successors reachable through a context trigger that their own
        // grouping opens with.
        std::vector<const Transition*> viable;
        for (const auto& t : g.transitions) {
            if (t.from != state) continue;
            auto it = g.groupings.find(t.to);
            if (it == g.groupings.end() || it->second.empty()) continue;
            if (t.contexts.count(it->second.front()) == 0) continue;
            viable.push_back(&t);
        }
        if (viable.empty()) {
            if (state == g.start_state) {
                throw ConfigError("walk: no grouping-compatible transition out of the start state");
            }
            break;  // dead end; keep what we have
        }
        const Transition* hop = viable[pick(rng, viable.size())];
        state = hop->to;
        w.gestures.push_back(state);

        const auto& seq = g.groupings.at(state);
        const int64_t len = static_cast<int64_t>(seq.size());
        const int64_t cap = dwell_cap(g, state, rate_hz);
        if (cap < len) {
            throw ConfigError("walk: grouping for '" + state +
                              "' is longer than its duration rule allows");
        }
        int64_t total_max = std::min<int64_t>(cap, len * 3);
        int64_t total = len + static_cast<int64_t>(
                                  pick(rng, static_cast<uint64_t>(total_max - len + 1)));
        std::vector<int64_t> counts(static_cast<size_t>(len), 1);
        for (int64_t extra = total - len; extra > 0; --extra) {
            counts[static_cast<size_t>(pick(rng, static_cast<uint64_t>(len)))]++;
        }

        for (int64_t i = 0; i < len; ++i) {
            const std::string& code = seq[static_cast<size_t>(i)];
            // The opening context triggered the hop out of the previous state;
            // none of the emitted contexts may trigger an exit from this one.
            std::optional<std::string> exit = g.context_target(state, code);
            if (exit) {
                throw ConfigError("walk: context " + code + " inside '" + state +
                                  "' triggers an exit to '" + *exit + "'");
            }
            ContextState cs = ContextState::from_code(code);
            for (int64_t r = 0; r < counts[static_cast<size_t>(i)]; ++r) {
                w.contexts.push_back(cs);
                w.labels.push_back(state);
            }
        }
    }

    if (opts.max_samples > 0 && static_cast<int64_t>(w.contexts.size()) > opts.max_samples) {
        w.contexts.resize(static_cast<size_t>(opts.max_samples));
        w.labels.resize(static_cast<size_t>(opts.max_samples));
        // The visit list is the run-length view of the labels; rebuild it so a
        // truncated trailing state drops out.
        w.gestures.clear();
        for (const auto& l : w.labels) {
            if (w.gestures.empty() || w.gestures.back() != l) w.gestures.push_back(l);
        }
    }
    if (w.contexts.empty()) throw ConfigError("walk: produced no samples");
    return w;
}

io::GestureTranscript walk_transcript(const Walk& w, const Grammar& g, int64_t stride,
                                      double sample_rate_hz) {
    if (stride <= 0) throw ConfigError("walk: stride must be positive");
    io::GestureTranscript t;
    t.rate_hz = sample_rate_hz * static_cast<double>(stride);
    const int64_t n = static_cast<int64_t>(w.labels.size());
    int64_t run_start = 0;
    for (int64_t k = 1; k <= n; ++k) {
        if (k == n || w.labels[static_cast<size_t>(k)] != w.labels[static_cast<size_t>(run_start)]) {
            t.segments.push_back(
                {run_start * stride, k * stride, w.labels[static_cast<size_t>(run_start)]});
            run_start = k;
        }
    }
    if (n > 0 && !g.terminal_label.empty()) {
        t.segments.push_back({n * stride, (n + 1) * stride, g.terminal_label});
    }
    return t;
}

} // namespace ctxg::fsm
