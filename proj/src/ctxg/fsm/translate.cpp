#include "ctxg/fsm/translate.hpp"

#include <cstdio>

namespace ctxg::fsm {

Translation translate(const io::ContextTranscript& ctx, const Grammar& g, int64_t stride,
                      bool want_trace) {
    if (stride <= 0) throw ConfigError("translate: stride must be positive");
    if (!(ctx.rate_hz > 0.0)) throw ConfigError("translate: sample rate must be positive");
    const double period = 1.0 / ctx.rate_hz;
    const int64_t n = static_cast<int64_t>(ctx.samples.size());

    Translation out;
    out.transcript.rate_hz = ctx.rate_hz * static_cast<double>(stride);
    if (n == 0) return out;

    std::vector<std::string> labels(static_cast<size_t>(n));
    std::string state = g.start_state;
    int64_t dwell = 0;
    if (want_trace) out.trace.reserve(static_cast<size_t>(n));

    for (int64_t k = 0; k < n; ++k) {
        const std::string code = ctx.samples[static_cast<size_t>(k)].code();
        std::optional<std::string> target = g.context_target(state, code);
        StepCause cause = target ? StepCause::Context : StepCause::None;
        if (!target) {
            if (const DurationRule* d = g.duration_for(state)) {
                if (static_cast<double>(dwell + 1) * period > d->seconds) {
                    target = d->to;
                    cause = StepCause::Duration;
                }
            }
        }
        if (want_trace) {
            TraceStep step;
            step.sample = k;
            step.context = code;
            step.state_before = state;
            step.state_after = target ? *target : state;
            step.cause = cause;
            step.dwell_before = dwell;
            out.trace.push_back(std::move(step));
        }
        if (target) {
            state = *target;
            dwell = 1;
        } else {
            dwell += 1;
        }
        labels[static_cast<size_t>(k)] = state;
    }

    // Samples consumed before the machine first left the start state carry the
    // first reached state's label. A run that never left produces no segments.
    int64_t first = 0;
    while (first < n && labels[static_cast<size_t>(first)] == g.start_state) ++first;
    if (first == n) {
        if (!g.terminal_label.empty()) {
            out.transcript.segments.push_back({n * stride, (n + 1) * stride, g.terminal_label});
        }
        return out;
    }
    for (int64_t k = 0; k < first; ++k) {
        labels[static_cast<size_t>(k)] = labels[static_cast<size_t>(first)];
    }

    int64_t run_start = 0;
    for (int64_t k = 1; k <= n; ++k) {
        if (k == n || labels[static_cast<size_t>(k)] != labels[static_cast<size_t>(run_start)]) {
            out.transcript.segments.push_back(
                {run_start * stride, k * stride, labels[static_cast<size_t>(run_start)]});
            run_start = k;
        }
    }
    if (!g.terminal_label.empty()) {
        out.transcript.segments.push_back({n * stride, (n + 1) * stride, g.terminal_label});
    }
    return out;
}

void validate_transcript(const io::GestureTranscript& t, const Grammar& g) {
    io::check_segments(t, "transcript");
    for (const auto& seg : t.segments) {
        if (g.excluded.count(seg.label) != 0) {
            throw ValidationError("transcript uses excluded label '" + seg.label + "'");
        }
        if (seg.label == g.start_state) {
            throw ValidationError("transcript uses the start state '" + seg.label + "'");
        }
        if (seg.label != g.terminal_label && !g.has_state(seg.label)) {
            throw ValidationError("transcript label '" + seg.label + "' not in grammar");
        }
    }
}

std::string trace_to_text(const std::vector<TraceStep>& trace, double rate_hz) {
    std::string out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "# rate_hz=%g\n", rate_hz);
    out += buf;
    out += "# sample context state_before state_after cause dwell_before\n";
    for (const auto& s : trace) {
        const char* cause = s.cause == StepCause::Context    ? "context"
                            : s.cause == StepCause::Duration ? "duration"
                                                             : "-";
        std::snprintf(buf, sizeof(buf), "%lld %s %s %s %s %lld\n",
                      static_cast<long long>(s.sample), s.context.c_str(),
                      s.state_before.c_str(), s.state_after.c_str(), cause,
                      static_cast<long long>(s.dwell_before));
        out += buf;
    }
    return out;
}

} // namespace ctxg::fsm
