#include <cmath>
#include <cstdio>
#include <thread>

#include "CLI11.hpp"

#include "ctxg/context/pipeline.hpp"
#include "ctxg/fsm/translate.hpp"
#include "ctxg/io/fsio.hpp"
#include "ctxg/metrics/metrics.hpp"
#include "ctxg/render/timeline.hpp"
#include "ctxg/simd/kernels.hpp"
#include "ctxg/synth/synth.hpp"

namespace {

using namespace ctxg;

void log_line(const std::string& msg) {
    std::fprintf(stderr, "ctxgest: %s\n", msg.c_str());
}

struct ThresholdFlags {
    double jaw_open_px = -1;
    double min_area_px2 = -1;
    double rdp_epsilon_px = -1;
    int mode_window = -1;

    void add_to(CLI::App* cmd) {
        cmd->add_option("--jaw-open-px", jaw_open_px,
                        "Override the jaw open/closed distance threshold");
        cmd->add_option("--min-area-px2", min_area_px2,
                        "Override the minimum polygon area filter");
        cmd->add_option("--rdp-epsilon-px", rdp_epsilon_px,
                        "Override the polygon simplification tolerance");
        cmd->add_option("--mode-window", mode_window,
                        "Override the rolling mode window (frames)");
    }

    void apply(context::Thresholds& th) const {
        if (jaw_open_px >= 0) th.jaw_open_px = jaw_open_px;
        if (min_area_px2 >= 0) th.min_area_px2 = min_area_px2;
        if (rdp_epsilon_px >= 0) th.rdp_epsilon_px = rdp_epsilon_px;
        if (mode_window > 0) th.mode_window_frames = mode_window;
    }
};

int default_jobs() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

simd::Level parse_level(const std::string& name) {
    for (simd::Level l : {simd::Level::Scalar, simd::Level::Avx2, simd::Level::Neon}) {
        if (name == simd::level_name(l)) return l;
    }
    throw ConfigError("unknown kernel level '" + name + "'");
}

int64_t derive_stride(double ctx_rate_hz, double frame_rate_hz) {
    if (!(ctx_rate_hz > 0.0)) {
        throw ConfigError("context transcript declares no sample rate");
    }
    const double ratio = frame_rate_hz / ctx_rate_hz;
    const int64_t stride = std::llround(ratio);
    if (stride < 1 || std::abs(ratio - static_cast<double>(stride)) > 1e-9) {
        throw ConfigError("frame rate must be an integer multiple of the context rate");
    }
    return stride;
}

// Compare only the shared prefix; warn when the inputs disagree on length.
template <typename T>
void truncate_to_match(std::vector<T>& a, std::vector<T>& b, const std::string& what) {
    if (a.size() == b.size()) return;
    const size_t n = std::min(a.size(), b.size());
    log_line("warning: " + what + " lengths differ (" + std::to_string(a.size()) + " vs " +
             std::to_string(b.size()) + "), comparing the first " + std::to_string(n));
    a.resize(n);
    b.resize(n);
}

int run(int argc, char** argv) {
    CLI::App app{"Surgical context inference and gesture translation"};
    app.require_subcommand(1);

    std::string simd_level;
    app.add_option("--simd", simd_level, "Force a kernel level (scalar, avx2, neon)");

    // infer-context
    auto* infer = app.add_subcommand("infer-context",
                                     "Infer per-frame context states from mask streams");
    std::string in_manifest, in_rules, out_csv, out_native_csv;
    int jobs = default_jobs();
    ThresholdFlags infer_th;
    infer->add_option("--manifest", in_manifest, "Trial manifest file")->required();
    infer->add_option("--rules", in_rules, "Context rule file")->required();
    infer->add_option("--out", out_csv, "Output CSV at the downsampled rate")->required();
    infer->add_option("--native-out", out_native_csv, "Also write the native-rate states");
    infer->add_option("--jobs", jobs, "Worker threads");
    infer_th.add_to(infer);

    // translate
    auto* trans = app.add_subcommand("translate",
                                     "Run the gesture grammar over a context transcript");
    std::string tr_context, tr_grammar, tr_out, tr_trace;
    double tr_frame_rate = 30.0;
    trans->add_option("--context", tr_context, "Context CSV (downsampled rate)")->required();
    trans->add_option("--grammar", tr_grammar, "Grammar file")->required();
    trans->add_option("--out", tr_out, "Output gesture transcript")->required();
    trans->add_option("--trace", tr_trace, "Also write a per-sample decision trace");
    trans->add_option("--frame-rate-hz", tr_frame_rate,
                      "Native frame rate the transcript is scaled to");

    // evaluate
    auto* eval = app.add_subcommand("evaluate", "Score predictions against ground truth");
    std::vector<std::string> ev_pred, ev_gt, ev_ctx_pred, ev_ctx_gt;
    std::string ev_gesture_csv, ev_context_csv;
    eval->add_option("--pred", ev_pred, "Predicted gesture transcript (repeatable)");
    eval->add_option("--gt", ev_gt, "Ground-truth gesture transcript (repeatable)");
    eval->add_option("--context-pred", ev_ctx_pred, "Predicted context CSV (repeatable)");
    eval->add_option("--context-gt", ev_ctx_gt, "Ground-truth context CSV (repeatable)");
    eval->add_option("--gesture-csv", ev_gesture_csv, "Write the gesture table as CSV");
    eval->add_option("--context-csv", ev_context_csv, "Write the context table as CSV");

    // render-timeline
    auto* render = app.add_subcommand("render-timeline", "Draw transcripts as an SVG timeline");
    std::vector<std::string> rd_gestures, rd_contexts;
    std::string rd_out;
    render->add_option("--gestures", rd_gestures, "Gesture transcript (repeatable)");
    render->add_option("--context", rd_contexts, "Context CSV (repeatable)");
    render->add_option("--out", rd_out, "Output SVG file")->required();

    // synth
    auto* synth_cmd = app.add_subcommand("synth", "Generate a synthetic trial on disk");
    synth::SynthSpec spec;
    std::string sy_dir, sy_grammar, sy_rules;
    synth_cmd->add_option("--out-dir", sy_dir, "Trial directory")->required();
    synth_cmd->add_option("--grammar", sy_grammar, "Grammar file")->required();
    synth_cmd->add_option("--rules", sy_rules, "Context rule file")->required();
    synth_cmd->add_option("--trial-id", spec.trial_id, "Trial identifier");
    synth_cmd->add_option("--seed", spec.seed, "Walk seed");
    synth_cmd->add_option("--width", spec.width, "Mask width");
    synth_cmd->add_option("--height", spec.height, "Mask height");
    synth_cmd->add_option("--frame-rate-hz", spec.frame_rate_hz, "Native frame rate");
    synth_cmd->add_option("--output-rate-hz", spec.output_rate_hz, "Downsampled rate");
    synth_cmd->add_option("--min-gestures", spec.min_gestures, "Minimum walk length");
    synth_cmd->add_option("--max-gestures", spec.max_gestures, "Maximum walk length");
    synth_cmd->add_option("--samples", spec.exact_samples,
                          "Force an exact output sample count");
    synth_cmd->add_flag("--png", spec.png, "Write PNG masks instead of PGM");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (!simd_level.empty()) {
        simd::force_level(parse_level(simd_level));
        log_line(std::string("kernel level forced to ") + simd::level_name(simd::active_level()));
    }

    if (infer->parsed()) {
        io::TrialManifest manifest = io::load_manifest(in_manifest);
        context::RuleSet rules = context::load_rules(in_rules);
        infer_th.apply(rules.thresholds);
        if (jobs < 1) throw ConfigError("--jobs must be at least 1");
        log_line("trial " + manifest.trial_id + ": " + std::to_string(manifest.frame_count) +
                 " frames, " + std::to_string(manifest.mask_patterns.size()) + " streams, " +
                 std::to_string(jobs) + " jobs");
        context::TrialContext result = context::infer_trial_context(manifest, rules, jobs);
        io::write_context_csv(out_csv, result.downsampled);
        if (!out_native_csv.empty()) io::write_context_csv(out_native_csv, result.native);
        log_line("wrote " + std::to_string(result.downsampled.samples.size()) +
                 " samples to " + out_csv);
        return 0;
    }

    if (trans->parsed()) {
        io::ContextTranscript ctx = io::read_context_csv(tr_context);
        fsm::Grammar grammar = fsm::load_grammar(tr_grammar);
        const int64_t stride = derive_stride(ctx.rate_hz, tr_frame_rate);
        fsm::Translation result = fsm::translate(ctx, grammar, stride, !tr_trace.empty());
        io::write_gesture_transcript(tr_out, result.transcript);
        if (!tr_trace.empty()) {
            io::write_file_atomic(tr_trace, fsm::trace_to_text(result.trace, ctx.rate_hz));
        }
        log_line("wrote " + std::to_string(result.transcript.segments.size()) + " segments to " +
                 tr_out);
        return 0;
    }

    if (eval->parsed()) {
        if (ev_pred.size() != ev_gt.size()) {
            throw ConfigError("evaluate needs matching --pred/--gt counts");
        }
        if (ev_ctx_pred.size() != ev_ctx_gt.size()) {
            throw ConfigError("evaluate needs matching --context-pred/--context-gt counts");
        }
        if (ev_pred.empty() && ev_ctx_pred.empty()) {
            throw ConfigError("evaluate needs at least one --pred/--gt or "
                              "--context-pred/--context-gt pair");
        }

        const auto segment_labels = [](const io::GestureTranscript& t) {
            std::vector<std::string> out;
            out.reserve(t.segments.size());
            for (const auto& s : t.segments) out.push_back(s.label);
            return out;
        };
        std::vector<metrics::GestureRow> grows;
        for (size_t i = 0; i < ev_pred.size(); ++i) {
            io::GestureTranscript pred = io::read_gesture_transcript(ev_pred[i]);
            io::GestureTranscript gt = io::read_gesture_transcript(ev_gt[i]);
            std::vector<std::string> pl = metrics::frame_labels(pred);
            std::vector<std::string> gl = metrics::frame_labels(gt);
            truncate_to_match(gl, pl, "gesture frames for " + ev_pred[i]);
            metrics::GestureRow row;
            row.trial = std::filesystem::path(ev_pred[i]).stem().string();
            row.accuracy = metrics::accuracy_pct(gl, pl);
            row.edit = metrics::edit_score(metrics::run_length(segment_labels(gt)),
                                           metrics::run_length(segment_labels(pred)));
            row.iou = metrics::segment_iou(gt.segments, pred.segments).overall;
            grows.push_back(std::move(row));
        }
        std::vector<metrics::ContextRow> crows;
        for (size_t i = 0; i < ev_ctx_pred.size(); ++i) {
            io::ContextTranscript pred = io::read_context_csv(ev_ctx_pred[i]);
            io::ContextTranscript gt = io::read_context_csv(ev_ctx_gt[i]);
            truncate_to_match(gt.samples, pred.samples, "context samples for " + ev_ctx_pred[i]);
            metrics::ContextRow row;
            row.trial = std::filesystem::path(ev_ctx_pred[i]).stem().string();
            row.report = metrics::state_variable_report(gt.samples, pred.samples);
            crows.push_back(std::move(row));
        }

        if (!grows.empty()) {
            std::fputs(metrics::gesture_report_text(grows).c_str(), stdout);
            if (!ev_gesture_csv.empty()) {
                io::write_file_atomic(ev_gesture_csv, metrics::gesture_report_csv(grows));
            }
        }
        if (!crows.empty()) {
            if (!grows.empty()) std::fputs("\n", stdout);
            std::fputs(metrics::context_report_text(crows).c_str(), stdout);
            if (!ev_context_csv.empty()) {
                io::write_file_atomic(ev_context_csv, metrics::context_report_csv(crows));
            }
        }
        return 0;
    }

    if (render->parsed()) {
        std::vector<render::Band> bands;
        for (const auto& f : rd_gestures) {
            render::Band b;
            b.name = std::filesystem::path(f).stem().string();
            b.track = io::read_gesture_transcript(f);
            bands.push_back(std::move(b));
        }
        for (const auto& f : rd_contexts) {
            for (auto& b : render::context_bands(io::read_context_csv(f))) {
                bands.push_back(std::move(b));
            }
        }
        if (bands.empty()) {
            throw ConfigError("render-timeline needs at least one --gestures or --context input");
        }
        io::write_file_atomic(rd_out, render::timeline_svg(bands));
        log_line("wrote " + rd_out);
        return 0;
    }

    if (synth_cmd->parsed()) {
        spec.dir = sy_dir;
        fsm::Grammar grammar = fsm::load_grammar(sy_grammar);
        context::RuleSet rules = context::load_rules(sy_rules);
        synth::SynthResult result = synth::synthesize_trial(spec, grammar, rules);
        log_line("trial " + result.manifest.trial_id + ": " +
                 std::to_string(result.walk.gestures.size()) + " gestures, " +
                 std::to_string(result.walk.contexts.size()) + " samples, " +
                 std::to_string(result.manifest.frame_count) + " frames in " + sy_dir);
        return 0;
    }

    return 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const ctxg::ConfigError& e) {
        log_line(std::string("config error: ") + e.what());
        return 2;
    } catch (const ctxg::DataError& e) {
        log_line(std::string("data error: ") + e.what());
        return 3;
    } catch (const ctxg::ValidationError& e) {
        log_line(std::string("validation error: ") + e.what());
        return 4;
    } catch (const std::exception& e) {
        log_line(std::string("error: ") + e.what());
        return 1;
    }
}
