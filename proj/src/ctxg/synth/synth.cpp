#include "ctxg/synth/synth.hpp"

#include <cmath>
#include <cstdio>
#include <map>

#include "ctxg/context/pipeline.hpp"
#include "ctxg/io/annotations.hpp"
#include "ctxg/io/fsio.hpp"
#include "ctxg/io/image.hpp"

namespace ctxg::synth {

namespace {

// Half-open pixel block.
struct IRect {
    int x0, y0, x1, y1;
};

struct Scene {
    std::map<ObjectClass, IRect> rects;
    io::JawFrame jaws;
    bool left_closed = false;
    bool right_closed = false;
};

void place_jaws(const IRect& r, bool closed, Point& a, Point& b) {
    const double cx = 0.5 * (r.x0 + r.x1);
    const double cy = 0.5 * (r.y0 + r.y1);
    const double half = closed ? 5.0 : 15.0;
    a = {cx - half, cy};
    b = {cx + half, cy};
}

// Fixed layout on a >= 540x460 canvas. Blocks either share a pixel-grid edge
// (boundary distance exactly 0), sit one pixel apart (exactly 1), or are far
// beyond every rule threshold, so each context digit is realised without
// relying on floating-point slack.
Scene build_scene(const ContextState& st) {
    const int LH = st[0], LC = st[1], RH = st[2], RC = st[3], S5 = st[4];
    const auto reject = [&st](const char* why) -> Scene {
        throw ValidationError("no synthetic layout for context " + st.code() + ": " + why);
    };
    if (LH > 2 || LC > 2 || RH > 2 || RC > 2 || S5 > 2 || LH == 1 || LC == 1 || RH == 1 ||
        RC == 1) {
        return reject("unsupported digit");
    }
    if ((LH && LC) || (RH && RC)) return reject("hold and contact are mutually exclusive");

    Scene s;
    const IRect needle = S5 == 2 ? IRect{400, 220, 440, 252} : IRect{300, 220, 340, 252};
    s.rects[ObjectClass::Needle] = needle;
    s.rects[ObjectClass::TissuePoints] = {420, 200, 520, 280};

    IRect lg;
    if (LH == 2 || LC == 2) {
        lg = {needle.x0 - 50, 216, needle.x0, 256};  // shared edge, distance 0
        s.left_closed = LH == 2;
    } else if (S5 == 0) {
        lg = {needle.x0 - 51, 216, needle.x0 - 1, 256};  // one-pixel gap, distance 1
    } else {
        lg = {30, 60, 80, 100};
    }
    s.rects[ObjectClass::LeftGrasper] = lg;

    IRect rg;
    if (RH == 2 || RC == 2) {
        rg = {needle.x1, 216, needle.x1 + 50, 256};
        s.right_closed = RH == 2;
    } else {
        rg = {100, 380, 150, 420};
    }
    s.rects[ObjectClass::RightGrasper] = rg;

    if (S5 == 0) {
        // Thread glued to the right grasper keeps D(RG,T) at 0; the left side
        // contributes its 0 or 1 pixel needle gap.
        const int cy = (rg.y0 + rg.y1) / 2;
        s.rects[ObjectClass::Thread] = {rg.x1, cy - 6, rg.x1 + 30, cy + 6};
    } else {
        s.rects[ObjectClass::Thread] = {100, 430, 130, 442};
    }

    place_jaws(lg, s.left_closed, s.jaws.l1, s.jaws.l2);
    place_jaws(rg, s.right_closed, s.jaws.r1, s.jaws.r2);
    return s;
}

Mask render_mask(const IRect& r, int width, int height) {
    Mask m(width, height);
    for (int y = r.y0; y < r.y1; ++y) {
        for (int x = r.x0; x < r.x1; ++x) m.set(x, y, 1);
    }
    return m;
}

std::string frame_name(ObjectClass c, const char* ext) {
    return std::string("masks/") + object_class_name(c) + "_%06d." + ext;
}

} // namespace

SynthResult synthesize_trial(const SynthSpec& spec, const fsm::Grammar& grammar,
                             const context::RuleSet& rules) {
    if (grammar.task != Task::Suturing || rules.task != Task::Suturing) {
        throw ConfigError("synthetic trials are only defined for the Suturing layout");
    }
    if (spec.width < 540 || spec.height < 460) {
        throw ConfigError("synthetic trials need a canvas of at least 540x460");
    }
    if (!(spec.frame_rate_hz > 0.0) || !(spec.output_rate_hz > 0.0)) {
        throw ConfigError("synthetic trials need positive rates");
    }
    const double ratio = spec.frame_rate_hz / spec.output_rate_hz;
    const int64_t stride = std::llround(ratio);
    if (stride < 1 || std::abs(ratio - static_cast<double>(stride)) > 1e-9) {
        throw ConfigError("frame rate must be an integer multiple of the output rate");
    }

    fsm::WalkOptions wopts;
    wopts.seed = spec.seed;
    wopts.min_gestures = spec.min_gestures;
    wopts.max_gestures = spec.max_gestures;
    wopts.min_samples = spec.exact_samples;
    wopts.max_samples = spec.exact_samples;

    SynthResult out;
    out.walk = fsm::generate_walk(grammar, wopts);
    const int64_t n_samples = static_cast<int64_t>(out.walk.contexts.size());

    // Realise every distinct context once, and prove the rule set reads each
    // scene back as intended before anything is written.
    std::map<std::string, Scene> scenes;
    for (const auto& cs : out.walk.contexts) {
        const std::string code = cs.code();
        if (scenes.count(code)) continue;
        Scene sc = build_scene(cs);
        context::ShapeMap shapes;
        std::vector<uint8_t> scratch;
        for (const auto& [cls, rect] : sc.rects) {
            shapes[cls] = context::build_shape(render_mask(rect, spec.width, spec.height),
                                               rules.thresholds.rdp_epsilon_px,
                                               rules.thresholds.min_area_px2, scratch);
        }
        const bool al = context::grasper_open(sc.jaws.l1, sc.jaws.l2, rules.thresholds.jaw_open_px);
        const bool ar = context::grasper_open(sc.jaws.r1, sc.jaws.r2, rules.thresholds.jaw_open_px);
        const ContextState got = context::infer_frame_state(shapes, al, ar, rules);
        if (!(got == cs)) {
            throw ValidationError("synthetic scene for context " + code +
                                  " reads back as " + got.code());
        }
        scenes.emplace(code, std::move(sc));
    }

    namespace fs = std::filesystem;
    fs::create_directories(spec.dir / "masks");
    const char* ext = spec.png ? "png" : "pgm";

    io::TrialManifest& m = out.manifest;
    m.root = spec.dir;
    m.trial_id = spec.trial_id;
    m.task = Task::Suturing;
    m.frame_rate_hz = spec.frame_rate_hz;
    m.output_rate_hz = spec.output_rate_hz;
    m.frame_count = static_cast<int>(n_samples * stride);
    m.width = spec.width;
    m.height = spec.height;
    for (ObjectClass c : {ObjectClass::LeftGrasper, ObjectClass::RightGrasper,
                          ObjectClass::Needle, ObjectClass::Thread, ObjectClass::TissuePoints}) {
        m.mask_patterns[c] = frame_name(c, ext);
    }
    m.jaw_ends = "jaw_ends.csv";

    // Masks: frames within one output sample repeat the sample's scene, so
    // each (context, class) image is encoded once and the bytes reused.
    std::map<std::string, std::array<std::string, kObjectClassCount>> encoded;
    for (int64_t k = 0; k < n_samples; ++k) {
        const std::string code = out.walk.contexts[static_cast<size_t>(k)].code();
        auto it = encoded.find(code);
        if (it == encoded.end()) {
            const Scene& sc = scenes.at(code);
            std::array<std::string, kObjectClassCount> bufs;
            for (const auto& [cls, rect] : sc.rects) {
                const Mask mask = render_mask(rect, spec.width, spec.height);
                const fs::path tmp = m.mask_path(cls, static_cast<int>(k * stride));
                if (spec.png) {
                    io::write_png(tmp, mask);
                } else {
                    io::write_pgm(tmp, mask);
                }
                bufs[static_cast<size_t>(cls)] = io::read_file(tmp);
            }
            it = encoded.emplace(code, std::move(bufs)).first;
        }
        for (int64_t r = 0; r < stride; ++r) {
            const int frame = static_cast<int>(k * stride + r);
            for (const auto& [cls, rect] : scenes.at(code).rects) {
                io::write_file_atomic(m.mask_path(cls, frame),
                                      it->second[static_cast<size_t>(cls)]);
            }
        }
    }

    // Jaw annotations, sparse: a row whenever the scene changes.
    {
        std::string csv = "frame,lx1,ly1,lx2,ly2,rx1,ry1,rx2,ry2\n";
        char buf[160];
        std::string prev;
        for (int64_t k = 0; k < n_samples; ++k) {
            const std::string code = out.walk.contexts[static_cast<size_t>(k)].code();
            if (code == prev) continue;
            prev = code;
            const io::JawFrame& j = scenes.at(code).jaws;
            std::snprintf(buf, sizeof(buf), "%lld,%g,%g,%g,%g,%g,%g,%g,%g\n",
                          static_cast<long long>(k * stride), j.l1.x, j.l1.y, j.l2.x, j.l2.y,
                          j.r1.x, j.r1.y, j.r2.x, j.r2.y);
            csv += buf;
        }
        io::write_file_atomic(spec.dir / *m.jaw_ends, csv);
    }

    out.gt_context.rate_hz = spec.output_rate_hz;
    out.gt_context.samples = out.walk.contexts;
    out.gt_gestures = fsm::walk_transcript(out.walk, grammar, stride, spec.output_rate_hz);

    out.manifest_path = spec.dir / "manifest.txt";
    out.gt_context_path = spec.dir / "gt_context.csv";
    out.gt_gesture_path = spec.dir / "gt_gestures.txt";
    io::write_file_atomic(out.manifest_path, io::manifest_to_text(m));
    io::write_context_csv(out.gt_context_path, out.gt_context);
    io::write_gesture_transcript(out.gt_gesture_path, out.gt_gestures);
    return out;
}

} // namespace ctxg::synth
