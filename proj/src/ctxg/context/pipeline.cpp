#include "ctxg/context/pipeline.hpp"

#include "ctxg/context/downsample.hpp"
#include "ctxg/geom/contours.hpp"
#include "ctxg/geom/rdp.hpp"
#include "ctxg/io/annotations.hpp"
#include "ctxg/io/image.hpp"
#include "ctxg/util/parallel.hpp"

namespace ctxg::context {

geom::ObjectShape build_shape(const Mask& m, double rdp_epsilon, double min_area,
                              std::vector<uint8_t>& scratch) {
    geom::ObjectShape shape;
    for (geom::Polygon& raw : geom::extract_outer_contours(m, scratch)) {
        geom::Polygon simplified = geom::rdp_ring(raw, rdp_epsilon);
        if (simplified.pts.size() < 3) continue;
        if (simplified.area() < min_area) continue;
        shape.components.push_back(std::move(simplified));
    }
    return shape;
}

geom::ObjectShape build_shape(const Mask& m, double rdp_epsilon, double min_area) {
    std::vector<uint8_t> scratch;
    return build_shape(m, rdp_epsilon, min_area, scratch);
}

ContextState infer_frame_state(const ShapeMap& shapes, bool alpha_left, bool alpha_right,
                               const RuleSet& rules) {
    const FeatureVector fv = compute_features(shapes, rules.requirements(), alpha_left, alpha_right);
    return infer_state(rules, fv);
}

TrialContext infer_trial_context(const io::TrialManifest& manifest, const RuleSet& rules,
                                 int jobs) {
    if (manifest.task != rules.task)
        throw ConfigError("trial " + manifest.trial_id + " is " + task_name(manifest.task) +
                          " but the rule set is for " + task_name(rules.task));

    const Requirements req = rules.requirements();
    const int stride = manifest.stride();
    const int frames = manifest.frame_count;

    // Which classes come from mask streams, and which from the static
    // tissue-points annotation.
    std::set<ObjectClass> needed = rules.referenced_classes();
    std::vector<ObjectClass> streamed;
    geom::ObjectShape static_ts;
    bool have_static_ts = false;
    for (const ObjectClass c : needed) {
        if (manifest.mask_patterns.count(c)) {
            streamed.push_back(c);
            continue;
        }
        if (c == ObjectClass::TissuePoints && manifest.tissue_points) {
            const auto points = io::load_points_file(manifest.root / *manifest.tissue_points,
                                                     manifest.width, manifest.height);
            if (points.size() < 3)
                throw DataError("trial " + manifest.trial_id +
                                ": tissue points region needs at least 3 points");
            geom::Polygon poly;
            poly.pts = points;
            if (poly.area() >= rules.thresholds.min_area_px2)
                static_ts.components.push_back(std::move(poly));
            have_static_ts = true;
            continue;
        }
        throw ConfigError("trial " + manifest.trial_id + ": rules need class '" +
                          object_class_name(c) + "' but the manifest provides no source for it");
    }

    const bool need_alpha = req.alpha_left || req.alpha_right;
    std::vector<io::JawFrame> jaws;
    if (need_alpha && frames > 0) {
        if (!manifest.jaw_ends)
            throw ConfigError("trial " + manifest.trial_id +
                              ": rules use alpha() but the manifest has no jaw_ends annotation");
        jaws = io::load_jaw_series(manifest.root / *manifest.jaw_ends, frames,
                                   manifest.width, manifest.height);
    }

    TrialContext out;
    out.native.rate_hz = manifest.frame_rate_hz;
    out.native.samples.assign(static_cast<size_t>(frames), ContextState{});
    out.downsampled.rate_hz = manifest.output_rate_hz;

    const double jaw_open_px = rules.thresholds.jaw_open_px;
    util::parallel_for(static_cast<size_t>(frames), jobs, [&](size_t f) {
        thread_local std::vector<uint8_t> scratch;
        ShapeMap shapes;
        for (const ObjectClass c : streamed) {
            const auto path = manifest.mask_path(c, static_cast<int>(f));
            Mask mask;
            try {
                mask = io::load_mask(path);
            } catch (const DataError& e) {
                throw DataError("trial " + manifest.trial_id + ", frame " + std::to_string(f) +
                                ": " + e.what());
            }
            shapes.emplace(c, build_shape(mask, rules.thresholds.rdp_epsilon_px,
                                          rules.thresholds.min_area_px2, scratch));
        }
        if (have_static_ts) shapes.emplace(ObjectClass::TissuePoints, static_ts);

        bool al = true, ar = true;
        if (need_alpha) {
            const io::JawFrame& j = jaws[f];
            al = grasper_open(j.l1, j.l2, jaw_open_px);
            ar = grasper_open(j.r1, j.r2, jaw_open_px);
        }
        const FeatureVector fv = compute_features(shapes, req, al, ar);
        out.native.samples[f] = infer_state(rules, fv);
    });

    out.downsampled.samples = downsample_context(out.native.samples, stride,
                                                 rules.thresholds.mode_window_frames);
    return out;
}

} // namespace ctxg::context
