#include "ctxg/io/manifest.hpp"

#include <cmath>
#include <cstdio>

#include "ctxg/io/fsio.hpp"
#include "ctxg/io/image.hpp"
#include "ctxg/io/text_config.hpp"

namespace ctxg::io {

namespace {

// Exactly one %d or %0Nd (N <= 9); anything else in the pattern is literal.
void validate_pattern(const std::string& pattern, const std::string& what) {
    size_t at = pattern.find('%');
    if (at == std::string::npos)
        throw ConfigError(what + ": mask pattern needs a %d frame directive: '" + pattern + "'");
    size_t i = at + 1;
    if (i < pattern.size() && pattern[i] == '0') {
        ++i;
        size_t digits = 0;
        while (i < pattern.size() && pattern[i] >= '1' && pattern[i] <= '9' && digits < 1) {
            ++i;
            ++digits;
        }
        if (digits == 0)
            throw ConfigError(what + ": malformed width in mask pattern: '" + pattern + "'");
    }
    if (i >= pattern.size() || pattern[i] != 'd')
        throw ConfigError(what + ": mask pattern directive must be %d or %0Nd: '" + pattern + "'");
    if (pattern.find('%', i) != std::string::npos)
        throw ConfigError(what + ": mask pattern must have exactly one directive: '" + pattern + "'");
}

std::string apply_pattern(const std::string& pattern, int frame) {
    char buf[512];
    std::snprintf(buf, sizeof buf, pattern.c_str(), frame);
    return std::string(buf);
}

} // namespace

int TrialManifest::stride() const {
    const double r = frame_rate_hz / output_rate_hz;
    const int s = static_cast<int>(std::lround(r));
    if (s < 1 || std::fabs(r - s) > 1e-9)
        throw ConfigError("frame rate " + std::to_string(frame_rate_hz) +
                          " is not an integer multiple of output rate " + std::to_string(output_rate_hz));
    return s;
}

std::filesystem::path TrialManifest::mask_path(ObjectClass c, int frame) const {
    auto it = mask_patterns.find(c);
    if (it == mask_patterns.end())
        throw ConfigError(std::string("manifest has no mask stream for ") + object_class_name(c));
    return root / apply_pattern(it->second, frame);
}

TrialManifest parse_manifest(const std::filesystem::path& file) {
    const ConfigDoc doc = ConfigDoc::parse(read_file(file), file.string());
    TrialManifest m;
    m.root = file.parent_path();

    bool saw_task = false;
    for (const auto& l : doc.lines) {
        std::string key, value;
        if (l.section.empty()) {
            if (!split_key_value(l.text, key, value))
                throw ConfigError(doc.origin + ":" + std::to_string(l.line_no) + ": expected key = value");
            if (key == "trial_id") m.trial_id = value;
            else if (key == "task") { m.task = parse_task(value); saw_task = true; }
            else if (key == "frame_rate_hz") m.frame_rate_hz = parse_double(value, key);
            else if (key == "output_rate_hz") m.output_rate_hz = parse_double(value, key);
            else if (key == "frame_count") m.frame_count = static_cast<int>(parse_int(value, key));
            else throw ConfigError(doc.origin + ":" + std::to_string(l.line_no) + ": unknown key '" + key + "'");
        } else if (l.section == "masks") {
            if (!split_key_value(l.text, key, value))
                throw ConfigError(doc.origin + ":" + std::to_string(l.line_no) + ": expected class = pattern");
            const ObjectClass c = parse_object_class(key);
            validate_pattern(value, doc.origin + ":" + std::to_string(l.line_no));
            if (!m.mask_patterns.emplace(c, value).second)
                throw ConfigError(doc.origin + ":" + std::to_string(l.line_no) + ": duplicate mask stream '" + key + "'");
        } else if (l.section == "annotations") {
            if (!split_key_value(l.text, key, value))
                throw ConfigError(doc.origin + ":" + std::to_string(l.line_no) + ": expected key = path");
            if (key == "jaw_ends") m.jaw_ends = std::filesystem::path(value);
            else if (key == "tissue_points") m.tissue_points = std::filesystem::path(value);
            else throw ConfigError(doc.origin + ":" + std::to_string(l.line_no) + ": unknown annotation '" + key + "'");
        } else {
            throw ConfigError(doc.origin + ":" + std::to_string(l.line_no) + ": unknown section [" + l.section + "]");
        }
    }

    if (m.trial_id.empty()) throw ConfigError(doc.origin + ": trial_id missing");
    if (!saw_task) throw ConfigError(doc.origin + ": task missing");
    if (m.frame_count < 0) throw ConfigError(doc.origin + ": frame_count must be >= 0");
    if (m.frame_rate_hz <= 0 || m.output_rate_hz <= 0)
        throw ConfigError(doc.origin + ": rates must be positive");
    if (m.mask_patterns.empty()) throw ConfigError(doc.origin + ": [masks] section is empty");
    m.stride(); // integer-ratio check
    return m;
}

TrialManifest load_manifest(const std::filesystem::path& file) {
    TrialManifest m = parse_manifest(file);

    for (const auto& [cls, pattern] : m.mask_patterns) {
        for (int f = 0; f < m.frame_count; ++f) {
            const std::filesystem::path p = m.mask_path(cls, f);
            ImageInfo info;
            try {
                info = probe_image(p);
            } catch (const DataError& e) {
                throw DataError("trial " + m.trial_id + ", stream " + object_class_name(cls) +
                                ", frame " + std::to_string(f) + ": " + e.what());
            }
            if (m.width == 0) {
                m.width = info.width;
                m.height = info.height;
            } else if (info.width != m.width || info.height != m.height) {
                throw DataError("trial " + m.trial_id + ", stream " + object_class_name(cls) +
                                ", frame " + std::to_string(f) + ": size " +
                                std::to_string(info.width) + "x" + std::to_string(info.height) +
                                " does not match trial size " + std::to_string(m.width) + "x" +
                                std::to_string(m.height));
            }
        }
    }

    if (m.jaw_ends) {
        const auto p = m.root / *m.jaw_ends;
        if (!std::filesystem::exists(p))
            throw DataError("trial " + m.trial_id + ": jaw ends file missing: " + p.string());
    }
    if (m.tissue_points) {
        const auto p = m.root / *m.tissue_points;
        if (!std::filesystem::exists(p))
            throw DataError("trial " + m.trial_id + ": tissue points file missing: " + p.string());
    }
    return m;
}

std::string manifest_to_text(const TrialManifest& m) {
    std::string out;
    out += "trial_id = " + m.trial_id + "\n";
    out += "task = " + std::string(task_name(m.task)) + "\n";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%g", m.frame_rate_hz);
    out += "frame_rate_hz = " + std::string(buf) + "\n";
    std::snprintf(buf, sizeof buf, "%g", m.output_rate_hz);
    out += "output_rate_hz = " + std::string(buf) + "\n";
    out += "frame_count = " + std::to_string(m.frame_count) + "\n";
    out += "\n[masks]\n";
    for (const auto& [cls, pattern] : m.mask_patterns)
        out += std::string(object_class_name(cls)) + " = " + pattern + "\n";
    if (m.jaw_ends || m.tissue_points) {
        out += "\n[annotations]\n";
        if (m.jaw_ends) out += "jaw_ends = " + m.jaw_ends->generic_string() + "\n";
        if (m.tissue_points) out += "tissue_points = " + m.tissue_points->generic_string() + "\n";
    }
    return out;
}

} // namespace ctxg::io
