#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <string>

#include "ctxg/types.hpp"

namespace ctxg::io {

// Trial manifest: identity, rates, and the file layout of one recorded trial.
// Paths are relative to the manifest's directory. Mask patterns carry exactly
// one %d / %0Nd directive substituted with the 0-based frame index.
struct TrialManifest {
    std::filesystem::path root;
    std::string trial_id;
    Task task = Task::Suturing;
    double frame_rate_hz = 30.0;
    double output_rate_hz = 3.0;
    int frame_count = 0;
    int width = 0;   // filled during validation from the first mask
    int height = 0;

    std::map<ObjectClass, std::string> mask_patterns;
    std::optional<std::filesystem::path> jaw_ends;
    std::optional<std::filesystem::path> tissue_points; // static region file

    // Integer frames-per-output-sample ratio.
    int stride() const;
    std::filesystem::path mask_path(ObjectClass c, int frame) const;
};

// Parse and eagerly validate: every mask file of every stream must exist and
// all must share one image size (missing or mismatched files raise DataError
// naming the stream and frame).
TrialManifest load_manifest(const std::filesystem::path& file);

// Parse without touching mask files (manifest writing, tests).
TrialManifest parse_manifest(const std::filesystem::path& file);

std::string manifest_to_text(const TrialManifest& m);

} // namespace ctxg::io
