#pragma once

#include <filesystem>

#include "ctxg/types.hpp"

namespace ctxg::io {

struct ImageInfo {
    int width = 0;
    int height = 0;
};

// 8-bit grayscale image, row major.
struct GrayImage {
    int width = 0;
    int height = 0;
    std::vector<uint8_t> pixels;
};

// Format is detected from magic bytes: binary PGM (P5) or 8-bit grayscale
// PNG. 16-bit or non-grayscale images are rejected as unsupported.
GrayImage load_gray(const std::filesystem::path& p);

// load_gray + threshold: pixel values above 127 become 1, the rest 0.
Mask load_mask(const std::filesystem::path& p);

// Header-only read, for cheap existence/dimension validation.
ImageInfo probe_image(const std::filesystem::path& p);

// Writers emit 0 -> 0 and nonzero -> 255.
void write_pgm(const std::filesystem::path& p, const Mask& m);
void write_png(const std::filesystem::path& p, const Mask& m);

void write_pgm_gray(const std::filesystem::path& p, const GrayImage& img);
void write_png_gray(const std::filesystem::path& p, const GrayImage& img);

} // namespace ctxg::io
