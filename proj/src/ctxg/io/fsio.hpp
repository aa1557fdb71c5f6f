#pragma once

#include <filesystem>
#include <string>
#include <string_view>

namespace ctxg::io {

// Whole file as bytes; DataError when unreadable.
std::string read_file(const std::filesystem::path& p);

// Write to a sibling temp file, then rename over the target, so readers never
// observe a half-written file.
void write_file_atomic(const std::filesystem::path& p, std::string_view content);

} // namespace ctxg::io
