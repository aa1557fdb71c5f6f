#include "ctxg/io/fsio.hpp"

#include <cerrno>
#include <cstdio>
#include <cstring>
#include <fstream>

#include "ctxg/types.hpp"

namespace ctxg::io {

std::string read_file(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary | std::ios::ate);
    if (!in) throw DataError("cannot open file: " + p.string());
    const std::streamsize size = in.tellg();
    if (size < 0) throw DataError("cannot stat file: " + p.string());
    std::string content(static_cast<size_t>(size), '\0');
    in.seekg(0);
    if (size > 0) in.read(content.data(), size);
    if (!in) throw DataError("read failed: " + p.string());
    return content;
}

void write_file_atomic(const std::filesystem::path& p, std::string_view content) {
    std::filesystem::path tmp = p;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) throw DataError("cannot create file: " + tmp.string());
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        out.flush();
        if (!out) throw DataError("write failed: " + tmp.string());
    }
    std::error_code ec;
    std::filesystem::rename(tmp, p, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw DataError("rename failed for " + p.string() + ": " + ec.message());
    }
}

} // namespace ctxg::io
