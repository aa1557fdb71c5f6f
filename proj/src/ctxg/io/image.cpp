#include "ctxg/io/image.hpp"

#include <zlib.h>

#include <cstdlib>
#include <cstring>
#include <fstream>

#include "ctxg/io/fsio.hpp"
#include "ctxg/simd/kernels.hpp"

namespace ctxg::io {

namespace {

constexpr uint8_t kPngSig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};

[[noreturn]] void bad(const std::filesystem::path& p, const std::string& why) {
    throw DataError(p.string() + ": " + why);
}

// ---- PGM ----

// Skips PGM whitespace and '#' comments, then parses a decimal token.
bool pgm_token(const std::string& s, size_t& pos, long& out) {
    while (pos < s.size()) {
        const char c = s[pos];
        if (c == '#') {
            while (pos < s.size() && s[pos] != '\n') ++pos;
        } else if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
            ++pos;
        } else {
            break;
        }
    }
    if (pos >= s.size() || s[pos] < '0' || s[pos] > '9') return false;
    long v = 0;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') {
        v = v * 10 + (s[pos] - '0');
        ++pos;
    }
    out = v;
    return true;
}

GrayImage parse_pgm(const std::string& bytes, const std::filesystem::path& p, bool header_only) {
    size_t pos = 2; // past "P5"
    long w = 0, h = 0, maxval = 0;
    if (!pgm_token(bytes, pos, w) || !pgm_token(bytes, pos, h) || !pgm_token(bytes, pos, maxval))
        bad(p, "malformed PGM header");
    if (w <= 0 || h <= 0) bad(p, "non-positive PGM dimensions");
    if (maxval > 255) bad(p, "unsupported PGM depth (maxval " + std::to_string(maxval) + ")");
    if (maxval <= 0) bad(p, "bad PGM maxval");

    GrayImage img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    if (header_only) return img;

    ++pos; // single whitespace after maxval
    const size_t need = static_cast<size_t>(w) * static_cast<size_t>(h);
    if (bytes.size() < pos + need) bad(p, "PGM pixel data truncated");
    img.pixels.resize(need);
    std::memcpy(img.pixels.data(), bytes.data() + pos, need);
    return img;
}

// ---- PNG ----

uint32_t be32(const uint8_t* b) {
    return (uint32_t(b[0]) << 24) | (uint32_t(b[1]) << 16) | (uint32_t(b[2]) << 8) | uint32_t(b[3]);
}

void put_be32(std::string& out, uint32_t v) {
    out.push_back(static_cast<char>((v >> 24) & 0xff));
    out.push_back(static_cast<char>((v >> 16) & 0xff));
    out.push_back(static_cast<char>((v >> 8) & 0xff));
    out.push_back(static_cast<char>(v & 0xff));
}

struct PngHeader {
    uint32_t width = 0, height = 0;
    uint8_t depth = 0, color = 0, interlace = 0;
};

PngHeader parse_png_ihdr(const std::string& bytes, const std::filesystem::path& p) {
    if (bytes.size() < 8 + 25 || std::memcmp(bytes.data(), kPngSig, 8) != 0)
        bad(p, "malformed PNG signature");
    const uint8_t* d = reinterpret_cast<const uint8_t*>(bytes.data()) + 8;
    if (be32(d) != 13 || std::memcmp(d + 4, "IHDR", 4) != 0) bad(p, "PNG missing IHDR");
    PngHeader h;
    h.width = be32(d + 8);
    h.height = be32(d + 12);
    h.depth = d[16];
    h.color = d[17];
    h.interlace = d[20];
    if (h.width == 0 || h.height == 0) bad(p, "bad PNG dimensions");
    if (h.depth == 16) bad(p, "unsupported PNG depth (16-bit)");
    if (h.depth != 8 || h.color != 0) bad(p, "unsupported PNG format (want 8-bit grayscale)");
    if (h.interlace != 0) bad(p, "unsupported PNG interlacing");
    return h;
}

uint8_t paeth(int a, int b, int c) {
    const int q = a + b - c;
    const int pa = std::abs(q - a);
    const int pb = std::abs(q - b);
    const int pc = std::abs(q - c);
    if (pa <= pb && pa <= pc) return static_cast<uint8_t>(a);
    if (pb <= pc) return static_cast<uint8_t>(b);
    return static_cast<uint8_t>(c);
}

GrayImage parse_png(const std::string& bytes, const std::filesystem::path& p) {
    const PngHeader hdr = parse_png_ihdr(bytes, p);
    const uint8_t* data = reinterpret_cast<const uint8_t*>(bytes.data());

    std::string compressed;
    size_t pos = 8;
    bool saw_iend = false;
    while (pos + 12 <= bytes.size()) {
        const uint32_t len = be32(data + pos);
        if (pos + 12 + len > bytes.size()) bad(p, "PNG chunk overruns file");
        const char* type = bytes.data() + pos + 4;
        const uint32_t stored_crc = be32(data + pos + 8 + len);
        const uint32_t crc = static_cast<uint32_t>(
            crc32(0L, data + pos + 4, static_cast<uInt>(len + 4)));
        if (crc != stored_crc) bad(p, "PNG chunk CRC mismatch");
        if (std::memcmp(type, "IDAT", 4) == 0) {
            compressed.append(bytes.data() + pos + 8, len);
        } else if (std::memcmp(type, "IEND", 4) == 0) {
            saw_iend = true;
            break;
        }
        pos += 12 + len;
    }
    if (!saw_iend) bad(p, "PNG missing IEND");
    if (compressed.empty()) bad(p, "PNG missing IDAT");

    const size_t w = hdr.width;
    const size_t h = hdr.height;
    const size_t raw_size = h * (w + 1);
    std::vector<uint8_t> raw(raw_size);
    uLongf out_len = raw_size;
    const int rc = uncompress(raw.data(), &out_len,
                              reinterpret_cast<const Bytef*>(compressed.data()),
                              static_cast<uLong>(compressed.size()));
    if (rc != Z_OK || out_len != raw_size) bad(p, "PNG pixel data corrupt");

    GrayImage img;
    img.width = static_cast<int>(w);
    img.height = static_cast<int>(h);
    img.pixels.resize(w * h);
    for (size_t y = 0; y < h; ++y) {
        const uint8_t filter = raw[y * (w + 1)];
        const uint8_t* src = raw.data() + y * (w + 1) + 1;
        uint8_t* dst = img.pixels.data() + y * w;
        const uint8_t* up = y > 0 ? img.pixels.data() + (y - 1) * w : nullptr;
        switch (filter) {
            case 0:
                std::memcpy(dst, src, w);
                break;
            case 1:
                for (size_t x = 0; x < w; ++x)
                    dst[x] = static_cast<uint8_t>(src[x] + (x > 0 ? dst[x - 1] : 0));
                break;
            case 2:
                for (size_t x = 0; x < w; ++x)
                    dst[x] = static_cast<uint8_t>(src[x] + (up ? up[x] : 0));
                break;
            case 3:
                for (size_t x = 0; x < w; ++x) {
                    const int left = x > 0 ? dst[x - 1] : 0;
                    const int above = up ? up[x] : 0;
                    dst[x] = static_cast<uint8_t>(src[x] + ((left + above) >> 1));
                }
                break;
            case 4:
                for (size_t x = 0; x < w; ++x) {
                    const int left = x > 0 ? dst[x - 1] : 0;
                    const int above = up ? up[x] : 0;
                    const int corner = (x > 0 && up) ? up[x - 1] : 0;
                    dst[x] = static_cast<uint8_t>(src[x] + paeth(left, above, corner));
                }
                break;
            default:
                bad(p, "PNG row uses unknown filter " + std::to_string(filter));
        }
    }
    return img;
}

std::string read_prefix(const std::filesystem::path& p, size_t n) {
    std::ifstream in(p, std::ios::binary);
    if (!in) throw DataError("cannot open file: " + p.string());
    std::string buf(n, '\0');
    in.read(buf.data(), static_cast<std::streamsize>(n));
    buf.resize(static_cast<size_t>(in.gcount()));
    return buf;
}

void write_png_bytes(const std::filesystem::path& p, int width, int height,
                     const uint8_t* pixels) {
    const size_t w = static_cast<size_t>(width);
    const size_t h = static_cast<size_t>(height);
    std::vector<uint8_t> raw(h * (w + 1));
    for (size_t y = 0; y < h; ++y) {
        raw[y * (w + 1)] = 0;
        std::memcpy(raw.data() + y * (w + 1) + 1, pixels + y * w, w);
    }
    uLongf bound = compressBound(static_cast<uLong>(raw.size()));
    std::vector<uint8_t> comp(bound);
    if (compress2(comp.data(), &bound, raw.data(), static_cast<uLong>(raw.size()),
                  Z_BEST_SPEED) != Z_OK)
        throw DataError("PNG compression failed for " + p.string());
    comp.resize(bound);

    std::string out;
    out.reserve(comp.size() + 128);
    out.append(reinterpret_cast<const char*>(kPngSig), 8);

    auto chunk = [&out](const char* type, const std::string& payload) {
        put_be32(out, static_cast<uint32_t>(payload.size()));
        const size_t at = out.size();
        out.append(type, 4);
        out.append(payload);
        const uint32_t crc = static_cast<uint32_t>(
            crc32(0L, reinterpret_cast<const Bytef*>(out.data() + at), static_cast<uInt>(4 + payload.size())));
        put_be32(out, crc);
    };

    std::string ihdr;
    put_be32(ihdr, static_cast<uint32_t>(width));
    put_be32(ihdr, static_cast<uint32_t>(height));
    ihdr.push_back(8);  // bit depth
    ihdr.push_back(0);  // grayscale
    ihdr.push_back(0);  // deflate
    ihdr.push_back(0);  // adaptive filtering
    ihdr.push_back(0);  // no interlace
    chunk("IHDR", ihdr);
    chunk("IDAT", std::string(reinterpret_cast<const char*>(comp.data()), comp.size()));
    chunk("IEND", "");
    write_file_atomic(p, out);
}

} // namespace

GrayImage load_gray(const std::filesystem::path& p) {
    const std::string bytes = read_file(p);
    if (bytes.size() >= 2 && bytes[0] == 'P' && bytes[1] == '5')
        return parse_pgm(bytes, p, false);
    if (bytes.size() >= 8 && std::memcmp(bytes.data(), kPngSig, 8) == 0)
        return parse_png(bytes, p);
    bad(p, "unsupported image format (want binary PGM or 8-bit grayscale PNG)");
}

Mask load_mask(const std::filesystem::path& p) {
    GrayImage img = load_gray(p);
    Mask m;
    m.width = img.width;
    m.height = img.height;
    m.data.resize(img.pixels.size());
    simd::threshold_mask(img.pixels.data(), m.data.data(), img.pixels.size());
    return m;
}

ImageInfo probe_image(const std::filesystem::path& p) {
    // 4K covers any sane PGM header (comments included) and the PNG IHDR.
    const std::string head = read_prefix(p, 4096);
    if (head.size() >= 2 && head[0] == 'P' && head[1] == '5') {
        GrayImage img = parse_pgm(head, p, true);
        return {img.width, img.height};
    }
    if (head.size() >= 33 && std::memcmp(head.data(), kPngSig, 8) == 0) {
        PngHeader h = parse_png_ihdr(head, p);
        return {static_cast<int>(h.width), static_cast<int>(h.height)};
    }
    bad(p, "unsupported image format (want binary PGM or 8-bit grayscale PNG)");
}

void write_pgm_gray(const std::filesystem::path& p, const GrayImage& img) {
    std::string out = "P5\n" + std::to_string(img.width) + " " + std::to_string(img.height) + "\n255\n";
    out.append(reinterpret_cast<const char*>(img.pixels.data()), img.pixels.size());
    write_file_atomic(p, out);
}

void write_png_gray(const std::filesystem::path& p, const GrayImage& img) {
    write_png_bytes(p, img.width, img.height, img.pixels.data());
}

namespace {
GrayImage expand_mask(const Mask& m) {
    GrayImage img;
    img.width = m.width;
    img.height = m.height;
    img.pixels.resize(m.data.size());
    for (size_t i = 0; i < m.data.size(); ++i) img.pixels[i] = m.data[i] ? 255 : 0;
    return img;
}
} // namespace

void write_pgm(const std::filesystem::path& p, const Mask& m) { write_pgm_gray(p, expand_mask(m)); }

void write_png(const std::filesystem::path& p, const Mask& m) { write_png_gray(p, expand_mask(m)); }

} // namespace ctxg::io
