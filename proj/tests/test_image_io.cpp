#include <random>

#include "doctest.h"

#include "ctxg/io/fsio.hpp"
#include "ctxg/io/image.hpp"
#include "testutil.hpp"

using namespace ctxg;
using testutil::TempDir;

namespace {

Mask random_mask(std::mt19937_64& rng, int w, int h) {
    Mask m(w, h);
    for (auto& v : m.data) v = rng() % 3 == 0 ? 1 : 0;
    return m;
}

} // namespace

TEST_CASE("PGM round trip preserves every pixel") {
    TempDir dir("pgm");
    std::mt19937_64 rng(3);
    const Mask m = random_mask(rng, 37, 21);
    io::write_pgm(dir / "m.pgm", m);
    const Mask back = io::load_mask(dir / "m.pgm");
    CHECK(back.width == m.width);
    CHECK(back.height == m.height);
    CHECK(back.data == m.data);
}

TEST_CASE("PNG round trip preserves every pixel") {
    TempDir dir("png");
    std::mt19937_64 rng(5);
    const Mask m = random_mask(rng, 64, 48);
    io::write_png(dir / "m.png", m);
    const Mask back = io::load_mask(dir / "m.png");
    CHECK(back.width == m.width);
    CHECK(back.height == m.height);
    CHECK(back.data == m.data);
}

TEST_CASE("gray PNG round trip with arbitrary values") {
    TempDir dir("png8");
    io::GrayImage img;
    img.width = 19;
    img.height = 7;
    img.pixels.resize(19 * 7);
    std::mt19937_64 rng(9);
    for (auto& v : img.pixels) v = static_cast<uint8_t>(rng());
    io::write_png_gray(dir / "g.png", img);
    const io::GrayImage back = io::load_gray(dir / "g.png");
    CHECK(back.pixels == img.pixels);
}

TEST_CASE("PGM comments and whitespace in the header are tolerated") {
    TempDir dir("pgmc");
    const std::string content = "P5\n# a comment\n 4\n# more\n2 255\nAAAABBBB";
    io::write_file_atomic(dir / "c.pgm", content);
    const io::GrayImage img = io::load_gray(dir / "c.pgm");
    CHECK(img.width == 4);
    CHECK(img.height == 2);
    CHECK(img.pixels[0] == 'A');
}

TEST_CASE("16-bit PGM is rejected") {
    TempDir dir("pgm16");
    io::write_file_atomic(dir / "deep.pgm", "P5\n2 2\n65535\n" + std::string(8, 'x'));
    CHECK_THROWS_AS(io::load_gray(dir / "deep.pgm"), DataError);
}

TEST_CASE("truncated PGM payload is rejected") {
    TempDir dir("pgmt");
    io::write_file_atomic(dir / "short.pgm", "P5\n4 4\n255\nabc");
    CHECK_THROWS_AS(io::load_gray(dir / "short.pgm"), DataError);
}

TEST_CASE("unknown magic bytes are rejected") {
    TempDir dir("magic");
    io::write_file_atomic(dir / "x.img", "BM000000000");
    CHECK_THROWS_AS(io::load_gray(dir / "x.img"), DataError);
}

TEST_CASE("probe reads dimensions without decoding") {
    TempDir dir("probe");
    Mask m(123, 45);
    io::write_pgm(dir / "a.pgm", m);
    io::write_png(dir / "a.png", m);
    const io::ImageInfo pa = io::probe_image(dir / "a.pgm");
    CHECK(pa.width == 123);
    CHECK(pa.height == 45);
    const io::ImageInfo pb = io::probe_image(dir / "a.png");
    CHECK(pb.width == 123);
    CHECK(pb.height == 45);
}

TEST_CASE("PNG with corrupted checksum is rejected") {
    TempDir dir("crc");
    io::write_png(dir / "ok.png", Mask(8, 8));
    std::string bytes = io::read_file(dir / "ok.png");
    bytes[bytes.size() / 2] ^= 0x40;  // flip a bit inside a chunk payload
    io::write_file_atomic(dir / "bad.png", bytes);
    CHECK_THROWS_AS(io::load_gray(dir / "bad.png"), DataError);
}

TEST_CASE("color PNG is rejected") {
    TempDir dir("rgb");
    // Hand-built IHDR declaring color type 2 (truecolor); the reader should
    // refuse before inflating anything.
    unsigned char hdr[] = {0x89, 'P',  'N',  'G',  0x0D, 0x0A, 0x1A, 0x0A, 0,    0,   0,
                           13,   'I',  'H',  'D',  'R',  0,    0,    0,    4,    0,   0,
                           0,    4,    8,    2,    0,    0,    0,    0x90, 0x91, 0x68, 0x36};
    io::write_file_atomic(dir / "c.png",
                          std::string(reinterpret_cast<char*>(hdr), sizeof(hdr)));
    CHECK_THROWS_AS(io::load_gray(dir / "c.png"), DataError);
}

TEST_CASE("load_mask thresholds mid-gray") {
    TempDir dir("thr");
    io::GrayImage img;
    img.width = 4;
    img.height = 1;
    img.pixels = {0, 127, 128, 255};
    io::write_pgm_gray(dir / "t.pgm", img);
    const Mask m = io::load_mask(dir / "t.pgm");
    CHECK(m.data == std::vector<uint8_t>{0, 0, 1, 1});
}

TEST_CASE("atomic write replaces content completely") {
    TempDir dir("atomic");
    io::write_file_atomic(dir / "f.txt", "first version, longer");
    io::write_file_atomic(dir / "f.txt", "second");
    CHECK(io::read_file(dir / "f.txt") == "second");
}
