#include "doctest.h"

#include <random>

#include "ctxg/context/downsample.hpp"

using namespace ctxg;

namespace {

// Straight-line restatement: the k-th output is the most frequent value in
// the window of native samples ending at frame (k+1)*stride - 1; on a tie the
// value seen most recently wins.
std::vector<uint8_t> oracle(const std::vector<uint8_t>& s, int stride, int window) {
    std::vector<uint8_t> out;
    for (size_t end = static_cast<size_t>(stride); end <= s.size();
         end += static_cast<size_t>(stride)) {
        const size_t begin = end > static_cast<size_t>(window) ? end - static_cast<size_t>(window) : 0;
        uint8_t best = 0;
        int best_count = -1;
        size_t best_last = 0;
        for (int v = 0; v < 256; ++v) {
            int count = 0;
            size_t last = 0;
            for (size_t i = begin; i < end; ++i) {
                if (s[i] == v) {
                    ++count;
                    last = i;
                }
            }
            if (count > best_count || (count == best_count && count > 0 && last > best_last)) {
                best = static_cast<uint8_t>(v);
                best_count = count;
                best_last = last;
            }
        }
        out.push_back(best);
    }
    return out;
}

} // namespace

TEST_CASE("rolling mode matches a brute-force restatement") {
    std::mt19937 rng(7);
    for (const int stride : {1, 3, 10}) {
        for (const int window : {1, 5, 10}) {
            for (int n = 0; n <= 200; n += 7) {
                std::vector<uint8_t> s(static_cast<size_t>(n));
                for (auto& v : s) v = static_cast<uint8_t>(rng() % 4);
                CAPTURE(stride);
                CAPTURE(window);
                CAPTURE(n);
                CHECK(context::rolling_mode(s, stride, window) == oracle(s, stride, window));
            }
        }
    }
}

TEST_CASE("ties resolve to the most recent value") {
    // window of 4 with two values twice each: the later occurrence decides
    const std::vector<uint8_t> a{1, 2, 1, 2};
    CHECK(context::rolling_mode(a, 4, 4) == std::vector<uint8_t>{2});
    const std::vector<uint8_t> b{2, 1, 2, 1};
    CHECK(context::rolling_mode(b, 4, 4) == std::vector<uint8_t>{1});
    // three-way tie: last occurrence order is 0 < 2 < 1
    const std::vector<uint8_t> c{0, 2, 1};
    CHECK(context::rolling_mode(c, 3, 3) == std::vector<uint8_t>{1});
}

TEST_CASE("window of one keeps the frame at each stride boundary") {
    const std::vector<uint8_t> s{9, 9, 1, 9, 9, 2};
    CHECK(context::rolling_mode(s, 3, 1) == std::vector<uint8_t>{1, 2});
}

TEST_CASE("window shorter than available history is clipped at the start") {
    // first output window would reach before frame 0
    const std::vector<uint8_t> s{5, 5, 1};
    CHECK(context::rolling_mode(s, 3, 10) == std::vector<uint8_t>{5});
}

TEST_CASE("trailing frames short of a full stride are dropped") {
    const std::vector<uint8_t> s{1, 1, 1, 2};
    CHECK(context::rolling_mode(s, 3, 3) == std::vector<uint8_t>{1});
    CHECK(context::rolling_mode({}, 3, 3).empty());
}

TEST_CASE("downsampling full states applies the mode per variable") {
    std::vector<ContextState> native;
    for (const char* code : {"20000", "00002", "20002"})
        native.push_back(ContextState::from_code(code));
    const auto out = context::downsample_context(native, 3, 3);
    REQUIRE(out.size() == 1);
    // variable 0: {2,0,2} -> 2; variable 4: {0,2,2} -> 2; others all 0.
    // The combined state never occurred verbatim in the window.
    CHECK(out[0].code() == "20002");
}

TEST_CASE("downsample argument validation") {
    CHECK_THROWS_AS(context::rolling_mode({1}, 0, 3), ConfigError);
    CHECK_THROWS_AS(context::rolling_mode({1}, 3, 0), ConfigError);
}
