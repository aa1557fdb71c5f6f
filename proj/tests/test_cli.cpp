#include "doctest.h"

#include <algorithm>

#include "ctxg/io/fsio.hpp"
#include "ctxg/simd/kernels.hpp"
#include "testutil.hpp"

using testutil::quoted;
using testutil::run_cmd;
using testutil::TempDir;

namespace {

const std::string bin = CTXG_BIN;
const std::filesystem::path cfg = CTXG_CONFIG_DIR;

std::string grammar_arg() { return " --grammar " + quoted(cfg / "suturing.grammar"); }
std::string rules_arg() { return " --rules " + quoted(cfg / "suturing.rules"); }

} // namespace

TEST_CASE("help exits cleanly and lists the subcommands") {
    std::string out;
    CHECK(run_cmd(bin + " --help", &out) == 0);
    CHECK(out.find("infer-context") != std::string::npos);
    CHECK(out.find("translate") != std::string::npos);
    CHECK(out.find("evaluate") != std::string::npos);
    CHECK(out.find("render-timeline") != std::string::npos);
    CHECK(out.find("synth") != std::string::npos);
    CHECK(run_cmd(bin + " synth --help") == 0);
}

TEST_CASE("bad command lines exit with the configuration code") {
    CHECK(run_cmd(bin + " no-such-command") == 2);
    CHECK(run_cmd(bin + " translate") == 2);                       // required options missing
    CHECK(run_cmd(bin + " infer-context --manifest x") == 2);
    CHECK(run_cmd(bin) == 2);                                      // subcommand required
}

TEST_CASE("missing trial data exits with the data code") {
    TempDir dir("cli-data");
    const int rc = run_cmd(bin + " infer-context --manifest " + quoted(dir / "absent.txt") +
                           rules_arg() + " --out " + quoted(dir / "out.csv"));
    CHECK(rc == 3);
}

TEST_CASE("kernel levels can be forced when the host supports them") {
    TempDir dir("cli-simd");
    const std::string synth = bin + " --simd %s synth --out-dir " + quoted(dir / "t") +
                              grammar_arg() + rules_arg() +
                              " --samples 2 --width 540 --height 460 --png";
    auto with_level = [&](const char* level) {
        std::string cmd = synth;
        cmd.replace(cmd.find("%s"), 2, level);
        return run_cmd(cmd);
    };
    const auto levels = ctxg::simd::available_levels();
    CHECK(with_level("scalar") == 0);   // always available
    const bool has_neon =
        std::find(levels.begin(), levels.end(), ctxg::simd::Level::Neon) != levels.end();
    CHECK(with_level("neon") == (has_neon ? 0 : 2));
    CHECK(with_level("bogus") == 2);
}

TEST_CASE("synthesize, infer, translate, evaluate, render") {
    TempDir dir("cli-pipe");
    const std::filesystem::path trial = dir / "trial";

    std::string out;
    int rc = run_cmd(bin + " synth --out-dir " + quoted(trial) + grammar_arg() + rules_arg() +
                         " --trial-id demo --seed 11 --samples 6 --png",
                     &out);
    REQUIRE_MESSAGE(rc == 0, out);
    REQUIRE(std::filesystem::exists(trial / "manifest.txt"));

    rc = run_cmd(bin + " infer-context --manifest " + quoted(trial / "manifest.txt") +
                     rules_arg() + " --out " + quoted(dir / "context.csv") + " --native-out " +
                     quoted(dir / "native.csv") + " --jobs 2",
                 &out);
    REQUIRE_MESSAGE(rc == 0, out);

    // inference over the synthetic masks reproduces the stored ground truth
    CHECK(ctxg::io::read_file(dir / "context.csv") ==
          ctxg::io::read_file(trial / "gt_context.csv"));

    rc = run_cmd(bin + " translate --context " + quoted(dir / "context.csv") + grammar_arg() +
                     " --out " + quoted(dir / "gestures.txt") + " --trace " +
                     quoted(dir / "trace.txt") + " --frame-rate-hz 30",
                 &out);
    REQUIRE_MESSAGE(rc == 0, out);
    CHECK(ctxg::io::read_file(dir / "gestures.txt") ==
          ctxg::io::read_file(trial / "gt_gestures.txt"));
    CHECK(ctxg::io::read_file(dir / "trace.txt").find("context") != std::string::npos);

    rc = run_cmd(bin + " evaluate --pred " + quoted(dir / "gestures.txt") + " --gt " +
                     quoted(trial / "gt_gestures.txt") + " --context-pred " +
                     quoted(dir / "context.csv") + " --context-gt " +
                     quoted(trial / "gt_context.csv") + " --gesture-csv " +
                     quoted(dir / "gestures_report.csv") + " --context-csv " +
                     quoted(dir / "context_report.csv"),
                 &out);
    REQUIRE_MESSAGE(rc == 0, out);
    CHECK(out.find("Mean") != std::string::npos);
    CHECK(out.find("100.00") != std::string::npos);

    const std::string gcsv = ctxg::io::read_file(dir / "gestures_report.csv");
    CHECK(gcsv.find("Mean,100.0000,100.0000,1.0000") != std::string::npos);
    const std::string ccsv = ctxg::io::read_file(dir / "context_report.csv");
    CHECK(ccsv.find("Mean,1.0000,1.0000,1.0000,1.0000,1.0000,1.0000") != std::string::npos);

    rc = run_cmd(bin + " render-timeline --gestures " + quoted(dir / "gestures.txt") +
                     " --context " + quoted(dir / "context.csv") + " --out " +
                     quoted(dir / "timeline.svg"),
                 &out);
    REQUIRE_MESSAGE(rc == 0, out);
    const std::string svg = ctxg::io::read_file(dir / "timeline.svg");
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("Left Hold") != std::string::npos);
}

TEST_CASE("evaluate validates its pairing and warns on ragged lengths") {
    TempDir dir("cli-eval");
    ctxg::io::write_file_atomic(dir / "a.txt", "0 9 G1\n");
    ctxg::io::write_file_atomic(dir / "b.txt", "0 19 G1\n");

    // unpaired inputs
    CHECK(run_cmd(bin + " evaluate --pred " + quoted(dir / "a.txt")) == 2);
    // no inputs at all
    CHECK(run_cmd(bin + " evaluate") == 2);

    std::string out;
    const int rc = run_cmd(bin + " evaluate --pred " + quoted(dir / "a.txt") + " --gt " +
                               quoted(dir / "b.txt"),
                           &out);
    CHECK(rc == 0);
    CHECK(out.find("comparing the first 10") != std::string::npos);
}

TEST_CASE("translate rejects a context rate that does not divide the frame rate") {
    TempDir dir("cli-rate");
    ctxg::io::write_file_atomic(dir / "ctx.csv",
                                "# rate_hz=7\nsample_index,LH,LC,RH,RC,S5\n0,0,0,0,0,0\n");
    const int rc = run_cmd(bin + " translate --context " + quoted(dir / "ctx.csv") +
                           grammar_arg() + " --out " + quoted(dir / "g.txt"));
    CHECK(rc == 2);
}

TEST_CASE("render-timeline requires at least one input") {
    TempDir dir("cli-render");
    CHECK(run_cmd(bin + " render-timeline --out " + quoted(dir / "x.svg")) == 2);
}
