#include "doctest.h"

#include <random>

#include "ctxg/metrics/metrics.hpp"

using namespace ctxg;
using metrics::run_length;

namespace {

using Labels = std::vector<std::string>;

// Full-matrix edit distance, written independently of the two-row version
// underneath edit_score.
size_t lev(const Labels& a, const Labels& b) {
    std::vector<std::vector<size_t>> d(a.size() + 1, std::vector<size_t>(b.size() + 1, 0));
    for (size_t i = 0; i <= a.size(); ++i) d[i][0] = i;
    for (size_t j = 0; j <= b.size(); ++j) d[0][j] = j;
    for (size_t i = 1; i <= a.size(); ++i) {
        for (size_t j = 1; j <= b.size(); ++j) {
            const size_t sub = d[i - 1][j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
            d[i][j] = std::min({d[i - 1][j] + 1, d[i][j - 1] + 1, sub});
        }
    }
    return d[a.size()][b.size()];
}

io::GestureSegment seg(int64_t s, int64_t e, const std::string& l) { return {s, e, l}; }

} // namespace

TEST_CASE("frame labels and run length") {
    io::GestureTranscript t;
    t.segments = {seg(0, 3, "G1"), seg(5, 7, "G2")};
    const Labels f = metrics::frame_labels(t, "-");
    CHECK(f == Labels{"G1", "G1", "G1", "-", "-", "G2", "G2"});
    CHECK(run_length(f) == Labels{"G1", "-", "G2"});
    CHECK(run_length({}).empty());
    CHECK(metrics::frame_labels({}).empty());
}

TEST_CASE("accuracy") {
    CHECK(metrics::accuracy_pct({"a", "b", "c", "d"}, {"a", "b", "x", "d"}) == 75.0);
    CHECK(metrics::accuracy_pct({}, {}) == 100.0);
    CHECK(metrics::accuracy_pct({"a"}, {"a"}) == 100.0);
    CHECK_THROWS_AS(metrics::accuracy_pct({"a"}, {"a", "b"}), ValidationError);
}

TEST_CASE("edit score on the worked example") {
    // one dropped gesture out of three: distance 1, max length 3
    const double s = metrics::edit_score({"G1", "G2", "G3"}, {"G1", "G3"});
    CHECK(s == doctest::Approx(66.6667).epsilon(0.0002));
    CHECK(metrics::edit_score({}, {}) == 100.0);
    CHECK(metrics::edit_score({"G1"}, {}) == 0.0);
    CHECK(metrics::edit_score({"G1", "G2"}, {"G1", "G2"}) == 100.0);
}

TEST_CASE("edit score agrees with a full-matrix distance") {
    std::mt19937 rng(11);
    const char* alphabet[4] = {"G1", "G2", "G3", "G4"};
    for (int iter = 0; iter < 300; ++iter) {
        Labels a(rng() % 12), b(rng() % 12);
        for (auto& x : a) x = alphabet[rng() % 4];
        for (auto& x : b) x = alphabet[rng() % 4];
        const size_t n = std::max(a.size(), b.size());
        const double want =
            n == 0 ? 100.0 : (1.0 - static_cast<double>(lev(a, b)) / static_cast<double>(n)) * 100.0;
        CAPTURE(iter);
        CHECK(metrics::edit_score(a, b) == doctest::Approx(want).epsilon(1e-12));
    }
}

TEST_CASE("segment IOU: exact match scores 1") {
    const std::vector<io::GestureSegment> gt{seg(0, 10, "G1"), seg(10, 30, "G2")};
    const auto r = metrics::segment_iou(gt, gt);
    CHECK(r.overall == 1.0);
    CHECK(r.per_class.at("G1") == 1.0);
    CHECK(r.per_class.at("G2") == 1.0);
}

TEST_CASE("segment IOU: partial overlap and label sets") {
    const std::vector<io::GestureSegment> gt{seg(0, 10, "G1"), seg(10, 20, "G2")};
    const std::vector<io::GestureSegment> pred{seg(0, 5, "G1"), seg(10, 20, "G3")};
    const auto r = metrics::segment_iou(gt, pred);
    // G1: overlap 5 over union 10
    CHECK(r.per_class.at("G1") == 0.5);
    // G3 exists only in the prediction: no ground truth to claim
    CHECK(r.per_class.at("G3") == 0.0);
    // G2 exists only in the ground truth
    CHECK(r.per_class.at("G2") == 0.0);
    CHECK(r.overall == doctest::Approx((0.5 + 0.0 + 0.0) / 3.0));
}

TEST_CASE("segment IOU: each ground-truth segment is claimed once") {
    // two predictions over the same gt segment: the first (temporal order)
    // claims it, the second scores 0
    const std::vector<io::GestureSegment> gt{seg(0, 10, "G1")};
    const std::vector<io::GestureSegment> pred{seg(0, 5, "G1"), seg(5, 10, "G1")};
    const auto r = metrics::segment_iou(gt, pred);
    CHECK(r.per_class.at("G1") == doctest::Approx((0.5 + 0.0) / 2.0));
}

TEST_CASE("segment IOU: ties resolve to the earliest ground-truth segment") {
    // the prediction overlaps both gt segments equally
    const std::vector<io::GestureSegment> gt{seg(0, 10, "G1"), seg(10, 20, "G1")};
    const std::vector<io::GestureSegment> pred{seg(5, 15, "G1")};
    const auto r = metrics::segment_iou(gt, pred);
    // claims the earlier one: overlap 5, union 15
    CHECK(r.per_class.at("G1") == doctest::Approx(5.0 / 15.0));
}

TEST_CASE("segment IOU: empty inputs") {
    CHECK(metrics::segment_iou({}, {}).overall == 0.0);
    const auto r = metrics::segment_iou({seg(0, 5, "G1")}, {});
    CHECK(r.per_class.at("G1") == 0.0);
}

TEST_CASE("state variable report") {
    std::vector<ContextState> gt, pred;
    for (const char* c : {"20000", "20000", "00000", "00002"}) gt.push_back(ContextState::from_code(c));
    for (const char* c : {"20000", "00000", "00000", "00002"}) pred.push_back(ContextState::from_code(c));
    const auto r = metrics::state_variable_report(gt, pred);
    // variable 0 observes {2, 0}: value 2 has TP=1 FP=0 FN=1 -> 0.5,
    // value 0 has TP=2 FP=1 FN=0 -> 2/3; mean 0.5833...
    CHECK(r.per_variable[0] == doctest::Approx((0.5 + 2.0 / 3.0) / 2.0));
    // variables 1..3 are all zero everywhere -> perfect
    CHECK(r.per_variable[1] == 1.0);
    CHECK(r.per_variable[2] == 1.0);
    CHECK(r.per_variable[3] == 1.0);
    CHECK(r.per_variable[4] == 1.0);
    double sum = 0.0;
    for (const double v : r.per_variable) sum += v;
    CHECK(r.average == doctest::Approx(sum / 5.0));
    CHECK_THROWS_AS(metrics::state_variable_report(gt, {pred[0]}), ValidationError);
}

TEST_CASE("report tables carry a mean row") {
    std::vector<metrics::GestureRow> rows;
    rows.push_back({"t1", 90.0, 80.0, 0.5});
    rows.push_back({"t2", 70.0, 60.0, 0.25});
    const std::string text = metrics::gesture_report_text(rows);
    CHECK(text.find("Trial") != std::string::npos);
    CHECK(text.find("t1") != std::string::npos);
    CHECK(text.find("Mean") != std::string::npos);
    CHECK(text.find("80.00") != std::string::npos);   // mean accuracy
    CHECK(text.find("70.00") != std::string::npos);   // mean edit score

    const std::string csv = metrics::gesture_report_csv(rows);
    CHECK(csv.find("trial,accuracy,edit_score,segment_iou") != std::string::npos);
    CHECK(csv.find("t1,90.0000,80.0000,0.5000") != std::string::npos);
    CHECK(csv.find("Mean,80.0000,70.0000,0.3750") != std::string::npos);

    std::vector<metrics::ContextRow> crows;
    metrics::ContextRow cr;
    cr.trial = "t1";
    cr.report.per_variable = {1.0, 0.5, 1.0, 0.25, 0.75};
    cr.report.average = 0.7;
    crows.push_back(cr);
    const std::string ctext = metrics::context_report_text(crows);
    CHECK(ctext.find("Left Hold") != std::string::npos);
    CHECK(ctext.find("Needle/Knot") != std::string::npos);
    CHECK(ctext.find("Mean") != std::string::npos);
    const std::string ccsv = metrics::context_report_csv(crows);
    CHECK(ccsv.find("trial,left_hold,left_contact,right_hold,right_contact,needle_knot,avg") !=
          std::string::npos);
    CHECK(ccsv.find("t1,1.0000,0.5000,1.0000,0.2500,0.7500,0.7000") != std::string::npos);
}
