#pragma once

#include <map>

#include "ctxg/io/transcripts.hpp"
#include "ctxg/types.hpp"

namespace ctxg::metrics {

// Per-frame label sequence for a transcript, padded with `fill` where no
// segment covers a frame. Length is the largest segment end.
std::vector<std::string> frame_labels(const io::GestureTranscript& t,
                                      const std::string& fill = "");

// Collapses consecutive repeats.
std::vector<std::string> run_length(const std::vector<std::string>& labels);

// Fraction of positions agreeing, as a percentage. Sequences must have equal
// length; two empty sequences score 100.
double accuracy_pct(const std::vector<std::string>& gt, const std::vector<std::string>& pred);

// (1 - levenshtein / max(len)) * 100 over run-length collapsed sequences.
double edit_score(const std::vector<std::string>& gt_runs,
                  const std::vector<std::string>& pred_runs);

struct SegmentIou {
    std::map<std::string, double> per_class;  // mean IOU per label
    double overall = 0.0;                     // mean of the per-class means
};

// Greedy matching: predicted segments in temporal order each claim the
// unclaimed same-label ground-truth segment they overlap most (earliest on
// ties); unmatched predictions score 0. A label present only in the ground
// truth contributes a 0 class mean.
SegmentIou segment_iou(const std::vector<io::GestureSegment>& gt,
                       const std::vector<io::GestureSegment>& pred);

struct StateVariableReport {
    std::array<double, 5> per_variable{};  // mean per-value IOU for each slot
    double average = 0.0;
};

// Sample-count IOU per observed value of each state variable, averaged per
// variable. Series must have equal length.
StateVariableReport state_variable_report(const std::vector<ContextState>& gt,
                                          const std::vector<ContextState>& pred);

struct GestureRow {
    std::string trial;
    double accuracy = 0.0;
    double edit = 0.0;
    double iou = 0.0;
};

struct ContextRow {
    std::string trial;
    StateVariableReport report;
};

// Aligned text tables and CSVs, each with a trailing Mean row.
std::string gesture_report_text(const std::vector<GestureRow>& rows);
std::string gesture_report_csv(const std::vector<GestureRow>& rows);
std::string context_report_text(const std::vector<ContextRow>& rows);
std::string context_report_csv(const std::vector<ContextRow>& rows);

} // namespace ctxg::metrics
