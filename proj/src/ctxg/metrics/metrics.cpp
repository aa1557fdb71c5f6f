#include "ctxg/metrics/metrics.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

namespace ctxg::metrics {

std::vector<std::string> frame_labels(const io::GestureTranscript& t, const std::string& fill) {
    int64_t n = 0;
    for (const auto& s : t.segments) n = std::max(n, s.end);
    std::vector<std::string> out(static_cast<size_t>(n), fill);
    for (const auto& s : t.segments) {
        for (int64_t k = std::max<int64_t>(s.start, 0); k < s.end; ++k) {
            out[static_cast<size_t>(k)] = s.label;
        }
    }
    return out;
}

std::vector<std::string> run_length(const std::vector<std::string>& labels) {
    std::vector<std::string> out;
    for (const auto& l : labels) {
        if (out.empty() || out.back() != l) out.push_back(l);
    }
    return out;
}

double accuracy_pct(const std::vector<std::string>& gt, const std::vector<std::string>& pred) {
    if (gt.size() != pred.size()) {
        throw ValidationError("accuracy: sequence lengths differ (" +
                              std::to_string(gt.size()) + " vs " +
                              std::to_string(pred.size()) + ")");
    }
    if (gt.empty()) return 100.0;
    size_t hits = 0;
    for (size_t i = 0; i < gt.size(); ++i) {
        if (gt[i] == pred[i]) ++hits;
    }
    return 100.0 * static_cast<double>(hits) / static_cast<double>(gt.size());
}

double edit_score(const std::vector<std::string>& gt_runs,
                  const std::vector<std::string>& pred_runs) {
    const size_t n = gt_runs.size();
    const size_t m = pred_runs.size();
    if (n == 0 && m == 0) return 100.0;
    std::vector<size_t> prev(m + 1), cur(m + 1);
    std::iota(prev.begin(), prev.end(), size_t{0});
    for (size_t i = 1; i <= n; ++i) {
        cur[0] = i;
        for (size_t j = 1; j <= m; ++j) {
            const size_t sub = prev[j - 1] + (gt_runs[i - 1] == pred_runs[j - 1] ? 0 : 1);
            cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, sub});
        }
        std::swap(prev, cur);
    }
    const double dist = static_cast<double>(prev[m]);
    const double denom = static_cast<double>(std::max(n, m));
    return (1.0 - dist / denom) * 100.0;
}

SegmentIou segment_iou(const std::vector<io::GestureSegment>& gt,
                       const std::vector<io::GestureSegment>& pred) {
    std::vector<char> claimed(gt.size(), 0);
    std::map<std::string, std::pair<double, int>> acc;  // label -> (iou sum, count)

    for (const auto& p : pred) {
        int best = -1;
        int64_t best_overlap = 0;
        for (size_t j = 0; j < gt.size(); ++j) {
            if (claimed[j] || gt[j].label != p.label) continue;
            const int64_t ov = std::max<int64_t>(
                0, std::min(p.end, gt[j].end) - std::max(p.start, gt[j].start));
            if (ov > best_overlap) {
                best_overlap = ov;
                best = static_cast<int>(j);
            }
        }
        double iou = 0.0;
        if (best >= 0) {
            claimed[static_cast<size_t>(best)] = 1;
            const auto& gseg = gt[static_cast<size_t>(best)];
            const double uni = static_cast<double>((p.end - p.start) + (gseg.end - gseg.start) -
                                                   best_overlap);
            iou = static_cast<double>(best_overlap) / uni;
        }
        auto& slot = acc[p.label];
        slot.first += iou;
        slot.second += 1;
    }

    for (const auto& gseg : gt) {
        if (acc.find(gseg.label) == acc.end()) acc[gseg.label] = {0.0, 1};
    }

    SegmentIou out;
    double sum = 0.0;
    for (const auto& [label, slot] : acc) {
        const double mean = slot.first / static_cast<double>(slot.second);
        out.per_class[label] = mean;
        sum += mean;
    }
    out.overall = acc.empty() ? 0.0 : sum / static_cast<double>(acc.size());
    return out;
}

StateVariableReport state_variable_report(const std::vector<ContextState>& gt,
                                          const std::vector<ContextState>& pred) {
    if (gt.size() != pred.size()) {
        throw ValidationError("state variable report: series lengths differ (" +
                              std::to_string(gt.size()) + " vs " +
                              std::to_string(pred.size()) + ")");
    }
    StateVariableReport rep;
    if (gt.empty()) return rep;
    for (size_t v = 0; v < 5; ++v) {
        int tp[10] = {0};
        int fp[10] = {0};
        int fn[10] = {0};
        bool present[10] = {false};
        for (size_t i = 0; i < gt.size(); ++i) {
            const uint8_t a = gt[i][v];
            const uint8_t b = pred[i][v];
            present[a] = present[b] = true;
            if (a == b) {
                tp[a]++;
            } else {
                fn[a]++;
                fp[b]++;
            }
        }
        double sum = 0.0;
        int count = 0;
        for (int val = 0; val < 10; ++val) {
            if (!present[val]) continue;
            const int denom = tp[val] + fp[val] + fn[val];
            sum += denom > 0 ? static_cast<double>(tp[val]) / denom : 0.0;
            count += 1;
        }
        rep.per_variable[v] = count > 0 ? sum / count : 0.0;
    }
    rep.average = std::accumulate(rep.per_variable.begin(), rep.per_variable.end(), 0.0) / 5.0;
    return rep;
}

namespace {

const char* kContextCsvNames[5] = {"left_hold", "left_contact", "right_hold", "right_contact",
                                   "needle_knot"};

std::string pad(const std::string& s, size_t width) {
    std::string out = s;
    while (out.size() < width) out += ' ';
    return out;
}

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

std::string csv_num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", v);
    return buf;
}

std::string rpad_num(double v, size_t width) {
    std::string s = num(v);
    std::string out;
    while (out.size() + s.size() < width) out += ' ';
    return out + s;
}

} // namespace

std::string gesture_report_text(const std::vector<GestureRow>& rows) {
    size_t tw = 5;  // "Trial"
    for (const auto& r : rows) tw = std::max(tw, r.trial.size());
    tw = std::max(tw, size_t{4});

    std::string out = pad("Trial", tw) + "    Accuracy  Edit Score  Segment IOU\n";
    double acc = 0, edit = 0, iou = 0;
    for (const auto& r : rows) {
        out += pad(r.trial, tw) + "  " + rpad_num(r.accuracy, 10) + "  " + rpad_num(r.edit, 10) +
               "  " + rpad_num(r.iou, 11) + "\n";
        acc += r.accuracy;
        edit += r.edit;
        iou += r.iou;
    }
    if (!rows.empty()) {
        const double n = static_cast<double>(rows.size());
        out += pad("Mean", tw) + "  " + rpad_num(acc / n, 10) + "  " + rpad_num(edit / n, 10) +
               "  " + rpad_num(iou / n, 11) + "\n";
    }
    return out;
}

std::string gesture_report_csv(const std::vector<GestureRow>& rows) {
    std::string out = "trial,accuracy,edit_score,segment_iou\n";
    double acc = 0, edit = 0, iou = 0;
    for (const auto& r : rows) {
        out += r.trial + "," + csv_num(r.accuracy) + "," + csv_num(r.edit) + "," +
               csv_num(r.iou) + "\n";
        acc += r.accuracy;
        edit += r.edit;
        iou += r.iou;
    }
    if (!rows.empty()) {
        const double n = static_cast<double>(rows.size());
        out += "Mean," + csv_num(acc / n) + "," + csv_num(edit / n) + "," + csv_num(iou / n) + "\n";
    }
    return out;
}

std::string context_report_text(const std::vector<ContextRow>& rows) {
    size_t tw = 5;
    for (const auto& r : rows) tw = std::max(tw, r.trial.size());

    std::string out = pad("Trial", tw);
    for (size_t v = 0; v < 5; ++v) {
        out += "  " + std::string(context_variable_name(v));
    }
    out += "  Avg\n";
    std::array<size_t, 5> cw{};
    for (size_t v = 0; v < 5; ++v) cw[v] = std::string(context_variable_name(v)).size();

    std::array<double, 5> sums{};
    double avg_sum = 0;
    for (const auto& r : rows) {
        out += pad(r.trial, tw);
        for (size_t v = 0; v < 5; ++v) {
            out += "  " + rpad_num(r.report.per_variable[v], cw[v]);
            sums[v] += r.report.per_variable[v];
        }
        out += "  " + rpad_num(r.report.average, 4) + "\n";
        avg_sum += r.report.average;
    }
    if (!rows.empty()) {
        const double n = static_cast<double>(rows.size());
        out += pad("Mean", tw);
        for (size_t v = 0; v < 5; ++v) out += "  " + rpad_num(sums[v] / n, cw[v]);
        out += "  " + rpad_num(avg_sum / n, 4) + "\n";
    }
    return out;
}

std::string context_report_csv(const std::vector<ContextRow>& rows) {
    std::string out = "trial";
    for (const auto* name : kContextCsvNames) out += std::string(",") + name;
    out += ",avg\n";
    std::array<double, 5> sums{};
    double avg_sum = 0;
    for (const auto& r : rows) {
        out += r.trial;
        for (size_t v = 0; v < 5; ++v) {
            out += "," + csv_num(r.report.per_variable[v]);
            sums[v] += r.report.per_variable[v];
        }
        out += "," + csv_num(r.report.average) + "\n";
        avg_sum += r.report.average;
    }
    if (!rows.empty()) {
        const double n = static_cast<double>(rows.size());
        out += "Mean";
        for (size_t v = 0; v < 5; ++v) out += "," + csv_num(sums[v] / n);
        out += "," + csv_num(avg_sum / n) + "\n";
    }
    return out;
}

} // namespace ctxg::metrics
