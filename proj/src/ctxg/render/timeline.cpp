#include "ctxg/render/timeline.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

namespace ctxg::render {

namespace {

const char* kPalette[] = {
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948",
    "#b07aa1", "#ff9da7", "#9c755f", "#bab0ac", "#1f77b4", "#8c564b",
    "#2ca02c", "#d62728", "#9467bd", "#17becf",
};
constexpr size_t kPaletteSize = sizeof(kPalette) / sizeof(kPalette[0]);

std::string xml_escape(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%.2f", v);
    return buf;
}

double tick_step(double span) {
    static const double steps[] = {0.1, 0.2, 0.5, 1, 2, 5, 10, 15, 30, 60, 120, 300, 600, 1800};
    for (double s : steps) {
        if (span / s <= 12.0) return s;
    }
    return 3600.0;
}

} // namespace

std::vector<Band> context_bands(const io::ContextTranscript& t) {
    std::vector<Band> bands(5);
    const int64_t n = static_cast<int64_t>(t.samples.size());
    for (size_t v = 0; v < 5; ++v) {
        bands[v].name = context_variable_name(static_cast<int>(v));
        bands[v].track.rate_hz = t.rate_hz;
        int64_t run = 0;
        for (int64_t k = 1; k <= n; ++k) {
            if (k == n || t.samples[static_cast<size_t>(k)][v] !=
                              t.samples[static_cast<size_t>(run)][v]) {
                bands[v].track.segments.push_back(
                    {run, k, std::string(1, char('0' + t.samples[static_cast<size_t>(run)][v]))});
                run = k;
            }
        }
    }
    return bands;
}

std::string timeline_svg(const std::vector<Band>& bands) {
    const double label_w = 130, margin = 12, band_h = 26, band_gap = 8, axis_h = 26;
    const double plot_w = 860;

    double max_t = 0.0;
    for (const auto& b : bands) {
        const double rate = b.track.rate_hz > 0 ? b.track.rate_hz : 1.0;
        for (const auto& s : b.track.segments) {
            max_t = std::max(max_t, static_cast<double>(s.end) / rate);
        }
    }
    if (max_t <= 0.0) max_t = 1.0;

    const double width = margin * 2 + label_w + plot_w;
    const double height = margin * 2 + bands.size() * (band_h + band_gap) + axis_h;
    const double scale = plot_w / max_t;

    std::map<std::string, size_t> color_of;
    std::string out;
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%s\" height=\"%s\" "
                  "viewBox=\"0 0 %s %s\" font-family=\"sans-serif\" font-size=\"12\">\n",
                  fmt(width).c_str(), fmt(height).c_str(), fmt(width).c_str(),
                  fmt(height).c_str());
    out += buf;
    out += "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    for (size_t i = 0; i < bands.size(); ++i) {
        const Band& b = bands[i];
        const double rate = b.track.rate_hz > 0 ? b.track.rate_hz : 1.0;
        const double y = margin + static_cast<double>(i) * (band_h + band_gap);
        std::snprintf(buf, sizeof(buf),
                      "<text x=\"%s\" y=\"%s\" text-anchor=\"end\">%s</text>\n",
                      fmt(margin + label_w - 8).c_str(), fmt(y + band_h * 0.5 + 4).c_str(),
                      xml_escape(b.name).c_str());
        out += buf;
        for (const auto& s : b.track.segments) {
            auto ins = color_of.emplace(s.label, color_of.size());
            const char* color = kPalette[ins.first->second % kPaletteSize];
            const double x0 = margin + label_w + static_cast<double>(s.start) / rate * scale;
            const double w = (static_cast<double>(s.end - s.start) / rate) * scale;
            std::snprintf(buf, sizeof(buf),
                          "<rect x=\"%s\" y=\"%s\" width=\"%s\" height=\"%s\" fill=\"%s\">"
                          "<title>%s [%lld, %lld)</title></rect>\n",
                          fmt(x0).c_str(), fmt(y).c_str(), fmt(w).c_str(), fmt(band_h).c_str(),
                          color, xml_escape(s.label).c_str(), static_cast<long long>(s.start),
                          static_cast<long long>(s.end));
            out += buf;
            if (w > 26.0) {
                std::snprintf(buf, sizeof(buf),
                              "<text x=\"%s\" y=\"%s\" text-anchor=\"middle\" "
                              "fill=\"#ffffff\">%s</text>\n",
                              fmt(x0 + w * 0.5).c_str(), fmt(y + band_h * 0.5 + 4).c_str(),
                              xml_escape(s.label).c_str());
                out += buf;
            }
        }
    }

    const double axis_y = margin + bands.size() * (band_h + band_gap) + 4;
    std::snprintf(buf, sizeof(buf),
                  "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"#333333\"/>\n",
                  fmt(margin + label_w).c_str(), fmt(axis_y).c_str(),
                  fmt(margin + label_w + plot_w).c_str(), fmt(axis_y).c_str());
    out += buf;
    const double step = tick_step(max_t);
    for (double t = 0.0; t <= max_t + 1e-9; t += step) {
        const double x = margin + label_w + t * scale;
        std::snprintf(buf, sizeof(buf),
                      "<line x1=\"%s\" y1=\"%s\" x2=\"%s\" y2=\"%s\" stroke=\"#333333\"/>\n"
                      "<text x=\"%s\" y=\"%s\" text-anchor=\"middle\">%ss</text>\n",
                      fmt(x).c_str(), fmt(axis_y).c_str(), fmt(x).c_str(), fmt(axis_y + 5).c_str(),
                      fmt(x).c_str(), fmt(axis_y + 18).c_str(), fmt(t).c_str());
        out += buf;
    }
    out += "</svg>\n";
    return out;
}

} // namespace ctxg::render
