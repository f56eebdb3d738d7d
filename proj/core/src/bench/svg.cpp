#include "sortkit/bench/svg.hpp"

#include <algorithm>
#include <cmath>

#include <fmt/format.h>

namespace sortkit::bench {

namespace {

std::string xml_escape(std::string_view s) {
    std::string out;
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

}  // namespace

std::string boxplot_svg(std::size_t array_size, const std::map<std::string, BoxStats>& boxes, std::string_view unit) {
    constexpr double kLeft = 220, kRight = 40, kTop = 40, kRow = 28, kPlotW = 640, kBottom = 50;
    const double height = kTop + kRow * static_cast<double>(std::max<std::size_t>(boxes.size(), 1)) + kBottom;
    const double width = kLeft + kPlotW + kRight;

    double lo = INFINITY, hi = -INFINITY;
    for (const auto& [label, b] : boxes) {
        lo = std::min({lo, b.whisker_lo, b.outliers.empty() ? b.whisker_lo : b.outliers.front()});
        hi = std::max({hi, b.whisker_hi, b.outliers.empty() ? b.whisker_hi : b.outliers.back()});
    }
    if (!std::isfinite(lo)) lo = 0, hi = 1;
    if (hi <= lo) hi = lo + 1;
    const double pad = (hi - lo) * 0.05;
    lo -= pad;
    hi += pad;
    const auto x = [&](double v) { return kLeft + (v - lo) / (hi - lo) * kPlotW; };

    std::string out = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" font-family=\"sans-serif\" "
        "font-size=\"12\">\n",
        width, height);
    out += fmt::format("<text x=\"{:.1f}\" y=\"20\" font-size=\"14\">array size {}</text>\n", kLeft, array_size);
    const double axis_y = height - kBottom + 10;
    out += fmt::format("<g class=\"axes\" stroke=\"black\">\n<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\"/>\n",
                       kLeft, axis_y, kLeft + kPlotW, axis_y);
    out += fmt::format("<line x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\"/>\n</g>\n", kLeft, kTop - 10, kLeft,
                       axis_y);
    for (int t = 0; t <= 4; ++t) {
        const double v = lo + (hi - lo) * t / 4.0;
        out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.4g}</text>\n", x(v), axis_y + 16,
                           v);
    }
    out += fmt::format("<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{}</text>\n", kLeft + kPlotW / 2,
                       axis_y + 34, xml_escape(unit));

    double y = kTop;
    for (const auto& [label, b] : boxes) {
        const double mid = y + kRow / 2;
        out += fmt::format("<g class=\"box\">\n<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{}</text>\n",
                           kLeft - 8, mid + 4, xml_escape(label));
        out += fmt::format(
            "<line class=\"whisker\" x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\"/>\n",
            x(b.whisker_lo), mid, x(b.q1), mid);
        out += fmt::format(
            "<line class=\"whisker\" x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\"/>\n",
            x(b.q3), mid, x(b.whisker_hi), mid);
        out += fmt::format(
            "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{:.1f}\" height=\"{:.1f}\" fill=\"#cde\" stroke=\"black\"/>\n",
            x(b.q1), y + 4, std::max(x(b.q3) - x(b.q1), 1.0), kRow - 8);
        out += fmt::format(
            "<line class=\"median\" x1=\"{:.1f}\" y1=\"{:.1f}\" x2=\"{:.1f}\" y2=\"{:.1f}\" stroke=\"black\" "
            "stroke-width=\"2\"/>\n",
            x(b.median), y + 4, x(b.median), y + kRow - 4);
        for (double o : b.outliers) {
            out += fmt::format("<circle class=\"outlier\" cx=\"{:.1f}\" cy=\"{:.1f}\" r=\"2\"/>\n", x(o), mid);
        }
        out += "</g>\n";
        y += kRow;
    }
    out += "</svg>\n";
    return out;
}

}  // namespace sortkit::bench
