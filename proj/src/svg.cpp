#include "trigbn/svg.hpp"

#include <algorithm>

namespace trigbn {

namespace {

constexpr int kScale = 40;
constexpr int kMargin = 60;

const char* fill_of(RegimeTag tag) {
    switch (tag) {
    case RegimeTag::Theorem2: return "#d62728";
    case RegimeTag::Theorem1Strict: return "#2ca02c";
    case RegimeTag::Boundary: return "#1f77b4";
    }
    return "#000000";
}

} // namespace

std::string region_svg(const CurveParams& params, const std::vector<RegionPoint>& points) {
    const int d_max = params.g;               // axis reaches the excluded d = g
    const int r_max = (params.g - 2) / 2 + 1; // r never exceeds m <= (g-2)/2
    const int width = 2 * kMargin + d_max * kScale;
    const int height = 2 * kMargin + r_max * kScale;

    auto x_of = [&](double d) { return kMargin + d * kScale; };
    auto y_of = [&](double r) { return height - kMargin - r * kScale; };
    // one fixed decimal keeps the output byte-stable; coordinates are
    // always positive here
    auto num = [](double v) {
        const long long tenths = static_cast<long long>(v * 10 + 0.5);
        return std::to_string(tenths / 10) + "." + std::to_string(tenths % 10);
    };

    std::string svg;
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(width) +
           "\" height=\"" + std::to_string(height) + "\" viewBox=\"0 0 " +
           std::to_string(width) + " " + std::to_string(height) + "\">\n";
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg += "<text x=\"" + num(kMargin) + "\" y=\"" + num(kMargin / 2.0) +
           "\" font-family=\"monospace\" font-size=\"14\">admissible (d,r) for g=" +
           std::to_string(params.g) + ", m=" + std::to_string(params.m) + "</text>\n";

    // axes
    svg += "<line x1=\"" + num(x_of(0)) + "\" y1=\"" + num(y_of(0)) + "\" x2=\"" +
           num(x_of(d_max)) + "\" y2=\"" + num(y_of(0)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    svg += "<line x1=\"" + num(x_of(0)) + "\" y1=\"" + num(y_of(0)) + "\" x2=\"" +
           num(x_of(0)) + "\" y2=\"" + num(y_of(r_max)) +
           "\" stroke=\"black\" stroke-width=\"1\"/>\n";
    for (int d = 0; d <= d_max; ++d) {
        svg += "<line x1=\"" + num(x_of(d)) + "\" y1=\"" + num(y_of(0) - 3) + "\" x2=\"" +
               num(x_of(d)) + "\" y2=\"" + num(y_of(0) + 3) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x_of(d) - 4) + "\" y=\"" + num(y_of(0) + 18) +
               "\" font-family=\"monospace\" font-size=\"10\">" + std::to_string(d) +
               "</text>\n";
    }
    for (int r = 0; r <= r_max; ++r) {
        svg += "<line x1=\"" + num(x_of(0) - 3) + "\" y1=\"" + num(y_of(r)) + "\" x2=\"" +
               num(x_of(0) + 3) + "\" y2=\"" + num(y_of(r)) + "\" stroke=\"black\"/>\n";
        svg += "<text x=\"" + num(x_of(0) - 22) + "\" y=\"" + num(y_of(r) + 4) +
               "\" font-family=\"monospace\" font-size=\"10\">" + std::to_string(r) +
               "</text>\n";
    }
    svg += "<text x=\"" + num(x_of(d_max) + 8) + "\" y=\"" + num(y_of(0) + 4) +
           "\" font-family=\"monospace\" font-size=\"12\">d</text>\n";
    svg += "<text x=\"" + num(x_of(0) - 22) + "\" y=\"" + num(y_of(r_max) - 8) +
           "\" font-family=\"monospace\" font-size=\"12\">r</text>\n";

    // the segment line d = g - m + r - 1, clipped to the viewport
    {
        const double d0 = params.g - params.m - 1; // r = 0
        double r_top = r_max;
        if (d0 + r_top > d_max) r_top = d_max - d0;
        if (r_top > 0) {
            svg += "<line x1=\"" + num(x_of(d0)) + "\" y1=\"" + num(y_of(0)) + "\" x2=\"" +
                   num(x_of(d0 + r_top)) + "\" y2=\"" + num(y_of(r_top)) +
                   "\" stroke=\"#888888\" stroke-width=\"1\" stroke-dasharray=\"4,3\"/>\n";
        }
    }

    for (const auto& pt : points) {
        svg += "<circle cx=\"" + num(x_of(pt.d)) + "\" cy=\"" + num(y_of(pt.r)) +
               "\" r=\"5.0\" fill=\"" + fill_of(pt.tag) + "\"/>\n";
    }

    // legend
    const std::pair<RegimeTag, const char*> legend[] = {
        {RegimeTag::Theorem2, "theorem2 (1 base point)"},
        {RegimeTag::Theorem1Strict, "theorem1-strict"},
        {RegimeTag::Boundary, "boundary (m = d-2r-1)"},
    };
    int row = 0;
    for (const auto& [tag, text] : legend) {
        const double ly = kMargin + 16 + 16 * row;
        svg += "<rect x=\"" + num(width - kMargin - 180) + "\" y=\"" + num(ly - 9) +
               "\" width=\"10.0\" height=\"10.0\" fill=\"" + std::string(fill_of(tag)) +
               "\"/>\n";
        svg += "<text x=\"" + num(width - kMargin - 165) + "\" y=\"" + num(ly) +
               "\" font-family=\"monospace\" font-size=\"11\">" + text + "</text>\n";
        ++row;
    }

    svg += "</svg>\n";
    return svg;
}

} // namespace trigbn
