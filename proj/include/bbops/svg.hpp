#ifndef BBOPS_SVG_HPP
#define BBOPS_SVG_HPP

#include <string>
#include <utility>
#include <vector>

namespace bbops {

struct SvgSeries {
    std::string label;
    std::vector<std::pair<double, double>> points;
};

/// Minimal self-contained SVG 1.1 polyline plot; log axes take base-10
/// decade ticks. No external plotting dependency.
struct SvgPlot {
    std::string title;
    std::string xlabel;
    std::string ylabel;
    bool logx = false;
    bool logy = false;
    std::vector<SvgSeries> series;

    std::string render() const;
    void write(const std::string& path) const;
};

}  // namespace bbops

#endif
