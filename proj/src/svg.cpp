#include "bbops/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace bbops {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 560;
constexpr int kMarginLeft = 84;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 48;
constexpr int kMarginBottom = 64;

const char* kPalette[] = {"#1f6fb4", "#c23b22", "#2e8b57", "#8a2be2", "#d2691e", "#008b8b"};

std::string fmt(double v) {
    std::ostringstream os;
    os.precision(6);
    os << v;
    return os.str();
}

std::string esc(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

std::vector<double> linear_ticks(double lo, double hi) {
    const double span = hi - lo;
    if (span <= 0)
        return {lo};
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0})
        if (mag * m >= raw) {
            step = mag * m;
            break;
        }
    std::vector<double> ticks;
    for (double v = std::ceil(lo / step) * step; v <= hi + 1e-12 * span; v += step)
        ticks.push_back(v);
    return ticks;
}

std::vector<double> decade_ticks(double lo, double hi) {
    std::vector<double> ticks;
    for (int e = static_cast<int>(std::ceil(lo - 1e-12)); e <= static_cast<int>(std::floor(hi + 1e-12)); ++e)
        ticks.push_back(e);
    if (ticks.empty())
        ticks = {lo, hi};
    return ticks;
}

std::string tick_label(double v, bool log) {
    std::ostringstream os;
    if (log) {
        os << "1e" << static_cast<int>(std::lround(v));
    } else {
        os.precision(4);
        os << v;
    }
    return os.str();
}

}  // namespace

std::string SvgPlot::render() const {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    auto tx = [&](double v) { return logx ? std::log10(v) : v; };
    auto ty = [&](double v) { return logy ? std::log10(v) : v; };
    for (const auto& s : series)
        for (const auto& [px, py] : s.points) {
            if ((logx && px <= 0.0) || (logy && py <= 0.0))
                continue;
            xmin = std::min(xmin, tx(px));
            xmax = std::max(xmax, tx(px));
            ymin = std::min(ymin, ty(py));
            ymax = std::max(ymax, ty(py));
        }
    if (!(xmin <= xmax) || !(ymin <= ymax))
        throw std::invalid_argument("SvgPlot: no drawable points");
    if (xmax == xmin) {
        xmin -= 0.5;
        xmax += 0.5;
    }
    if (ymax == ymin) {
        ymin -= 0.5;
        ymax += 0.5;
    }
    const double plot_w = kWidth - kMarginLeft - kMarginRight;
    const double plot_h = kHeight - kMarginTop - kMarginBottom;
    auto sx = [&](double v) { return kMarginLeft + (tx(v) - xmin) / (xmax - xmin) * plot_w; };
    auto sy = [&](double v) { return kMarginTop + (ymax - ty(v)) / (ymax - ymin) * plot_h; };

    std::ostringstream svg;
    svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kWidth
        << "\" height=\"" << kHeight << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight
        << "\">\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    svg << "<text x=\"" << kWidth / 2 << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"18\">" << esc(title) << "</text>\n";

    // frame
    svg << "<rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop << "\" width=\"" << plot_w
        << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"#333\"/>\n";

    const auto xticks = logx ? decade_ticks(xmin, xmax) : linear_ticks(xmin, xmax);
    for (double t : xticks) {
        const double px = kMarginLeft + (t - xmin) / (xmax - xmin) * plot_w;
        svg << "<line x1=\"" << fmt(px) << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
            << fmt(px) << "\" y2=\"" << kMarginTop + plot_h + 6 << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << fmt(px) << "\" y=\"" << kMarginTop + plot_h + 22
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
            << tick_label(t, logx) << "</text>\n";
    }
    const auto yticks = logy ? decade_ticks(ymin, ymax) : linear_ticks(ymin, ymax);
    for (double t : yticks) {
        const double py = kMarginTop + (ymax - t) / (ymax - ymin) * plot_h;
        svg << "<line x1=\"" << kMarginLeft - 6 << "\" y1=\"" << fmt(py) << "\" x2=\""
            << kMarginLeft << "\" y2=\"" << fmt(py) << "\" stroke=\"#333\"/>\n";
        svg << "<text x=\"" << kMarginLeft - 10 << "\" y=\"" << fmt(py + 4)
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\">"
            << tick_label(t, logy) << "</text>\n";
    }
    svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 16
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\">"
        << esc(xlabel) << "</text>\n";
    svg << "<text x=\"20\" y=\"" << kMarginTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        << "transform=\"rotate(-90 20 " << kMarginTop + plot_h / 2 << ")\">" << esc(ylabel)
        << "</text>\n";

    int color = 0;
    double legend_y = kMarginTop + 16;
    for (const auto& s : series) {
        const char* stroke = kPalette[color % 6];
        std::ostringstream pts;
        for (const auto& [px, py] : s.points) {
            if ((logx && px <= 0.0) || (logy && py <= 0.0))
                continue;
            pts << fmt(sx(px)) << ',' << fmt(sy(py)) << ' ';
        }
        svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"1.8\" points=\""
            << pts.str() << "\"/>\n";
        if (!s.label.empty()) {
            svg << "<text x=\"" << kMarginLeft + plot_w - 8 << "\" y=\"" << fmt(legend_y)
                << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" fill=\""
                << stroke << "\">" << esc(s.label) << "</text>\n";
            legend_y += 16;
        }
        ++color;
    }
    svg << "</svg>\n";
    return svg.str();
}

void SvgPlot::write(const std::string& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    out << render();
}

}  // namespace bbops
