#include "nemlab/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <stdexcept>

namespace nemlab {
namespace {

const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                         "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

}  // namespace

void write_svg_lineplot(const std::string& path, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel,
                        const std::vector<PlotSeries>& series, bool loglog) {
    const int W = 720, H = 480, ml = 70, mr = 20, mt = 40, mb = 50;
    double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;

    auto tx = [&](double v) { return loglog ? std::log10(v) : v; };
    for (const auto& s : series) {
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (loglog && (s.x[k] <= 0.0 || s.y[k] <= 0.0)) continue;
            xmin = std::min(xmin, tx(s.x[k]));
            xmax = std::max(xmax, tx(s.x[k]));
            ymin = std::min(ymin, tx(s.y[k]));
            ymax = std::max(ymax, tx(s.y[k]));
        }
    }
    if (xmin > xmax) { xmin = 0.0; xmax = 1.0; }
    if (ymin > ymax) { ymin = 0.0; ymax = 1.0; }
    if (xmax - xmin < 1e-12) { xmax += 0.5; xmin -= 0.5; }
    if (ymax - ymin < 1e-12) { ymax += 0.5; ymin -= 0.5; }

    auto px = [&](double v) { return ml + (tx(v) - xmin) / (xmax - xmin) * (W - ml - mr); };
    auto py = [&](double v) { return H - mb - (tx(v) - ymin) / (ymax - ymin) * (H - mt - mb); };

    std::ofstream os(path);
    if (!os) throw std::runtime_error("svg: cannot open " + path);
    os << std::setprecision(8);
    os << "<svg xmlns='http://www.w3.org/2000/svg' width='" << W << "' height='" << H << "'>\n";
    os << "<rect width='100%' height='100%' fill='white'/>\n";
    os << "<text x='" << W / 2 << "' y='20' text-anchor='middle' font-size='15'>" << title
       << "</text>\n";
    os << "<text x='" << W / 2 << "' y='" << H - 10 << "' text-anchor='middle' font-size='12'>"
       << xlabel << (loglog ? " (log10)" : "") << "</text>\n";
    os << "<text x='15' y='" << H / 2 << "' text-anchor='middle' font-size='12' transform='rotate(-90 15 "
       << H / 2 << ")'>" << ylabel << (loglog ? " (log10)" : "") << "</text>\n";
    os << "<rect x='" << ml << "' y='" << mt << "' width='" << W - ml - mr << "' height='"
       << H - mt - mb << "' fill='none' stroke='black'/>\n";

    // axis ticks
    for (int k = 0; k <= 4; ++k) {
        double fx = xmin + (xmax - xmin) * k / 4.0;
        double fy = ymin + (ymax - ymin) * k / 4.0;
        double sx = ml + double(W - ml - mr) * k / 4.0;
        double sy = H - mb - double(H - mt - mb) * k / 4.0;
        os << "<text x='" << sx << "' y='" << H - mb + 16
           << "' text-anchor='middle' font-size='10'>" << std::setprecision(3) << fx
           << "</text>\n";
        os << "<text x='" << ml - 6 << "' y='" << sy + 3
           << "' text-anchor='end' font-size='10'>" << fy << "</text>\n"
           << std::setprecision(8);
    }

    int ci = 0;
    for (const auto& s : series) {
        const char* color = kColors[ci % 8];
        os << "<polyline fill='none' stroke='" << color << "' stroke-width='1.5' points='";
        for (std::size_t k = 0; k < s.x.size(); ++k) {
            if (loglog && (s.x[k] <= 0.0 || s.y[k] <= 0.0)) continue;
            os << px(s.x[k]) << "," << py(s.y[k]) << " ";
        }
        os << "'/>\n";
        os << "<text x='" << W - mr - 8 << "' y='" << mt + 16 + 14 * ci
           << "' text-anchor='end' font-size='11' fill='" << color << "'>" << s.name
           << "</text>\n";
        ++ci;
    }
    os << "</svg>\n";
}

}  // namespace nemlab
