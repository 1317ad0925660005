#pragma once

#include <string>
#include <vector>

namespace nemlab {

struct PlotSeries {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
};

/// Minimal self-contained SVG line plot; log-log axes optional (points with
/// non-positive coordinates are dropped in log mode).
void write_svg_lineplot(const std::string& path, const std::string& title,
                        const std::string& xlabel, const std::string& ylabel,
                        const std::vector<PlotSeries>& series, bool loglog);

}  // namespace nemlab
