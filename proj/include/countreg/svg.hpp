#pragma once

#include <string>
#include <utility>
#include <vector>

namespace countreg::svg {

struct Series {
    std::string name;
    std::vector<std::pair<double, double>> points;
    std::string color = "#1f6fb2";
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool zero_line = false;     // horizontal reference at y = 0
    bool identity_line = false; // y = x reference
    int width = 760;
    int height = 520;
};

// Standalone scatter SVG with axes, ticks, and one circle per point.
std::string scatter(const std::vector<Series>& series, const PlotOptions& opts);

// Grouped vertical bars, one group per label.
std::string grouped_bars(const std::vector<std::string>& labels,
                         const std::vector<Series>& series, const PlotOptions& opts);

} // namespace countreg::svg
