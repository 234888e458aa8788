#pragma once

// Minimal SVG 1.1 figure writer: line plots (trace plots, sensitivity
// curves, progressive SI) and violin plots of deviance draws.

#include <span>
#include <string>
#include <vector>

namespace hsens::svg {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

struct PlotOptions {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool markers = false;
    int width = 720;
    int height = 440;
};

// One <polyline> per series.
std::string line_plot(const std::vector<Series>& series, const PlotOptions& options);

struct ViolinGroup {
    std::string label;
    std::vector<double> values;
};

// 0.9 * min(sd, IQR / 1.34) * n^(-1/5).
double silverman_bandwidth(std::span<const double> values);

// One mirrored Gaussian-kernel density <polygon> per group.
std::string violin_plot(const std::vector<ViolinGroup>& groups, const PlotOptions& options);

std::string escape_xml(std::string_view text);

}  // namespace hsens::svg
