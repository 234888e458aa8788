#include "hsens/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "hsens/quantile.hpp"

namespace hsens::svg {

namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};
constexpr double kLeft = 70, kRight = 20, kTop = 40, kBottom = 55;

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string coord(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

struct Frame {
    double x0, x1, y0, y1;
    bool log_x;
    int width, height;

    double px(double x) const {
        const double t = log_x ? (std::log10(x) - std::log10(x0)) / (std::log10(x1) - std::log10(x0))
                               : (x - x0) / (x1 - x0);
        return kLeft + t * (width - kLeft - kRight);
    }
    double py(double y) const { return height - kBottom - (y - y0) / (y1 - y0) * (height - kTop - kBottom); }
};

void pad_range(double& lo, double& hi, bool log_scale) {
    if (lo == hi) {
        const double d = lo == 0.0 ? 1.0 : std::abs(lo) * 0.05;
        lo -= log_scale ? 0.0 : d;
        hi += d;
        if (log_scale) lo /= 1.05;
        return;
    }
    if (!log_scale) {
        const double d = (hi - lo) * 0.04;
        lo -= d;
        hi += d;
    }
}

void open_document(std::ostringstream& os, const PlotOptions& o) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << o.width << "\" height=\""
       << o.height << "\" viewBox=\"0 0 " << o.width << ' ' << o.height << "\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << o.width << "\" height=\"" << o.height << "\" fill=\"white\"/>\n"
       << "<text x=\"" << o.width / 2 << "\" y=\"22\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"15\">" << escape_xml(o.title) << "</text>\n";
}

void draw_axes(std::ostringstream& os, const Frame& f, const PlotOptions& o, bool x_ticks) {
    const double bottom = f.height - kBottom;
    const double right = f.width - kRight;
    os << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << bottom << "\" x2=\"" << right << "\" y2=\"" << bottom << "\"/>\n"
       << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\"" << bottom << "\"/>\n"
       << "</g>\n";
    os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    for (int k = 0; k <= 4; ++k) {
        const double y = f.y0 + (f.y1 - f.y0) * k / 4.0;
        os << "<text x=\"" << kLeft - 6 << "\" y=\"" << coord(f.py(y) + 4) << "\" text-anchor=\"end\">" << num(y)
           << "</text>\n";
    }
    if (x_ticks) {
        for (int k = 0; k <= 4; ++k) {
            const double x = f.log_x ? std::pow(10.0, std::log10(f.x0) + (std::log10(f.x1) - std::log10(f.x0)) * k / 4.0)
                                     : f.x0 + (f.x1 - f.x0) * k / 4.0;
            os << "<text x=\"" << coord(f.px(x)) << "\" y=\"" << bottom + 16 << "\" text-anchor=\"middle\">"
               << num(x) << "</text>\n";
        }
    }
    os << "<text x=\"" << (kLeft + right) / 2 << "\" y=\"" << f.height - 12 << "\" text-anchor=\"middle\">"
       << escape_xml(o.x_label) << "</text>\n"
       << "<text x=\"16\" y=\"" << (kTop + bottom) / 2 << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
       << (kTop + bottom) / 2 << ")\">" << escape_xml(o.y_label) << "</text>\n"
       << "</g>\n";
}

}  // namespace

std::string escape_xml(std::string_view text) {
    std::string out;
    for (char ch : text) {
        switch (ch) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            case '\'': out += "&apos;"; break;
            default: out += ch;
        }
    }
    return out;
}

std::string line_plot(const std::vector<Series>& series, const PlotOptions& options) {
    if (series.empty()) throw std::invalid_argument("line plot needs at least one series");
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size() || s.x.empty()) throw std::invalid_argument("series '" + s.label + "' is malformed");
        for (double x : s.x) {
            if (options.log_x && !(x > 0.0)) throw std::invalid_argument("log axis needs positive x");
            x0 = std::min(x0, x);
            x1 = std::max(x1, x);
        }
        for (double y : s.y) {
            y0 = std::min(y0, y);
            y1 = std::max(y1, y);
        }
    }
    pad_range(x0, x1, options.log_x);
    pad_range(y0, y1, false);
    const Frame f{x0, x1, y0, y1, options.log_x, options.width, options.height};

    std::ostringstream os;
    open_document(os, options);
    draw_axes(os, f, options, true);
    for (std::size_t k = 0; k < series.size(); ++k) {
        const auto& s = series[k];
        const char* color = kPalette[k % std::size(kPalette)];
        os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.2\" points=\"";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            if (i) os << ' ';
            os << coord(f.px(s.x[i])) << ',' << coord(f.py(s.y[i]));
        }
        os << "\"><title>" << escape_xml(s.label) << "</title></polyline>\n";
        if (options.markers) {
            os << "<g fill=\"" << color << "\">";
            for (std::size_t i = 0; i < s.x.size(); ++i) {
                os << "<circle cx=\"" << coord(f.px(s.x[i])) << "\" cy=\"" << coord(f.py(s.y[i])) << "\" r=\"2.5\"/>";
            }
            os << "</g>\n";
        }
    }
    if (series.size() > 1) {
        os << "<g font-family=\"sans-serif\" font-size=\"11\">\n";
        for (std::size_t k = 0; k < series.size(); ++k) {
            const double y = kTop + 14.0 * static_cast<double>(k) + 8;
            os << "<rect x=\"" << options.width - kRight - 150 << "\" y=\"" << y - 8 << "\" width=\"10\" height=\"3\" fill=\""
               << kPalette[k % std::size(kPalette)] << "\"/><text x=\"" << options.width - kRight - 135 << "\" y=\"" << y
               << "\">" << escape_xml(series[k].label) << "</text>\n";
        }
        os << "</g>\n";
    }
    os << "</svg>\n";
    return os.str();
}

double silverman_bandwidth(std::span<const double> values) {
    const std::size_t n = values.size();
    if (n < 2) return 1.0;
    const double mean = std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(n);
    double ss = 0.0;
    for (double v : values) ss += (v - mean) * (v - mean);
    const double sd = std::sqrt(ss / static_cast<double>(n - 1));
    const auto q = quantiles(values, std::vector<double>{0.25, 0.75});
    const double iqr = (q[1] - q[0]) / 1.34;
    double spread = iqr > 0.0 ? std::min(sd, iqr) : sd;
    if (!(spread > 0.0)) spread = std::abs(mean) > 0.0 ? std::abs(mean) * 1e-3 : 1.0;
    return 0.9 * spread * std::pow(static_cast<double>(n), -0.2);
}

std::string violin_plot(const std::vector<ViolinGroup>& groups, const PlotOptions& options) {
    if (groups.empty()) throw std::invalid_argument("violin plot needs at least one group");
    constexpr std::size_t kSteps = 160;

    struct Shape {
        std::vector<double> y, density;
    };
    std::vector<Shape> shapes;
    double y0 = INFINITY, y1 = -INFINITY, peak = 0.0;
    for (const auto& g : groups) {
        if (g.values.empty()) throw std::invalid_argument("violin group '" + g.label + "' is empty");
        const double bw = silverman_bandwidth(g.values);
        const auto [lo_it, hi_it] = std::minmax_element(g.values.begin(), g.values.end());
        const double lo = *lo_it - 3.0 * bw, hi = *hi_it + 3.0 * bw;
        Shape s;
        const double norm = 1.0 / (static_cast<double>(g.values.size()) * bw * std::sqrt(2.0 * std::numbers::pi));
        for (std::size_t i = 0; i <= kSteps; ++i) {
            const double y = lo + (hi - lo) * static_cast<double>(i) / kSteps;
            double d = 0.0;
            for (double v : g.values) {
                const double z = (y - v) / bw;
                d += std::exp(-0.5 * z * z);
            }
            s.y.push_back(y);
            s.density.push_back(d * norm);
            peak = std::max(peak, d * norm);
        }
        y0 = std::min(y0, lo);
        y1 = std::max(y1, hi);
        shapes.push_back(std::move(s));
    }
    pad_range(y0, y1, false);
    const Frame f{0.0, static_cast<double>(groups.size()), y0, y1, false, options.width, options.height};
    const double slot = (options.width - kLeft - kRight) / static_cast<double>(groups.size());
    const double half_width = 0.42 * slot;

    std::ostringstream os;
    open_document(os, options);
    os << "<desc>Mirrored Gaussian kernel density, Silverman bandwidth</desc>\n";
    draw_axes(os, f, options, false);
    for (std::size_t k = 0; k < shapes.size(); ++k) {
        const auto& s = shapes[k];
        const double cx = kLeft + slot * (static_cast<double>(k) + 0.5);
        os << "<polygon fill=\"" << kPalette[k % std::size(kPalette)] << "\" fill-opacity=\"0.55\" stroke=\"black\" "
           << "stroke-width=\"0.8\" points=\"";
        for (std::size_t i = 0; i < s.y.size(); ++i) {
            os << coord(cx + half_width * s.density[i] / peak) << ',' << coord(f.py(s.y[i])) << ' ';
        }
        for (std::size_t i = s.y.size(); i-- > 0;) {
            os << coord(cx - half_width * s.density[i] / peak) << ',' << coord(f.py(s.y[i]));
            if (i) os << ' ';
        }
        os << "\"><title>" << escape_xml(groups[k].label) << "</title></polygon>\n";
        os << "<text x=\"" << coord(cx) << "\" y=\"" << options.height - kBottom + 16
           << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">" << escape_xml(groups[k].label)
           << "</text>\n";
    }
    os << "</svg>\n";
    return os.str();
}

}  // namespace hsens::svg
