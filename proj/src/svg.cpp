#include "countreg/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace countreg::svg {

namespace {

constexpr int kMarginLeft = 72;
constexpr int kMarginRight = 24;
constexpr int kMarginTop = 48;
constexpr int kMarginBottom = 56;

std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Axis {
    double lo = 0.0, hi = 1.0;
    std::vector<double> ticks;
};

Axis make_axis(double lo, double hi) {
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double pad = 0.05 * (hi - lo);
    lo -= pad;
    hi += pad;
    const double raw_step = (hi - lo) / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw_step)));
    double step = mag;
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (mag * m >= raw_step) {
            step = mag * m;
            break;
        }
    }
    Axis axis;
    axis.lo = lo;
    axis.hi = hi;
    for (double t = std::ceil(lo / step) * step; t <= hi + 1e-12 * step; t += step) {
        axis.ticks.push_back(std::fabs(t) < step * 1e-9 ? 0.0 : t);
    }
    return axis;
}

class Canvas {
public:
    Canvas(const PlotOptions& opts, const Axis& x, const Axis& y)
        : opts_(opts), x_(x), y_(y) {
        body_ << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << opts.width
              << "\" height=\"" << opts.height << "\" viewBox=\"0 0 " << opts.width << " "
              << opts.height << "\">\n";
        body_ << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
        body_ << "<text x=\"" << opts.width / 2 << "\" y=\"24\" text-anchor=\"middle\" "
              << "font-family=\"sans-serif\" font-size=\"15\">" << escape(opts.title)
              << "</text>\n";
    }

    double px(double v) const {
        const double w = opts_.width - kMarginLeft - kMarginRight;
        return kMarginLeft + (v - x_.lo) / (x_.hi - x_.lo) * w;
    }
    double py(double v) const {
        const double h = opts_.height - kMarginTop - kMarginBottom;
        return kMarginTop + (y_.hi - v) / (y_.hi - y_.lo) * h;
    }

    void axes() {
        const double x0 = kMarginLeft, x1 = opts_.width - kMarginRight;
        const double y0 = opts_.height - kMarginBottom, y1 = kMarginTop;
        body_ << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\""
              << y0 << "\" stroke=\"black\"/>\n";
        body_ << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\""
              << y1 << "\" stroke=\"black\"/>\n";
        for (double t : x_.ticks) {
            const double x = px(t);
            body_ << "<line x1=\"" << num(x) << "\" y1=\"" << y0 << "\" x2=\"" << num(x)
                  << "\" y2=\"" << y0 + 5 << "\" stroke=\"black\"/>\n";
            body_ << "<text x=\"" << num(x) << "\" y=\"" << y0 + 20
                  << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
                  << num(t) << "</text>\n";
        }
        for (double t : y_.ticks) {
            const double y = py(t);
            body_ << "<line x1=\"" << x0 - 5 << "\" y1=\"" << num(y) << "\" x2=\"" << x0
                  << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
            body_ << "<text x=\"" << x0 - 8 << "\" y=\"" << num(y + 4)
                  << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
                  << num(t) << "</text>\n";
        }
        body_ << "<text x=\"" << (x0 + x1) / 2 << "\" y=\"" << opts_.height - 12
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
              << escape(opts_.x_label) << "</text>\n";
        body_ << "<text x=\"18\" y=\"" << (y0 + y1) / 2
              << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\" "
              << "transform=\"rotate(-90 18 " << (y0 + y1) / 2 << ")\">"
              << escape(opts_.y_label) << "</text>\n";
    }

    void reference_lines() {
        if (opts_.zero_line && y_.lo < 0.0 && y_.hi > 0.0) {
            body_ << "<line x1=\"" << kMarginLeft << "\" y1=\"" << num(py(0.0)) << "\" x2=\""
                  << opts_.width - kMarginRight << "\" y2=\"" << num(py(0.0))
                  << "\" stroke=\"#999999\" stroke-dasharray=\"5,4\"/>\n";
        }
        if (opts_.identity_line) {
            const double lo = std::max(x_.lo, y_.lo);
            const double hi = std::min(x_.hi, y_.hi);
            if (hi > lo) {
                body_ << "<line x1=\"" << num(px(lo)) << "\" y1=\"" << num(py(lo))
                      << "\" x2=\"" << num(px(hi)) << "\" y2=\"" << num(py(hi))
                      << "\" stroke=\"#999999\" stroke-dasharray=\"5,4\"/>\n";
            }
        }
    }

    void circle(double x, double y, const std::string& color) {
        body_ << "<circle cx=\"" << num(px(x)) << "\" cy=\"" << num(py(y))
              << "\" r=\"2.5\" fill=\"" << color << "\" fill-opacity=\"0.65\"/>\n";
    }

    void rect(double x, double y, double w, double h, const std::string& color) {
        body_ << "<rect x=\"" << num(x) << "\" y=\"" << num(y) << "\" width=\"" << num(w)
              << "\" height=\"" << num(h) << "\" fill=\"" << color << "\"/>\n";
    }

    std::ostringstream& raw() { return body_; }

    std::string finish() {
        body_ << "</svg>\n";
        return body_.str();
    }

private:
    PlotOptions opts_;
    Axis x_, y_;
    std::ostringstream body_;
};

} // namespace

std::string scatter(const std::vector<Series>& series, const PlotOptions& opts) {
    double xlo = 0.0, xhi = 1.0, ylo = 0.0, yhi = 1.0;
    bool first = true;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) {
            if (first) {
                xlo = xhi = x;
                ylo = yhi = y;
                first = false;
            }
            xlo = std::min(xlo, x);
            xhi = std::max(xhi, x);
            ylo = std::min(ylo, y);
            yhi = std::max(yhi, y);
        }
    }
    Canvas canvas(opts, make_axis(xlo, xhi), make_axis(ylo, yhi));
    canvas.axes();
    canvas.reference_lines();
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) canvas.circle(x, y, s.color);
    }
    return canvas.finish();
}

std::string grouped_bars(const std::vector<std::string>& labels,
                         const std::vector<Series>& series, const PlotOptions& opts) {
    double hi = 0.0;
    for (const auto& s : series) {
        for (const auto& [x, y] : s.points) hi = std::max(hi, y);
    }
    Axis y_axis = make_axis(0.0, hi);
    y_axis.lo = 0.0;
    Axis x_axis; // label positions, handled manually
    x_axis.lo = 0.0;
    x_axis.hi = static_cast<double>(labels.size());
    Canvas canvas(opts, x_axis, y_axis);

    const double x0 = kMarginLeft;
    const double plot_w = opts.width - kMarginLeft - kMarginRight;
    const double y_base = opts.height - kMarginBottom;
    const double group_w = plot_w / std::max<std::size_t>(1, labels.size());
    const double bar_w = group_w * 0.8 / std::max<std::size_t>(1, series.size());

    // Y axis + ticks only; the x axis carries the category labels.
    canvas.raw() << "<line x1=\"" << x0 << "\" y1=\"" << y_base << "\" x2=\""
                 << opts.width - kMarginRight << "\" y2=\"" << y_base
                 << "\" stroke=\"black\"/>\n";
    canvas.raw() << "<line x1=\"" << x0 << "\" y1=\"" << y_base << "\" x2=\"" << x0
                 << "\" y2=\"" << kMarginTop << "\" stroke=\"black\"/>\n";
    for (double t : y_axis.ticks) {
        const double y = canvas.py(t);
        canvas.raw() << "<line x1=\"" << x0 - 5 << "\" y1=\"" << num(y) << "\" x2=\"" << x0
                     << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
        canvas.raw() << "<text x=\"" << x0 - 8 << "\" y=\"" << num(y + 4)
                     << "\" text-anchor=\"end\" font-family=\"sans-serif\" "
                     << "font-size=\"11\">" << num(t) << "</text>\n";
    }
    for (std::size_t i = 0; i < labels.size(); ++i) {
        const double cx = x0 + (static_cast<double>(i) + 0.5) * group_w;
        canvas.raw() << "<text x=\"" << num(cx) << "\" y=\"" << y_base + 20
                     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
                     << "font-size=\"11\">" << escape(labels[i]) << "</text>\n";
        for (std::size_t s = 0; s < series.size(); ++s) {
            if (i >= series[s].points.size()) continue;
            const double v = series[s].points[i].second;
            const double top = canvas.py(v);
            const double left = cx - 0.4 * group_w + static_cast<double>(s) * bar_w;
            canvas.rect(left, top, bar_w, y_base - top, series[s].color);
        }
    }
    // Legend
    double lx = static_cast<double>(opts.width - kMarginRight - 140);
    double ly = kMarginTop + 4.0;
    for (const auto& s : series) {
        canvas.rect(lx, ly - 9, 10, 10, s.color);
        canvas.raw() << "<text x=\"" << num(lx + 14) << "\" y=\"" << num(ly)
                     << "\" font-family=\"sans-serif\" font-size=\"11\">" << escape(s.name)
                     << "</text>\n";
        ly += 16;
    }
    canvas.raw() << "<text x=\"" << (x0 + opts.width - kMarginRight) / 2 << "\" y=\""
                 << opts.height - 12
                 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"13\">"
                 << escape(opts.x_label) << "</text>\n";
    return canvas.finish();
}

} // namespace countreg::svg
