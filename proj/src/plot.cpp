#include "transmon/plot.hpp"

#include "transmon/error.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>

namespace transmon {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 440.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 20.0;
constexpr double kTop = 30.0;
constexpr double kBottom = 60.0;

std::string fixed(double value, int digits = 2) {
    char buffer[64];
    std::snprintf(buffer, sizeof buffer, "%.*f", digits, value);
    return buffer;
}

std::string title_for(NoiseKind kind) {
    switch (kind) {
        case NoiseKind::Charge: return "charge noise";
        case NoiseKind::Flux: return "flux noise";
        case NoiseKind::CriticalCurrent: return "critical-current noise";
    }
    return "";
}

struct Point {
    double x;
    double y;
};

}  // namespace

std::string render_plot(const std::vector<SweepRow>& rows, NoiseKind kind) {
    std::vector<Point> numeric;
    std::vector<Point> overlay;
    for (const SweepRow& row : rows) {
        const auto& columns = row.channel(kind);
        if (!columns) {
            continue;
        }
        if (columns->t2.is_bounded()) {
            numeric.push_back({row.ratio, columns->t2.seconds()});
        }
        if (columns->t2_asymptotic && std::isfinite(*columns->t2_asymptotic) &&
            *columns->t2_asymptotic > 0.0) {
            overlay.push_back({row.ratio, *columns->t2_asymptotic});
        }
    }
    if (numeric.empty()) {
        throw EmptySeries("no bounded " + std::string(to_string(kind)) + " T2 values to plot");
    }

    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo;
    double y_lo = x_lo;
    double y_hi = -x_lo;
    for (const auto* series : {&numeric, &overlay}) {
        for (const Point& p : *series) {
            x_lo = std::min(x_lo, p.x);
            x_hi = std::max(x_hi, p.x);
            y_lo = std::min(y_lo, std::log10(p.y));
            y_hi = std::max(y_hi, std::log10(p.y));
        }
    }
    if (x_hi == x_lo) {
        x_lo -= 0.5;
        x_hi += 0.5;
    }
    const int decade_lo = static_cast<int>(std::floor(y_lo));
    int decade_hi = static_cast<int>(std::ceil(y_hi));
    if (decade_hi == decade_lo) {
        ++decade_hi;
    }
    const int decade_step = std::max(1, (decade_hi - decade_lo + 9) / 10);

    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto sx = [&](double x) { return kLeft + (x - x_lo) / (x_hi - x_lo) * plot_w; };
    auto sy = [&](double y) {
        return kTop + (decade_hi - std::log10(y)) / (decade_hi - decade_lo) * plot_h;
    };
    auto polyline = [&](const std::vector<Point>& series, const char* style) {
        std::string out = "  <polyline fill=\"none\" " + std::string(style) + " points=\"";
        for (std::size_t k = 0; k < series.size(); ++k) {
            if (k > 0) out += ' ';
            out += fixed(sx(series[k].x)) + "," + fixed(sy(series[k].y));
        }
        return out + "\"/>\n";
    };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fixed(kWidth, 0) +
           "\" height=\"" + fixed(kHeight, 0) + "\" viewBox=\"0 0 " + fixed(kWidth, 0) + " " +
           fixed(kHeight, 0) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + fixed(kWidth, 0) + "\" height=\"" +
           fixed(kHeight, 0) + "\" fill=\"white\"/>\n";
    svg += "  <rect x=\"" + fixed(kLeft) + "\" y=\"" + fixed(kTop) + "\" width=\"" + fixed(plot_w) +
           "\" height=\"" + fixed(plot_h) + "\" fill=\"none\" stroke=\"black\"/>\n";

    for (int decade = decade_lo; decade <= decade_hi; decade += decade_step) {
        const double y = sy(std::pow(10.0, decade));
        svg += "  <line x1=\"" + fixed(kLeft - 5) + "\" y1=\"" + fixed(y) + "\" x2=\"" +
               fixed(kLeft) + "\" y2=\"" + fixed(y) + "\" stroke=\"black\"/>\n";
        svg += "  <text x=\"" + fixed(kLeft - 8) + "\" y=\"" + fixed(y + 4) +
               "\" font-size=\"11\" text-anchor=\"end\">1e" + std::to_string(decade) + "</text>\n";
    }
    constexpr int kXTicks = 5;
    for (int k = 0; k <= kXTicks; ++k) {
        const double value = x_lo + (x_hi - x_lo) * k / kXTicks;
        const double x = sx(value);
        svg += "  <line x1=\"" + fixed(x) + "\" y1=\"" + fixed(kTop + plot_h) + "\" x2=\"" +
               fixed(x) + "\" y2=\"" + fixed(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
        svg += "  <text x=\"" + fixed(x) + "\" y=\"" + fixed(kTop + plot_h + 18) +
               "\" font-size=\"11\" text-anchor=\"middle\">" + fixed(value, 1) + "</text>\n";
    }

    svg += "  <text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"" + fixed(kHeight - 15) +
           "\" font-size=\"13\" text-anchor=\"middle\">EJ/Ec</text>\n";
    svg += "  <text x=\"18\" y=\"" + fixed(kTop + plot_h / 2) +
           "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 18 " +
           fixed(kTop + plot_h / 2) + ")\">T2 (s), " + title_for(kind) + "</text>\n";
    svg += "  <text x=\"" + fixed(kLeft + plot_w / 2) + "\" y=\"20\" font-size=\"14\" " +
           "text-anchor=\"middle\">Dephasing time due to " + title_for(kind) + "</text>\n";

    svg += polyline(numeric, "stroke=\"#1f4e9c\" stroke-width=\"2\"");
    if (!overlay.empty()) {
        svg += polyline(overlay, "stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"6 4\"");
    }
    svg += "</svg>\n";
    return svg;
}

void emit_plot(const std::vector<SweepRow>& rows, NoiseKind kind,
               const std::filesystem::path& destination) {
    const std::string svg = render_plot(rows, kind);
    std::ofstream file(destination, std::ios::binary | std::ios::trunc);
    if (!file) {
        throw IoError("cannot open " + destination.string() + " for writing");
    }
    file.write(svg.data(), static_cast<std::streamsize>(svg.size()));
    if (!file) {
        throw IoError("failed to write " + destination.string());
    }
}

}  // namespace transmon
