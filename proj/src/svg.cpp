#include "netcomp/svg.hpp"

#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace netcomp {

namespace {

constexpr double kWidth = 800, kHeight = 500;
constexpr double kLeft = 64, kRight = 784, kTop = 24, kBottom = 452;

const char* kColors[3] = {"#1f77b4", "#2ca02c", "#d62728"}; // A, B, U
const char* kNames[3] = {"group A", "group B", "unassigned"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

std::string gnum(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct Frame {
    double x_min, x_max;

    double x(double v) const {
        if (x_max == x_min) return (kLeft + kRight) / 2;
        return kLeft + (v - x_min) / (x_max - x_min) * (kRight - kLeft);
    }
    double y(double frac) const { return kBottom - frac * (kBottom - kTop); }
};

void header(std::ostream& out) {
    out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
        << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n"
        << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
}

void axes(std::ostream& out, const Frame& f, const PlotOptions& opts) {
    out << "<g stroke=\"black\" stroke-width=\"1\">\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(kRight)
        << "\" y2=\"" << num(kBottom) << "\"/>\n"
        << "<line x1=\"" << num(kLeft) << "\" y1=\"" << num(kTop) << "\" x2=\"" << num(kLeft)
        << "\" y2=\"" << num(kBottom) << "\"/>\n</g>\n";
    out << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
    for (int i = 0; i <= 5; ++i) {
        const double frac = i / 5.0;
        const double y = f.y(frac);
        out << "<line x1=\"" << num(kLeft - 4) << "\" y1=\"" << num(y) << "\" x2=\"" << num(kLeft)
            << "\" y2=\"" << num(y) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(kLeft - 8) << "\" y=\"" << num(y + 4)
            << "\" text-anchor=\"end\">" << gnum(frac) << "</text>\n";
        const double xv = f.x_min + frac * (f.x_max - f.x_min);
        const double x = f.x(xv);
        out << "<line x1=\"" << num(x) << "\" y1=\"" << num(kBottom) << "\" x2=\"" << num(x)
            << "\" y2=\"" << num(kBottom + 4) << "\" stroke=\"black\"/>\n";
        out << "<text x=\"" << num(x) << "\" y=\"" << num(kBottom + 18)
            << "\" text-anchor=\"middle\">" << gnum(xv) << "</text>\n";
    }
    out << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"" << num(kHeight - 10)
        << "\" text-anchor=\"middle\">" << opts.x_label << "</text>\n";
    out << "<text x=\"16\" y=\"" << num((kTop + kBottom) / 2)
        << "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " << num((kTop + kBottom) / 2)
        << ")\">fraction</text>\n";
    if (!opts.title.empty())
        out << "<text x=\"" << num((kLeft + kRight) / 2) << "\" y=\"16\" text-anchor=\"middle\">"
            << opts.title << "</text>\n";
    out << "</g>\n";
}

void legend(std::ostream& out) {
    out << "<g font-family=\"sans-serif\" font-size=\"12\">\n";
    for (int gidx = 0; gidx < 3; ++gidx) {
        const double y = kTop + 16 + 16 * gidx;
        out << "<rect x=\"" << num(kRight - 120) << "\" y=\"" << num(y - 9)
            << "\" width=\"10\" height=\"10\" fill=\"" << kColors[gidx] << "\"/>\n";
        out << "<text x=\"" << num(kRight - 106) << "\" y=\"" << num(y) << "\">" << kNames[gidx]
            << "</text>\n";
    }
    out << "</g>\n";
}

void polyline_or_markers(std::ostream& out, const Frame& f, const std::vector<double>& xs,
                         const std::vector<double>& ys, const char* color) {
    if (xs.size() == 1) {
        out << "<circle cx=\"" << num(f.x(xs[0])) << "\" cy=\"" << num(f.y(ys[0]))
            << "\" r=\"4\" fill=\"" << color << "\"/>\n";
        return;
    }
    out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        out << num(f.x(xs[i])) << ',' << num(f.y(ys[i]));
    }
    out << "\"/>\n";
}

void band(std::ostream& out, const Frame& f, const std::vector<double>& xs,
          const std::vector<double>& mean, const std::vector<double>& sd, const char* color) {
    if (xs.size() < 2) return;
    out << "<polygon fill=\"" << color << "\" fill-opacity=\"0.18\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) out << ' ';
        double hi = mean[i] + sd[i];
        if (hi > 1.0) hi = 1.0;
        out << num(f.x(xs[i])) << ',' << num(f.y(hi));
    }
    for (std::size_t i = xs.size(); i-- > 0;) {
        double lo = mean[i] - sd[i];
        if (lo < 0.0) lo = 0.0;
        out << ' ' << num(f.x(xs[i])) << ',' << num(f.y(lo));
    }
    out << "\"/>\n";
}

std::vector<double> x_values(std::size_t count, const PlotOptions& opts) {
    std::vector<double> xs(count);
    for (std::size_t i = 0; i < count; ++i)
        xs[i] = opts.x_offset + opts.x_scale * static_cast<double>(i);
    return xs;
}

} // namespace

void write_trajectory_svg(std::ostream& out, const Trajectory& traj, const PlotOptions& opts) {
    if (traj.counts.empty()) throw std::invalid_argument("empty trajectory");
    const std::vector<double> xs = x_values(traj.steps(), opts);
    const Frame f{xs.front(), xs.back()};
    header(out);
    axes(out, f, opts);
    std::vector<double> ys(traj.steps());
    for (int gidx = 0; gidx < 3; ++gidx) {
        for (std::size_t t = 0; t < traj.steps(); ++t)
            ys[t] = gidx == 0 ? traj.frac_a(t) : gidx == 1 ? traj.frac_b(t) : traj.frac_u(t);
        polyline_or_markers(out, f, xs, ys, kColors[gidx]);
    }
    legend(out);
    out << "</svg>\n";
}

void write_ensemble_svg(std::ostream& out, const EnsembleResult& res, const PlotOptions& opts) {
    if (res.steps.empty()) throw std::invalid_argument("empty ensemble");
    const std::vector<double> xs = x_values(res.steps.size(), opts);
    const Frame f{xs.front(), xs.back()};
    header(out);
    axes(out, f, opts);
    std::vector<double> mean(res.steps.size()), sd(res.steps.size());
    for (int gidx = 0; gidx < 3; ++gidx) {
        for (std::size_t t = 0; t < res.steps.size(); ++t) {
            const StepStats& s = res.steps[t];
            mean[t] = gidx == 0 ? s.mean_a : gidx == 1 ? s.mean_b : s.mean_u;
            sd[t] = gidx == 0 ? s.std_a : gidx == 1 ? s.std_b : s.std_u;
        }
        band(out, f, xs, mean, sd, kColors[gidx]);
        polyline_or_markers(out, f, xs, mean, kColors[gidx]);
    }
    legend(out);
    out << "</svg>\n";
}

} // namespace netcomp
