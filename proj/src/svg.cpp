#include "mtsp/svg.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include "mtsp/error.hpp"

namespace mtsp {

namespace {

constexpr std::array<const char*, 10> kPalette = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd",
                                                  "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22", "#17becf"};

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    std::string s = buf;
    if (s == "-0.00") s = "0.00";
    return s;
}

/// Linear map from a data interval onto a pixel interval; degenerate spans map to the midpoint.
struct Axis {
    double lo, hi, px_lo, px_hi;

    double operator()(double v) const {
        if (!(hi > lo)) return 0.5 * (px_lo + px_hi);
        return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
    }
};

void check_consistent(const Instance& inst, const Solution& sol) {
    const std::size_t k = inst.k(), n = inst.n();
    if (sol.routes.size() != k) throw InputError("solution has a different number of routes than depots");
    if (sol.assignment.owner.size() != n) throw InputError("solution assignment does not match the task count");
    for (std::size_t g = 0; g < k; ++g) {
        if (sol.routes[g].agent != g) throw InputError("solution routes must be listed in agent order");
        for (GlobalIndex v : sol.routes[g].order)
            if (v < k || v >= k + n) throw InputError("route refers to a node outside the task range");
    }
    for (AgentIndex a : sol.assignment.owner)
        if (a >= k) throw InputError("assignment refers to an unknown agent");
}

}  // namespace

std::string render_routes_svg(const Instance& inst, const Solution& sol) {
    check_consistent(inst, sol);
    const std::size_t k = inst.k();

    Region box;
    if (inst.region) {
        box = *inst.region;
    } else {
        box = {inst.depots[0].x, inst.depots[0].y, inst.depots[0].x, inst.depots[0].y};
        for (const auto* pts : {&inst.depots, &inst.tasks}) {
            for (const Point& p : *pts) {
                box.xmin = std::min(box.xmin, p.x);
                box.xmax = std::max(box.xmax, p.x);
                box.ymin = std::min(box.ymin, p.y);
                box.ymax = std::max(box.ymax, p.y);
            }
        }
    }

    constexpr double size = 640.0, margin = 24.0;
    const Axis ax{box.xmin, box.xmax, margin, size - margin};
    const Axis ay{box.ymin, box.ymax, size - margin, margin};
    const auto at = [&](const Point& p) { return num(ax(p.x)) + " " + num(ay(p.y)); };
    const auto point_of = [&](GlobalIndex v) { return v < k ? inst.depots[v] : inst.tasks[v - k]; };

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"640\" viewBox=\"0 0 640 640\">\n";
    os << "<rect width=\"640\" height=\"640\" fill=\"white\"/>\n";
    for (std::size_t g = 0; g < k; ++g) {
        const char* color = kPalette[g % kPalette.size()];
        os << "<path class=\"route\" data-agent=\"" << g << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"1.5\" d=\"M " << at(inst.depots[g]);
        const auto& order = sol.routes[g].order;
        if (!order.empty()) {
            for (GlobalIndex v : order) os << " L " << at(point_of(v));
            os << " L " << at(inst.depots[g]);
        }
        os << "\"/>\n";
    }
    for (std::size_t i = 0; i < inst.n(); ++i) {
        const Point& p = inst.tasks[i];
        os << "<circle class=\"task\" cx=\"" << num(ax(p.x)) << "\" cy=\"" << num(ay(p.y)) << "\" r=\"3\" fill=\""
           << kPalette[sol.assignment.owner[i] % kPalette.size()] << "\"/>\n";
    }
    for (std::size_t g = 0; g < k; ++g) {
        const double x = ax(inst.depots[g].x), y = ay(inst.depots[g].y);
        os << "<polygon class=\"depot\" points=\"" << num(x) << "," << num(y - 7) << " " << num(x - 6) << ","
           << num(y + 5) << " " << num(x + 6) << "," << num(y + 5) << "\" fill=\"" << kPalette[g % kPalette.size()]
           << "\" stroke=\"black\"/>\n";
    }
    os << "</svg>\n";
    return os.str();
}

std::string render_convergence_svg(const std::vector<TraceEntry>& trace) {
    if (trace.empty()) throw InputError("cannot plot an empty convergence trace");

    constexpr double width = 640.0, panel = 220.0, left = 70.0, right = 20.0, top = 30.0, gap = 40.0;
    const double x_lo = trace.front().iter, x_hi = trace.back().iter;
    const Axis ax{x_lo, x_hi, left, width - right};

    std::ostringstream os;
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"640\" height=\"560\" viewBox=\"0 0 640 560\">\n";
    os << "<rect width=\"640\" height=\"560\" fill=\"white\"/>\n";

    struct Series {
        const char* name;
        const char* label;
        const char* color;
        double TraceEntry::*field;
    };
    const std::array<Series, 2> series = {Series{"max", "max cost", "#d62728", &TraceEntry::max},
                                          Series{"total", "total cost", "#1f77b4", &TraceEntry::total}};

    for (std::size_t s = 0; s < series.size(); ++s) {
        const Series& sr = series[s];
        const double y0 = top + static_cast<double>(s) * (panel + gap);
        double lo = trace.front().*sr.field, hi = lo;
        for (const TraceEntry& t : trace) {
            lo = std::min(lo, t.*sr.field);
            hi = std::max(hi, t.*sr.field);
        }
        const Axis ay{lo, hi, y0 + panel, y0};

        os << "<g class=\"panel\" data-series=\"" << sr.name << "\">\n";
        os << "<rect x=\"" << num(left) << "\" y=\"" << num(y0) << "\" width=\"" << num(width - left - right)
           << "\" height=\"" << num(panel) << "\" fill=\"none\" stroke=\"black\"/>\n";
        os << "<text x=\"" << num(left) << "\" y=\"" << num(y0 - 8) << "\" font-size=\"13\">" << sr.label
           << " vs iteration</text>\n";
        os << "<text x=\"" << num(left - 6) << "\" y=\"" << num(y0 + 10) << "\" font-size=\"10\" text-anchor=\"end\">"
           << num(hi) << "</text>\n";
        os << "<text x=\"" << num(left - 6) << "\" y=\"" << num(y0 + panel) << "\" font-size=\"10\" text-anchor=\"end\">"
           << num(lo) << "</text>\n";
        os << "<text x=\"" << num(left) << "\" y=\"" << num(y0 + panel + 14) << "\" font-size=\"10\">" << trace.front().iter
           << "</text>\n";
        os << "<text x=\"" << num(width - right) << "\" y=\"" << num(y0 + panel + 14)
           << "\" font-size=\"10\" text-anchor=\"end\">" << trace.back().iter << "</text>\n";
        if (trace.size() > 1) {
            os << "<polyline class=\"series\" data-series=\"" << sr.name << "\" fill=\"none\" stroke=\"" << sr.color
               << "\" stroke-width=\"1.5\" points=\"";
            for (std::size_t i = 0; i < trace.size(); ++i) {
                if (i) os << ' ';
                os << num(ax(trace[i].iter)) << ',' << num(ay(trace[i].*sr.field));
            }
            os << "\"/>\n";
        }
        for (const TraceEntry& t : trace) {
            os << "<circle class=\"marker\" data-series=\"" << sr.name << "\" cx=\"" << num(ax(t.iter)) << "\" cy=\""
               << num(ay(t.*sr.field)) << "\" r=\"2.5\" fill=\"" << sr.color << "\"/>\n";
        }
        os << "</g>\n";
    }
    os << "<text x=\"320\" y=\"550\" font-size=\"12\" text-anchor=\"middle\">iteration</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace mtsp
