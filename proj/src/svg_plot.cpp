#include "oloid/svg_plot.hpp"

#include <array>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace oloid::plot {

namespace {

constexpr double kSize = 640.0;
constexpr double kMargin = 40.0;
constexpr std::array<const char*, 8> kPalette{"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct P2 {
    double u, v;
};

std::string fmt(const char* format, double a, double b) {
    const int size = std::snprintf(nullptr, 0, format, a, b);
    std::string out(static_cast<std::size_t>(size), '\0');
    std::snprintf(out.data(), out.size() + 1, format, a, b);
    return out;
}

std::string num(double v) {
    char buf[512];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::optional<P2> project(const sampling::Row& r, Projection p) {
    if (p == Projection::Plane) {
        if (r.coords.size() != 2) return std::nullopt;
        return P2{r.coords[0], r.coords[1]};
    }
    if (r.coords.size() != 3) return std::nullopt;
    switch (p) {
        case Projection::X: return P2{r.coords[1], r.coords[2]};
        case Projection::Y: return P2{r.coords[0], r.coords[2]};
        default: return P2{r.coords[0], r.coords[1]};
    }
}

// Liang-Barsky clipping of the segment a-b; false when nothing is visible.
bool clip(P2& a, P2& b, const Window& w) {
    double t0 = 0.0, t1 = 1.0;
    const double du = b.u - a.u, dv = b.v - a.v;
    const std::array<double, 4> p{-du, du, -dv, dv};
    const std::array<double, 4> q{a.u - w.umin, w.umax - a.u, a.v - w.vmin, w.vmax - a.v};
    for (std::size_t i = 0; i < 4; ++i) {
        if (p[i] == 0.0) {
            if (q[i] < 0.0) return false;
            continue;
        }
        const double r = q[i] / p[i];
        if (p[i] < 0.0) {
            if (r > t1) return false;
            t0 = std::max(t0, r);
        } else {
            if (r < t0) return false;
            t1 = std::min(t1, r);
        }
    }
    const P2 a0 = a;
    a = {a0.u + t0 * du, a0.v + t0 * dv};
    b = {a0.u + t1 * du, a0.v + t1 * dv};
    return true;
}

class Canvas {
public:
    explicit Canvas(const Window& w) : w_(w) {
        const double span = kSize - 2.0 * kMargin;
        scale_ = std::min(span / (w.umax - w.umin), span / (w.vmax - w.vmin));
        ou_ = kMargin + 0.5 * (span - scale_ * (w.umax - w.umin));
        ov_ = kMargin + 0.5 * (span - scale_ * (w.vmax - w.vmin));
    }
    double px(double u) const { return ou_ + (u - w_.umin) * scale_; }
    double py(double v) const { return kSize - ov_ - (v - w_.vmin) * scale_; }
    std::string point(const P2& p) const { return fmt("%.3f,%.3f", px(p.u), py(p.v)); }

private:
    Window w_;
    double scale_, ou_, ov_;
};

std::vector<std::vector<P2>> polylines(const std::vector<sampling::Row>& rows, Projection proj, const Window& w) {
    std::vector<std::vector<P2>> out;
    std::optional<P2> prev;
    bool open = false;
    for (const auto& r : rows) {
        const auto cur = r.is_gap() ? std::nullopt : project(r, proj);
        if (!cur) {
            prev.reset();
            open = false;
            continue;
        }
        if (prev) {
            P2 a = *prev, b = *cur;
            if (clip(a, b, w)) {
                const bool continues = open && a.u == prev->u && a.v == prev->v;
                if (!continues) out.push_back({a});
                out.back().push_back(b);
                open = b.u == cur->u && b.v == cur->v;
            } else {
                open = false;
            }
        }
        prev = cur;
    }
    return out;
}

std::array<const char*, 2> axis_names(Projection p) {
    switch (p) {
        case Projection::X: return {"y", "z"};
        case Projection::Y: return {"x", "z"};
        case Projection::Z: return {"x", "y"};
        default: return {"xi", "eta"};
    }
}

std::optional<double> to_double(std::string_view s) {
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
    return v;
}

}  // namespace

std::optional<Projection> parse_projection(std::string_view text) {
    if (text == "X" || text == "x") return Projection::X;
    if (text == "Y" || text == "y") return Projection::Y;
    if (text == "Z" || text == "z") return Projection::Z;
    if (text == "plane") return Projection::Plane;
    return std::nullopt;
}

std::optional<Window> parse_window(std::string_view text) {
    std::vector<double> v;
    std::size_t start = 0;
    while (start <= text.size()) {
        const std::size_t comma = text.find(',', start);
        const auto part = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        const auto d = to_double(part);
        if (!d) return std::nullopt;
        v.push_back(*d);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    Window w{};
    if (v.size() == 1 && v[0] > 0.0) {
        w = {-v[0], v[0], -v[0], v[0]};
    } else if (v.size() == 4 && v[0] < v[1] && v[2] < v[3]) {
        w = {v[0], v[1], v[2], v[3]};
    } else {
        return std::nullopt;
    }
    return w;
}

std::string render_svg(const std::vector<Series>& series, Projection projection, const Window& window) {
    const Canvas canvas(window);
    std::string svg;
    svg += fmt("<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"%.0f\" height=\"%.0f\"", kSize, kSize);
    svg += fmt(" viewBox=\"0 0 %.0f %.0f\">\n", kSize, kSize);
    svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    const P2 lo{window.umin, window.vmin}, hi{window.umax, window.vmax};
    svg += "<rect x=\"" + num(canvas.px(lo.u)) + "\" y=\"" + num(canvas.py(hi.v)) +
           "\" width=\"" + num(canvas.px(hi.u) - canvas.px(lo.u)) + "\" height=\"" +
           num(canvas.py(lo.v) - canvas.py(hi.v)) + "\" fill=\"none\" stroke=\"#999999\"/>\n";

    const auto names = axis_names(projection);
    if (window.vmin <= 0.0 && window.vmax >= 0.0) {
        svg += "<line class=\"axis\" x1=\"" + num(canvas.px(lo.u)) + "\" y1=\"" + num(canvas.py(0)) +
               "\" x2=\"" + num(canvas.px(hi.u)) + "\" y2=\"" + num(canvas.py(0)) +
               "\" stroke=\"#bbbbbb\"/>\n";
    }
    if (window.umin <= 0.0 && window.umax >= 0.0) {
        svg += "<line class=\"axis\" x1=\"" + num(canvas.px(0)) + "\" y1=\"" + num(canvas.py(lo.v)) +
               "\" x2=\"" + num(canvas.px(0)) + "\" y2=\"" + num(canvas.py(hi.v)) +
               "\" stroke=\"#bbbbbb\"/>\n";
    }
    svg += "<text x=\"" + num(canvas.px(hi.u) - 14.0) + "\" y=\"" + num(canvas.py(lo.v) + 16.0) +
           "\" font-size=\"12\">" + names[0] + "</text>\n";
    svg += "<text x=\"" + num(canvas.px(lo.u) - 28.0) + "\" y=\"" + num(canvas.py(hi.v) + 12.0) +
           "\" font-size=\"12\">" + names[1] + "</text>\n";

    for (std::size_t i = 0; i < series.size(); ++i) {
        const Series& s = series[i];
        const char* color = kPalette[i % kPalette.size()];
        std::string attrs = std::string(" fill=\"none\" stroke=\"") + color + "\" stroke-width=\"" +
                            (s.style.thick ? "2.5" : "1") + "\"";
        if (s.style.dashed) attrs += " stroke-dasharray=\"6 4\"";
        svg += "<g class=\"series\" data-label=\"" + s.label + "\">\n";
        for (const auto& line : polylines(s.rows, projection, window)) {
            svg += "<polyline points=\"";
            for (std::size_t k = 0; k < line.size(); ++k) {
                if (k) svg += ' ';
                svg += canvas.point(line[k]);
            }
            svg += "\"" + attrs + "/>\n";
        }
        svg += "</g>\n";
        svg += "<text x=\"" + num(kMargin + 4.0) + "\" y=\"" + num(16.0 + 14.0 * static_cast<double>(i)) +
               "\" font-size=\"12\" fill=\"" + color + "\">" + s.label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace oloid::plot
