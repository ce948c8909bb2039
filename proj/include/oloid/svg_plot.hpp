#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oloid/sampling.hpp"

namespace oloid::plot {

// X, Y, Z drop that coordinate (onto x = 0, y = 0, z = 0); Plane draws
// developed (xi, eta) rows.
enum class Projection { X, Y, Z, Plane };

std::optional<Projection> parse_projection(std::string_view text);

// Visible box in the projected coordinates.
struct Window {
    double umin, umax, vmin, vmax;
};

// "w" gives [-w, w]^2; "umin,umax,vmin,vmax" gives an explicit box.
std::optional<Window> parse_window(std::string_view text);

struct Style {
    bool dashed = false;
    bool thick = false;
};

struct Series {
    std::string label;
    Style style;
    std::vector<sampling::Row> rows;
};

// One polyline per connected run of rows, clipped to the window. The output
// depends only on the arguments.
std::string render_svg(const std::vector<Series>& series, Projection projection, const Window& window);

}  // namespace oloid::plot
