#pragma once

// Grid sampling of every curve, line family and surface of the library into
// flat rows, in drawing order. A row with branch "gap" and no coordinates
// lifts the pen: it separates branches and marks excluded pole neighbourhoods.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "oloid/geometry.hpp"

namespace oloid::sampling {

enum class ObjectKind { Oloid, Quadric, Touching, Regression, Asymptotes, Generators, DevTouching, DevRegression };

std::optional<ObjectKind> parse_object(std::string_view name);
std::string_view to_string(ObjectKind kind);
// Planar objects have (xi, eta) coordinates, the others (x, y, z).
bool is_planar(ObjectKind kind);
// Whether the object depends on lambda at all.
bool uses_lambda(ObjectKind kind);

inline constexpr std::string_view kGapBranch = "gap";

struct Row {
    std::string object;
    std::string lambda;
    std::string branch;
    double t = 0.0;
    std::vector<double> coords;  // empty for gap rows

    bool is_gap() const { return branch == kGapBranch; }
    bool operator==(const Row&) const = default;
};

struct Range {
    double lo;
    double hi;
};

// Parameter range used when the request leaves it open.
Range default_range(ObjectKind kind, ExtendedParam lambda);

struct Request {
    ObjectKind object = ObjectKind::Touching;
    ExtendedParam lambda = ExtendedParam::finite(0.5);
    std::optional<double> t_min;
    std::optional<double> t_max;
    int n = 200;
    double pole_exclusion = 1e-6;
};

// Throws DomainError for parameters the object does not accept (for example
// common generators of an ellipsoid) and std::invalid_argument for n < 2 or
// an empty range.
std::vector<Row> sample(const Request& request);

}  // namespace oloid::sampling
