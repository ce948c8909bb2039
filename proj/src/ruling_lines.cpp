#include "oloid/ruling_lines.hpp"

#include <algorithm>
#include <string>

#include "oloid/errors.hpp"
#include "oloid/regression_edge.hpp"

namespace oloid::rulings {

namespace {

void require_ruled(double lambda) {
    if (lambda >= 0.0 && lambda <= 1.0) {
        throw DomainError("members with lambda in [0, 1] are not ruled, got " + std::to_string(lambda));
    }
}

constexpr std::array<std::array<double, 2>, 4> kMirror{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};

std::array<Line3, 4> mirrored(const Line3& first) {
    std::array<Line3, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [sx, sz] = kMirror[k];
        out[k] = {{sx * first.base.x, first.base.y, sz * first.base.z},
                  {sx * first.dir.x, first.dir.y, sz * first.dir.z}};
    }
    return out;
}

}  // namespace

double contact_angle(double lambda) {
    require_ruled(lambda);
    const double rho = regression::signed_root(lambda);
    return std::acos(std::clamp((1.0 - lambda + rho) / lambda, -1.0, 1.0));
}

std::array<Line3, 4> common_generators(ExtendedParam lambda) {
    if (lambda.is_infinite()) return mirrored({{-1.0, -0.5, 0.0}, {1.0, 1.0, 1.0}});
    const double l = lambda.value();
    require_ruled(l);
    const double rho = regression::signed_root(l);
    const double x0 = -std::sqrt((l - 1.0) * (2.0 - l + 2.0 * rho)) / std::abs(l);
    const double y0 = (l - 2.0 - 2.0 * rho) / (2.0 * l);
    const double y1 = (2.0 * l - 1.0 - rho) / (2.0 * (1.0 + rho));
    const double z1 = sgn(l) * std::sqrt(l * (2.0 - l + 2.0 * rho)) / (1.0 + rho);
    return mirrored({{x0, y0, 0.0}, {-x0, y1 - y0, z1}});
}

double regression_contact_parameter(double lambda) {
    require_ruled(lambda);
    const double rho = regression::signed_root(lambda);
    return (1.0 + rho) / (2.0 - lambda + rho);
}

std::array<Point3, 4> tangency_points(double lambda) {
    std::array<Point3, 4> out;
    for (std::size_t k = 0; k < 4; ++k) {
        const auto [sx, sz] = kMirror[k];
        out[k] = regression::point_at_lambda(lambda, {static_cast<int>(sx), static_cast<int>(sz)});
    }
    return out;
}

}  // namespace oloid::rulings
