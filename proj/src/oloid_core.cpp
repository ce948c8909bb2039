#include "oloid/oloid_core.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "oloid/errors.hpp"

namespace oloid::core {

namespace {

struct RulingTrig {
    double s;
    double c;
    double root;  // sqrt(1 + 2 cos t), clamped at the boundary
};

RulingTrig ruling_trig(double t) {
    const double tn = normalize_angle(t);
    const double s = std::sin(tn);
    const double c = std::cos(tn);
    if (1.0 + c == 0.0 || tn == kPi) {
        throw PoleError("ruling undefined at cos t = -1 (t = " + std::to_string(t) + ")");
    }
    const double w = one_plus_two_cos(tn);
    if (w < -kBoundarySlack) {
        throw DomainError("ruling requires 1 + 2 cos t >= 0, got t = " + std::to_string(t));
    }
    return {s, c, std::sqrt(std::max(w, 0.0))};
}

}  // namespace

Point3 circle_point_a(double t) {
    return {std::sin(t), -0.5 - std::cos(t), 0.0};
}

Point3 circle_point_b(double t, ZBranch zb) {
    const auto [s, c, root] = ruling_trig(t);
    (void)s;
    return {0.0, 0.5 - c / (1.0 + c), sign_of(zb) * root / (1.0 + c)};
}

Point3 ruling_point(double m, double t, ZBranch zb) {
    const auto [s, c, root] = ruling_trig(t);
    return {(1.0 - m) * s,
            (2.0 * (m - 1.0) * c * c + (2.0 * m - 3.0) * c + 2.0 * m - 1.0) / (2.0 * (1.0 + c)),
            sign_of(zb) * m * root / (1.0 + c)};
}

Line3 generating_line(double t, ZBranch zb) {
    const Point3 a = circle_point_a(t);
    const Point3 b = circle_point_b(t, zb);
    return {a, b - a};
}

double reduce_curve_parameter(double t) {
    constexpr double period = 8.0 * kPi / 3.0;
    double r = std::fmod(t + kTwoPiThirds, period);
    if (r < 0.0) r += period;
    return r - kTwoPiThirds;
}

bool in_first_interval(double t) {
    return reduce_curve_parameter(t) <= kTwoPiThirds;
}

Point3 ruling_point_extended(double m, double t) {
    const double r = reduce_curve_parameter(t);
    if (r <= kTwoPiThirds) return ruling_point(m, r, ZBranch::Upper);
    return ruling_point(m, kFourPiThirds - r, ZBranch::Lower);
}

CircleResidual circle_a_residual(const Point3& p) {
    return {p.x * p.x + (p.y + 0.5) * (p.y + 0.5) - 1.0, p.z};
}

CircleResidual circle_b_residual(const Point3& p) {
    return {(p.y - 0.5) * (p.y - 0.5) + p.z * p.z - 1.0, p.x};
}

}  // namespace oloid::core
