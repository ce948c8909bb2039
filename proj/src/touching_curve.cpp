#include "oloid/touching_curve.hpp"

#include <algorithm>
#include <limits>
#include <string>

#include "oloid/errors.hpp"
#include "oloid/oloid_core.hpp"

namespace oloid::touching {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_nonzero(double denom, double scale, const char* what, double t) {
    if (std::abs(denom) <= 4.0 * kEps * (1.0 + std::abs(scale))) {
        throw PoleError(std::string(what) + " vanishes at t = " + std::to_string(t));
    }
}

struct Trig {
    double s;
    double c;
    double w;  // 1 + 2 cos t, clamped to >= 0 at the boundary
};

Trig first_interval_trig(double t) {
    const double tn = normalize_angle(t);
    const double c = std::cos(tn);
    const double w = one_plus_two_cos(tn);
    if (w < -core::kBoundarySlack) {
        throw DomainError("touching curve branch requires 1 + 2 cos t >= 0, got t = " + std::to_string(t));
    }
    return {std::sin(tn), c, std::max(w, 0.0)};
}

Point3 mirror_z(const Point3& p) { return {p.x, p.y, -p.z}; }

// Signs (x, z) applied to the first asymptote / common line for k = 1..4.
constexpr std::array<std::array<double, 2>, 4> kQuadrantSigns{{{1, 1}, {-1, 1}, {-1, -1}, {1, -1}}};

}  // namespace

double ruling_parameter(ExtendedParam lambda, double t) {
    const double c = std::cos(t);
    if (lambda.is_infinite()) {
        require_nonzero(c, 1.0, "cos t", t);
        return (1.0 + c) / c;
    }
    const double l = lambda.value();
    const double d = 1.0 + l * c;
    require_nonzero(d, l, "1 + lambda cos t", t);
    return l * (1.0 + c) / d;
}

Point3 first_branch_point(double lambda, double t) {
    const auto [s, c, w] = first_interval_trig(t);
    const double l = lambda;
    const double d = 1.0 + l * c;
    require_nonzero(d, l, "1 + lambda cos t", t);
    return {(1.0 - l) * s / d, (2.0 * l - 1.0 + (l - 2.0) * c) / (2.0 * d), l * std::sqrt(w) / d};
}

Point3 limit_first_branch_point(double t) {
    const auto [s, c, w] = first_interval_trig(t);
    require_nonzero(c, 1.0, "cos t", t);
    return {-s / c, 0.5 + 1.0 / c, std::sqrt(w) / c};
}

CurvePoint curve_point(ExtendedParam lambda, double t) {
    const double r = core::reduce_curve_parameter(t);
    const bool first = r <= kTwoPiThirds;
    const double u = first ? r : kFourPiThirds - r;
    const Point3 p = lambda.is_infinite() ? limit_first_branch_point(u) : first_branch_point(lambda.value(), u);
    return {r, first ? CurveBranch::Gamma1 : CurveBranch::Gamma2, first ? p : mirror_z(p)};
}

Vec3 first_branch_tangent(double lambda, double t) {
    const auto [s, c, w] = first_interval_trig(t);
    if (w <= core::kBoundarySlack) {
        throw BoundaryError("tangent diverges where 1 + 2 cos t = 0 (t = " + std::to_string(t) + ")");
    }
    const double l = lambda;
    const double d = 1.0 + l * c;
    require_nonzero(d, l, "1 + lambda cos t", t);
    const double d2 = d * d;
    return {(1.0 - l) * (l + c) / d2, (1.0 - l + l * l) * s / d2,
            l * (l * (1.0 + c) - 1.0) * s / (d2 * std::sqrt(w))};
}

Vec3 limit_first_branch_tangent(double t) {
    const auto [s, c, w] = first_interval_trig(t);
    if (w <= core::kBoundarySlack) {
        throw BoundaryError("tangent diverges where 1 + 2 cos t = 0 (t = " + std::to_string(t) + ")");
    }
    require_nonzero(c, 1.0, "cos t", t);
    const double c2 = c * c;
    return {-1.0 / c2, s / c2, s * (1.0 + c) / (c2 * std::sqrt(w))};
}

Line3 tangent_line(ExtendedParam lambda, double t) {
    const CurvePoint cp = curve_point(lambda, t);
    const bool first = cp.branch == CurveBranch::Gamma1;
    const double u = first ? cp.t : kFourPiThirds - cp.t;
    const Vec3 d = lambda.is_infinite() ? limit_first_branch_tangent(u) : first_branch_tangent(lambda.value(), u);
    // Second branch: t -> 4pi/3 - t reverses direction and mirrors z.
    return {cp.point, first ? d : Vec3{-d.x, -d.y, d.z}};
}

PoleSet poles(double lambda) {
    if (lambda > -1.0 && lambda < 2.0) {
        throw NoPolesError("1 + lambda cos t has no zero for lambda in (-1, 2), got " + std::to_string(lambda));
    }
    const double a = std::acos(std::clamp(-1.0 / lambda, -1.0, 1.0));
    return {-a, a, kFourPiThirds - a, kFourPiThirds + a};
}

PoleSet poles_at_infinity() {
    constexpr double half = kPi / 2.0;
    return {-half, half, kFourPiThirds - half, kFourPiThirds + half};
}

bool has_poles(ExtendedParam lambda) {
    return lambda.is_infinite() || lambda.value() <= -1.0 || lambda.value() >= 2.0;
}

Line3 asymptote(ExtendedParam lambda, int k) {
    if (k < 1 || k > 4) throw DomainError("asymptote index must be 1..4, got " + std::to_string(k));
    Point3 base;
    Vec3 dir;
    if (lambda.is_infinite()) {
        base = {-1.0, -0.5, 0.0};
        dir = {1.0, 1.0, 1.0};
    } else {
        const double l = lambda.value();
        if (l >= -1.0 && l <= 2.0) {
            throw DomainError("asymptotes exist for lambda outside [-1, 2], got " + std::to_string(l));
        }
        const double d = 1.0 - l + l * l;
        const double x1 = d / (2.0 + l - l * l) * std::sqrt(1.0 - 1.0 / (l * l));
        const double y1 = (2.0 - 2.0 * l - l * l) / (2.0 * l * (l - 2.0));
        base = {x1, y1, 0.0};
        dir = {-x1, d * d / (l * (l - 2.0) * (l * l - 1.0)), d / (l * l - 1.0) * std::sqrt(l / (l - 2.0))};
    }
    const auto [sx, sz] = kQuadrantSigns[static_cast<std::size_t>(k - 1)];
    return {{sx * base.x, base.y, sz * base.z}, {sx * dir.x, dir.y, sz * dir.z}};
}

AxisPoints axis_points(ExtendedParam lambda) {
    AxisPoints out;
    if (lambda.is_infinite()) {
        out.x1 = Point3{0.0, 1.5, kSqrt3};
        out.z1 = Point3{kSqrt3, -1.5, 0.0};
        out.x2 = Point3{0.0, 1.5, -kSqrt3};
        out.z2 = Point3{-kSqrt3, -1.5, 0.0};
        return out;
    }
    const double l = lambda.value();
    if (l != -1.0) {
        const Point3 x{0.0, -3.0 * (1.0 - l) / (2.0 * (1.0 + l)), kSqrt3 * l / (1.0 + l)};
        out.x1 = x;
        out.x2 = mirror_z(x);
    }
    if (l != 2.0) {
        const Point3 z{kSqrt3 * (1.0 - l) / (2.0 - l), 3.0 * l / (2.0 * (2.0 - l)), 0.0};
        out.z1 = z;
        out.z2 = Point3{-z.x, z.y, 0.0};
    }
    return out;
}

ProjectionResiduals projection_residuals_at_infinity(const Point3& p) {
    const double x2 = p.x * p.x;
    const double z2 = p.z * p.z;
    const double yp = p.y + 0.5;
    const double ym = p.y - 0.5;
    return {yp * yp - z2 - 1.0, (x2 - z2) * (x2 - z2) - 2.0 * (x2 + z2) - 3.0, ym * ym - x2 - 1.0};
}

double x_projection_residual(double lambda, double y, double z) {
    const double l = lambda;
    const double d = 1.0 - l + l * l;
    return l * l * ((2.0 * l - 4.0) * y + 3.0 * l) * (2.0 * l * y + 2.0 - l) - 4.0 * d * d * z * z;
}

double x_projection_center(double lambda) {
    const double l = lambda;
    if (l == 0.0 || l == 2.0) {
        throw DomainError("projection onto x = 0 is not a central conic for lambda = " + std::to_string(l));
    }
    return (2.0 - 2.0 * l - l * l) / (2.0 * l * (l - 2.0));
}

ProjectionCurve projection_curve(double lambda, ProjectionPlane plane) {
    auto is = [lambda](double v) { return std::abs(lambda - v) <= 1e-12; };
    if (plane == ProjectionPlane::X && (is(-0.87) || is(-1.4))) {
        const double l = lambda;
        return {plane, std::array<double, 2>{x_projection_center(l), 0.0},
                [l](const Point3& p) { return x_projection_residual(l, p.y, p.z); }};
    }
    if (is(-1.0)) {
        switch (plane) {
            case ProjectionPlane::X:
                return {plane, std::array<double, 2>{0.5, 0.0}, [](const Point3& p) {
                            return (p.y - 0.5) * (p.y - 0.5) - 3.0 * p.z * p.z - 1.0;
                        }};
            case ProjectionPlane::Y:
                return {plane, std::nullopt, [](const Point3& p) {
                            const double x2 = p.x * p.x;
                            return 3.0 * x2 * x2 + 8.0 * x2 - 64.0 * p.z * p.z - 16.0;
                        }};
            case ProjectionPlane::Z:
                // Parabola y = -3x^2/8.
                return {plane, std::nullopt, [](const Point3& p) { return p.y + 3.0 * p.x * p.x / 8.0; }};
        }
    }
    throw UnsupportedLambdaError("no closed-form projection for lambda = " + std::to_string(lambda));
}

}  // namespace oloid::touching
