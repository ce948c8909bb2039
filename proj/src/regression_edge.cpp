#include "oloid/regression_edge.hpp"

#include <algorithm>
#include <string>

#include "oloid/errors.hpp"
#include "oloid/oloid_core.hpp"

namespace oloid::regression {

namespace {

void require_outside_unit_interval(double lambda) {
    if (lambda >= 0.0 && lambda <= 1.0) {
        throw DomainError("lambda must lie outside [0, 1], got " + std::to_string(lambda));
    }
}

}  // namespace

double osculating_lambda(double t) {
    const double tn = normalize_angle(t);
    const double c = std::cos(tn);
    if (one_plus_two_cos(tn) < -core::kBoundarySlack) {
        throw DomainError("osculating_lambda requires t in [-2pi/3, 2pi/3], got " + std::to_string(t));
    }
    if (std::abs(c) <= 1e-15) throw PoleError("osculating_lambda has a pole at cos t = 0");
    return (1.0 + 2.0 * c) / ((2.0 + c) * c);
}

double signed_root(double lambda) {
    return sgn(lambda) * std::sqrt(1.0 - lambda + lambda * lambda);
}

double osculating_angle(double lambda, Side side) {
    require_outside_unit_interval(lambda);
    const double a = std::acos(std::clamp((1.0 - lambda + signed_root(lambda)) / lambda, -1.0, 1.0));
    return side == Side::Neg ? -a : a;
}

Point3 point_at_angle(double t, ZBranch zb) {
    const double tn = normalize_angle(t);
    const double s = std::sin(tn);
    const double c = std::cos(tn);
    if (std::abs(c) <= 1e-15 || 1.0 + c == 0.0) {
        throw PoleError("edge of regression has a pole at t = " + std::to_string(t));
    }
    const double w = one_plus_two_cos(tn);
    if (w < -core::kBoundarySlack) {
        throw DomainError("edge of regression requires 1 + 2 cos t >= 0, got t = " + std::to_string(t));
    }
    const double wc = std::max(w, 0.0);
    return {(s - s / c) / 3.0, (2.0 + 3.0 * c - 3.0 * c * c - 2.0 * c * c * c) / (6.0 * (1.0 + c) * c),
            sign_of(zb) * wc * std::sqrt(wc) / (3.0 * (1.0 + c) * c)};
}

Point3 point_at_lambda(double lambda, QuadrantSigns q) {
    require_outside_unit_interval(lambda);
    const double l = lambda;
    const double rho = signed_root(l);
    const double den = 2.0 - l + rho;
    const double r1 = std::sqrt((l - 1.0) * (l - 1.0) * (l - 1.0) * (2.0 - l + 2.0 * rho)) / (l * den);
    const double r2 = (l * l + 2.0 * l - 2.0 + (l - 2.0) * rho) / (2.0 * l * den);
    const double r3 = sgn(l) * std::sqrt(l * (2.0 - l + 2.0 * rho)) / den;
    return {q.sx * r1, r2, q.sz * r3};
}

Line3 asymptote(int k) {
    switch (k) {
        case 1: return {{-1.0, -0.5, 0.0}, {1.0, 1.0, 1.0}};
        case 2: return {{1.0, -0.5, 0.0}, {-1.0, 1.0, 1.0}};
        case 3: return {{1.0, -0.5, 0.0}, {-1.0, 1.0, -1.0}};
        case 4: return {{-1.0, -0.5, 0.0}, {1.0, 1.0, -1.0}};
        default: throw DomainError("asymptote index must be 1..4, got " + std::to_string(k));
    }
}

std::array<Point3, 4> asymptote_intersections() {
    return {Point3{0.0, 0.5, 1.0}, Point3{1.0, -0.5, 0.0}, Point3{0.0, 0.5, -1.0}, Point3{-1.0, -0.5, 0.0}};
}

std::array<Point3, 4> cusps() {
    const double h = kSqrt3 / 2.0;
    return {Point3{h, 0.0, 0.0}, Point3{-h, 0.0, 0.0}, Point3{0.0, 0.0, h}, Point3{0.0, 0.0, -h}};
}

}  // namespace oloid::regression
