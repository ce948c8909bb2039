#pragma once

// Isometric development of the extended oloid onto its tangent plane E
// along the ruling at t = 0. The eta axis carries that ruling; points of the
// surface are developed on the z <= 0 side of the first interval, so the
// touching curve point with parameter t in [-2pi/3, 2pi/3] is
// (kappa_1, kappa_2, -kappa_3).

#include <functional>
#include <span>

#include "oloid/geometry.hpp"

namespace oloid::development {

// One period of the development in t is 4pi/3; it shifts xi by this amount.
inline constexpr double kXiPeriod = 4.0 * kPi / (3.0 * kSqrt3);

struct ReducedAngle {
    double h;     // in [-2pi/3, 2pi/3]
    long period;  // signed number of 4pi/3 steps removed from t
};

// t = h + period * 4pi/3 with period = sgn(t) floor(3|t|/(4pi) + 1/2).
// Odd multiples of 2pi/3 land on h = -2pi/3 for t > 0.
ReducedAngle reduce_angle(double t);
inline double h_step(double t) { return reduce_angle(t).h; }

// Developed touching curve C*_lambda. Throws PoleError where
// 1 + lambda cos h(t) = 0 (cos h(t) = 0 at infinity).
PlanePoint develop_touching(ExtendedParam lambda, double t);

// Developed edge of regression R*. Throws PoleError at cos h(t) = 0.
PlanePoint develop_regression(double t);

// Image of ruling_point(m, t, Lower) for t in the first interval. Rulings
// develop to straight segments, so this interpolates the images of the two
// circles.
PlanePoint develop_ruling_point(double m, double t);

struct ArcLength {
    double length = 0.0;
    double error_estimate = 0.0;
    double relative_error() const { return length == 0.0 ? error_estimate : error_estimate / length; }
};

// Length of a parametrized path over [a, b] by adaptive Simpson quadrature of
// the central-difference speed, after the substitution
// t = a + (b - a)(1 - cos(pi s))/2 that absorbs inverse square-root speed
// blow-up at either end. The step is min(1e-6 (1 + |t|), 1% of the distance
// to the nearer end). Throws NonMonotoneError unless a < b.
ArcLength arc_length_surface(const std::function<Point3(double)>& path, double a, double b, double tol = 1e-9);
ArcLength arc_length_plane(const std::function<PlanePoint(double)>& path, double a, double b, double tol = 1e-9);

// Lengths of sampled paths: chord sums on all samples and on every second
// sample, combined by Richardson extrapolation. Parameters must increase
// strictly (NonMonotoneError otherwise).
struct SurfaceSample {
    double t;
    Point3 p;
};
struct PlaneSample {
    double t;
    PlanePoint p;
};
ArcLength arc_length_surface(std::span<const SurfaceSample> samples);
ArcLength arc_length_plane(std::span<const PlaneSample> samples);

}  // namespace oloid::development
