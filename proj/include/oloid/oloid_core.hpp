#pragma once

// The two unit circles and the rulings of the extended oloid.
//
// Circle A lies in z = 0 with centre (0, -1/2, 0); circle B lies in x = 0
// with centre (0, 1/2, 0). For an angle t with 1 + 2 cos t >= 0 the ruling
// through A(t) meets circle B in two points mirrored in z; ZBranch picks one.
// The ruling parameter m is affine with m = 0 on A and m = 1 on B.

#include "oloid/geometry.hpp"

namespace oloid::core {

// Angles within this distance of the boundary 1 + 2 cos t = 0 are treated
// as lying on it.
inline constexpr double kBoundarySlack = 1e-12;

// Point of circle A; entire in t.
Point3 circle_point_a(double t);

// Point of circle B on the ruling through circle_point_a(t).
// Throws PoleError when cos t = -1, DomainError when 1 + 2 cos t < 0.
Point3 circle_point_b(double t, ZBranch zb);

// (1 - m) * A(t) + m * B(t, zb).
Point3 ruling_point(double m, double t, ZBranch zb);

// Line through circle_point_a(t) and circle_point_b(t, zb); the line
// parameter equals the ruling parameter m.
Line3 generating_line(double t, ZBranch zb);

// Reduces a curve parameter modulo 8*pi/3 into [-2*pi/3, 2*pi). The first
// part [-2pi/3, 2pi/3] is the upper family, (2pi/3, 2pi) the mirrored one.
double reduce_curve_parameter(double t);

// True when the reduced parameter lies in the upper-family interval.
bool in_first_interval(double t);

// Ruling point addressed by a curve parameter over both families: for t in
// (2pi/3, 2pi) this is ruling_point(m, 4pi/3 - t, Lower).
Point3 ruling_point_extended(double m, double t);

// Residuals of the circle equations (conic part, plane part).
struct CircleResidual {
    double conic;
    double plane;
};
CircleResidual circle_a_residual(const Point3& p);
CircleResidual circle_b_residual(const Point3& p);

}  // namespace oloid::core
