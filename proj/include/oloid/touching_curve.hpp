#pragma once

// Touching curves C_lambda along which Q_lambda touches the extended oloid.
//
// Every ruling through circle_point_a(t) touches Q_lambda exactly once, at
// ruling parameter m = lambda (1 + cos t) / (1 + lambda cos t). Collecting
// these contact points over the upper family gives the first branch; the
// second branch is its z-mirror, addressed through t in (2pi/3, 2pi) via
// t -> 4pi/3 - t. Together they form a curve periodic in t with period
// 8pi/3.

#include <array>
#include <functional>
#include <optional>

#include "oloid/geometry.hpp"

namespace oloid::touching {

enum class CurveBranch { Gamma1, Gamma2 };

struct CurvePoint {
    double t;  // reduced into [-2pi/3, 2pi)
    CurveBranch branch;
    Point3 point;
};

// Ruling parameter of the contact point. Throws PoleError when
// 1 + lambda cos t = 0 (cos t = 0 at infinity).
double ruling_parameter(ExtendedParam lambda, double t);

// Contact point on the upper-family ruling at angle t (finite lambda).
// Throws PoleError / DomainError.
Point3 first_branch_point(double lambda, double t);

// Pointwise limit of first_branch_point as lambda -> +-infinity.
Point3 limit_first_branch_point(double t);

// Point of C_lambda for any real t (reduced modulo 8pi/3).
CurvePoint curve_point(ExtendedParam lambda, double t);

// d/dt of first_branch_point. Throws BoundaryError where 1 + 2 cos t = 0.
Vec3 first_branch_tangent(double lambda, double t);
Vec3 limit_first_branch_tangent(double t);

// Tangent line of C_lambda at curve_point(lambda, t); the direction is the
// derivative of the curve with respect to t on either branch.
Line3 tangent_line(ExtendedParam lambda, double t);

// Parameters at which the curve escapes to infinity, in the curve's own
// parametrization: t1 = -t2 in the first interval, t3 = 4pi/3 - t2 and
// t4 = 4pi/3 + t2 in the second.
struct PoleSet {
    double t1;
    double t2;
    double t3;
    double t4;
    std::array<double, 4> as_array() const { return {t1, t2, t3, t4}; }
};

// Throws NoPolesError for lambda in (-1, 2).
PoleSet poles(double lambda);
PoleSet poles_at_infinity();

// True when the curve has poles (lambda outside (-1, 2), or infinity).
bool has_poles(ExtendedParam lambda);

// Asymptote of the curve at pole k (1..4). Defined for lambda outside
// [-1, 2] and at infinity; throws DomainError otherwise.
Line3 asymptote(ExtendedParam lambda, int k);

// Intersections with the symmetry planes x = 0 (X1, X2) and z = 0 (Z1, Z2).
// A point is empty where its closed form has a pole (X at lambda = -1,
// Z at lambda = 2).
struct AxisPoints {
    std::optional<Point3> x1;
    std::optional<Point3> z1;
    std::optional<Point3> x2;
    std::optional<Point3> z2;
};
AxisPoints axis_points(ExtendedParam lambda);

// Residuals of the projections of the limit curve onto the coordinate
// planes: (y + 1/2)^2 - z^2 - 1, (x^2 - z^2)^2 - 2(x^2 + z^2) - 3,
// (y - 1/2)^2 - x^2 - 1.
struct ProjectionResiduals {
    double x_plane;
    double y_plane;
    double z_plane;
};
ProjectionResiduals projection_residuals_at_infinity(const Point3& p);

enum class ProjectionPlane { X, Y, Z };

// Residual of the hyperbola carrying the projection of C_lambda onto x = 0:
//   lambda^2 ((2 lambda - 4) y + 3 lambda)(2 lambda y + 2 - lambda)
//     - 4 (1 - lambda + lambda^2)^2 z^2.
double x_projection_residual(double lambda, double y, double z);

// Centre (y coordinate, z = 0) of that hyperbola; lambda not in {0, 2}.
double x_projection_center(double lambda);

// Algebraic curve carrying a planar projection of C_lambda.
struct ProjectionCurve {
    ProjectionPlane plane;
    // Centre in the plane's coordinates ((y, z) for X, (x, z) for Y,
    // (x, y) for Z), when the curve is a central conic.
    std::optional<std::array<double, 2>> center;
    std::function<double(const Point3&)> residual;
};

// Supported: X-projection for lambda in {-0.87, -1.4, -1}; Y- and
// Z-projections for lambda = -1. Throws UnsupportedLambdaError otherwise.
ProjectionCurve projection_curve(double lambda, ProjectionPlane plane);

}  // namespace oloid::touching
