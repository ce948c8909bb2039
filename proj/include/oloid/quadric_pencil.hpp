#pragma once

// The inscribed quadrics Q_lambda of the extended oloid.
//
// In plane coordinates u = [u0, u1, u2, u3] the family is the tangential
// pencil (1 - lambda) F0(u) + lambda F1(u) spanned by the dual cylinders of
// the two circles. Its point form is
//
//   f(x, y, z) = x^2/(1 - l) + (y - l + 1/2)^2/(1 - l + l^2) + z^2/l - 1.
//
// lambda = 0 and lambda = 1 are the circles themselves; the point at
// infinity is the hyperbolic paraboloid x^2 - z^2 + 2y = 0.

#include <algorithm>
#include <array>
#include <complex>
#include <string_view>

#include "oloid/geometry.hpp"

namespace oloid::pencil {

using Complex = std::complex<double>;

enum class QuadricClass {
    HyperbolicParaboloid,
    HyperboloidOneSheetXYSpine,  // lambda < 0
    CircleKA,                    // lambda = 0
    Ellipsoid,                   // 0 < lambda < 1
    CircleKB,                    // lambda = 1
    HyperboloidOneSheetYZSpine,  // lambda > 1
};

std::string_view to_string(QuadricClass c);

QuadricClass classify(ExtendedParam lambda);

// f_lambda(p); zero iff p lies on Q_lambda. Throws DegenerateError for
// lambda in {0, 1}.
double residual(ExtendedParam lambda, const Point3& p);

// Sum of the magnitudes of the terms of residual(), never below 1; a scale
// for relative residual checks.
double residual_scale(ExtendedParam lambda, const Point3& p);

// First and second partial derivatives of f_lambda with respect to lambda.
double residual_d1(double lambda, const Point3& p);
double residual_d2(double lambda, const Point3& p);

// Gradient of f_lambda in (x, y, z).
Vec3 gradient(ExtendedParam lambda, const Point3& p);

// Homogeneous 4-tuple over C: point coordinates [x0, x1, x2, x3] with
// x = x1/x0 etc., or plane coordinates [u0..u3] of u . x = 0.
struct HomElemC {
    std::array<Complex, 4> c{};

    static HomElemC from_point(const Point3& p) { return {{1.0, p.x, p.y, p.z}}; }
    static HomElemC real(double a, double b, double d, double e) { return {{a, b, d, e}}; }

    Complex operator[](std::size_t i) const { return c[i]; }
    bool is_zero() const;
    // Divided by its coefficient of largest modulus.
    HomElemC normalized() const;
    // Equality up to a nonzero complex scale.
    bool same_as(const HomElemC& other, double tol = 1e-10) const;
    // Max componentwise deviation after normalization.
    double deviation(const HomElemC& other) const;
};

// Bilinear pairing u . x (incidence of a plane and a point).
Complex pair(const HomElemC& u, const HomElemC& x);

// The four degenerate members: circles k_A (lambda = 0), k_B (lambda = 1),
// and the complex conics at lambda = 1/2 +- (sqrt 3 / 2) i.
enum class DegenerateConic { KA, KB, L1, L2 };

// lambda_1 = 1/2 + (sqrt 3/2) i, lambda_2 its conjugate.
Complex degenerate_lambda(DegenerateConic which);

struct ConicResidual {
    Complex conic;
    Complex plane;
    double magnitude() const { return std::max(std::abs(conic), std::abs(plane)); }
};

// Residual of the conic equation and of its carrier plane, evaluated on the
// scale-normalized point.
ConicResidual degenerate_conic_residual(DegenerateConic which, const HomElemC& p);

enum class DualCylinder { A, B };

// F0(u) = 4u0^2 - 4u0u2 - 4u1^2 - 3u2^2 (A) and
// F1(u) = 4u0^2 + 4u0u2 - 3u2^2 - 4u3^2 (B), on the normalized tuple.
Complex dual_cylinder_residual(DualCylinder which, const HomElemC& u);

// (1 - lambda) F0(u) + lambda F1(u), on the normalized tuple.
Complex tangential_pencil_residual(double lambda, const HomElemC& u);

using Matrix4 = std::array<std::array<double, 4>, 4>;

// Symmetric matrix of the homogeneous point form
//   x1^2/(1-l) + (x2 + (1/2 - l) x0)^2/(1-l+l^2) + x3^2/l - x0^2.
Matrix4 point_matrix(double lambda);

// Symmetric matrix of the plane form (1 - l) F0 + l F1.
Matrix4 dual_matrix(double lambda);

// Polar plane of a point with respect to Q_lambda.
HomElemC polar_plane(double lambda, const HomElemC& point);

// Tangent plane of Q_lambda at a point of the surface (plane coordinates).
HomElemC tangent_plane(double lambda, const Point3& p);

// Common self-polar tetrahedron of the pencil. Vertex i is the pole of
// face i; face i does not contain vertex i.
struct Tetrahedron {
    std::array<HomElemC, 4> faces;
    std::array<HomElemC, 4> vertices;
    std::array<std::string_view, 4> face_names;
    std::array<std::string_view, 4> vertex_names;
};

Tetrahedron self_polar_tetrahedron();

}  // namespace oloid::pencil
