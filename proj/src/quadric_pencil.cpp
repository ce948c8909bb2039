#include "oloid/quadric_pencil.hpp"

#include <limits>
#include <string>

#include "oloid/errors.hpp"

namespace oloid::pencil {

namespace {

constexpr double kHalfSqrt3 = kSqrt3 / 2.0;

void require_regular(double lambda) {
    if (lambda == 0.0 || lambda == 1.0) {
        throw DegenerateError("lambda = " + std::to_string(lambda) +
                              " is a circle of the family; use degenerate_conic_residual");
    }
}

double pencil_denominator(double lambda) { return 1.0 - lambda + lambda * lambda; }

}  // namespace

std::string_view to_string(QuadricClass c) {
    switch (c) {
        case QuadricClass::HyperbolicParaboloid: return "hyperbolic paraboloid";
        case QuadricClass::HyperboloidOneSheetXYSpine: return "hyperboloid of one sheet (lambda < 0)";
        case QuadricClass::CircleKA: return "circle k_A";
        case QuadricClass::Ellipsoid: return "ellipsoid";
        case QuadricClass::CircleKB: return "circle k_B";
        case QuadricClass::HyperboloidOneSheetYZSpine: return "hyperboloid of one sheet (lambda > 1)";
    }
    return "?";
}

QuadricClass classify(ExtendedParam lambda) {
    if (lambda.is_infinite()) return QuadricClass::HyperbolicParaboloid;
    const double l = lambda.value();
    if (l < 0.0) return QuadricClass::HyperboloidOneSheetXYSpine;
    if (l == 0.0) return QuadricClass::CircleKA;
    if (l < 1.0) return QuadricClass::Ellipsoid;
    if (l == 1.0) return QuadricClass::CircleKB;
    return QuadricClass::HyperboloidOneSheetYZSpine;
}

double residual(ExtendedParam lambda, const Point3& p) {
    if (lambda.is_infinite()) return p.x * p.x - p.z * p.z + 2.0 * p.y;
    const double l = lambda.value();
    require_regular(l);
    const double n = p.y - l + 0.5;
    return p.x * p.x / (1.0 - l) + n * n / pencil_denominator(l) + p.z * p.z / l - 1.0;
}

double residual_scale(ExtendedParam lambda, const Point3& p) {
    if (lambda.is_infinite()) return p.x * p.x + p.z * p.z + 2.0 * std::abs(p.y) + 1.0;
    const double l = lambda.value();
    require_regular(l);
    const double n = p.y - l + 0.5;
    return std::abs(p.x * p.x / (1.0 - l)) + n * n / pencil_denominator(l) +
           std::abs(p.z * p.z / l) + 1.0;
}

double residual_d1(double lambda, const Point3& p) {
    require_regular(lambda);
    const double l = lambda;
    const double d = pencil_denominator(l);
    const double n = p.y - l + 0.5;
    return p.x * p.x / ((1.0 - l) * (1.0 - l)) - 2.0 * n / d - n * n * (2.0 * l - 1.0) / (d * d) -
           p.z * p.z / (l * l);
}

double residual_d2(double lambda, const Point3& p) {
    require_regular(lambda);
    const double l = lambda;
    const double d = pencil_denominator(l);
    const double dd = 2.0 * l - 1.0;  // derivative of d
    const double n = p.y - l + 0.5;
    const double om = 1.0 - l;
    return 2.0 * p.x * p.x / (om * om * om) + 2.0 / d + 4.0 * n * dd / (d * d) - 2.0 * n * n / (d * d) +
           2.0 * n * n * dd * dd / (d * d * d) + 2.0 * p.z * p.z / (l * l * l);
}

Vec3 gradient(ExtendedParam lambda, const Point3& p) {
    if (lambda.is_infinite()) return {2.0 * p.x, 2.0, -2.0 * p.z};
    const double l = lambda.value();
    require_regular(l);
    return {2.0 * p.x / (1.0 - l), 2.0 * (p.y - l + 0.5) / pencil_denominator(l), 2.0 * p.z / l};
}

bool HomElemC::is_zero() const {
    for (const auto& v : c) {
        if (v != Complex{}) return false;
    }
    return true;
}

HomElemC HomElemC::normalized() const {
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (std::abs(c[i]) > std::abs(c[best])) best = i;
    }
    if (c[best] == Complex{}) throw std::invalid_argument("homogeneous tuple is zero");
    HomElemC out;
    for (std::size_t i = 0; i < 4; ++i) out.c[i] = c[i] / c[best];
    return out;
}

double HomElemC::deviation(const HomElemC& other) const {
    // Normalizing both by the same index keeps the comparison scale-free even
    // when two coefficients tie for the largest modulus.
    std::size_t best = 0;
    for (std::size_t i = 1; i < 4; ++i) {
        if (std::abs(c[i]) > std::abs(c[best])) best = i;
    }
    if (c[best] == Complex{} || other.c[best] == Complex{}) {
        return is_zero() && other.is_zero() ? 0.0 : std::numeric_limits<double>::infinity();
    }
    double dev = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        dev = std::max(dev, std::abs(c[i] / c[best] - other.c[i] / other.c[best]));
    }
    return dev;
}

bool HomElemC::same_as(const HomElemC& other, double tol) const {
    return deviation(other) <= tol;
}

Complex pair(const HomElemC& u, const HomElemC& x) {
    Complex s{};
    for (std::size_t i = 0; i < 4; ++i) s += u.c[i] * x.c[i];
    return s;
}

Complex degenerate_lambda(DegenerateConic which) {
    switch (which) {
        case DegenerateConic::KA: return 0.0;
        case DegenerateConic::KB: return 1.0;
        case DegenerateConic::L1: return {0.5, kHalfSqrt3};
        case DegenerateConic::L2: return {0.5, -kHalfSqrt3};
    }
    return 0.0;
}

ConicResidual degenerate_conic_residual(DegenerateConic which, const HomElemC& p) {
    const HomElemC q = p.normalized();
    const Complex x0 = q[0], x1 = q[1], x2 = q[2], x3 = q[3];
    switch (which) {
        case DegenerateConic::KA:
            return {3.0 * x0 * x0 - 4.0 * x0 * x2 - 4.0 * x1 * x1 - 4.0 * x2 * x2, x3};
        case DegenerateConic::KB:
            return {3.0 * x0 * x0 + 4.0 * x0 * x2 - 4.0 * x2 * x2 - 4.0 * x3 * x3, x1};
        case DegenerateConic::L1:
        case DegenerateConic::L2: {
            // In the plane x2 = (lambda - 1/2) x0 the pencil reduces to
            // x1^2/(1 - lambda) + x3^2/lambda - x0^2.
            const Complex l = degenerate_lambda(which);
            return {x1 * x1 / (1.0 - l) + x3 * x3 / l - x0 * x0, x2 - (l - 0.5) * x0};
        }
    }
    return {};
}

Complex dual_cylinder_residual(DualCylinder which, const HomElemC& u) {
    const HomElemC q = u.normalized();
    const Complex u0 = q[0], u1 = q[1], u2 = q[2], u3 = q[3];
    if (which == DualCylinder::A) return 4.0 * u0 * u0 - 4.0 * u0 * u2 - 4.0 * u1 * u1 - 3.0 * u2 * u2;
    return 4.0 * u0 * u0 + 4.0 * u0 * u2 - 3.0 * u2 * u2 - 4.0 * u3 * u3;
}

Complex tangential_pencil_residual(double lambda, const HomElemC& u) {
    return (1.0 - lambda) * dual_cylinder_residual(DualCylinder::A, u) +
           lambda * dual_cylinder_residual(DualCylinder::B, u);
}

Matrix4 point_matrix(double lambda) {
    require_regular(lambda);
    const double d = pencil_denominator(lambda);
    const double h = 0.5 - lambda;
    Matrix4 m{};
    m[0][0] = h * h / d - 1.0;
    m[0][2] = m[2][0] = h / d;
    m[1][1] = 1.0 / (1.0 - lambda);
    m[2][2] = 1.0 / d;
    m[3][3] = 1.0 / lambda;
    return m;
}

Matrix4 dual_matrix(double lambda) {
    Matrix4 m{};
    m[0][0] = 4.0;
    m[0][2] = m[2][0] = 2.0 * (2.0 * lambda - 1.0);
    m[1][1] = -4.0 * (1.0 - lambda);
    m[2][2] = -3.0;
    m[3][3] = -4.0 * lambda;
    return m;
}

HomElemC polar_plane(double lambda, const HomElemC& point) {
    const Matrix4 m = point_matrix(lambda);
    HomElemC out;
    for (std::size_t i = 0; i < 4; ++i) {
        Complex s{};
        for (std::size_t j = 0; j < 4; ++j) s += m[i][j] * point.c[j];
        out.c[i] = s;
    }
    return out;
}

HomElemC tangent_plane(double lambda, const Point3& p) {
    return polar_plane(lambda, HomElemC::from_point(p));
}

Tetrahedron self_polar_tetrahedron() {
    const Complex i_half_sqrt3{0.0, kHalfSqrt3};
    Tetrahedron t;
    // Faces x1 = 0, x3 = 0, x2 = (sqrt3/2) i x0, x2 = -(sqrt3/2) i x0.
    t.faces = {HomElemC{{0.0, 1.0, 0.0, 0.0}}, HomElemC{{0.0, 0.0, 0.0, 1.0}},
               HomElemC{{-i_half_sqrt3, 0.0, 1.0, 0.0}}, HomElemC{{i_half_sqrt3, 0.0, 1.0, 0.0}}};
    t.face_names = {"X1", "X3", "I1", "I2"};
    // Vertex i is opposite face i.
    t.vertices = {HomElemC{{0.0, 1.0, 0.0, 0.0}}, HomElemC{{0.0, 0.0, 0.0, 1.0}},
                  HomElemC{{1.0, 0.0, -i_half_sqrt3, 0.0}}, HomElemC{{1.0, 0.0, i_half_sqrt3, 0.0}}};
    t.vertex_names = {"X_inf", "Z_inf", "Q", "P"};
    return t;
}

}  // namespace oloid::pencil
