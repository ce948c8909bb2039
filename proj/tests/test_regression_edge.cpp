#include "doctest.h"

#include <cmath>

#include "oloid/errors.hpp"
#include "oloid/oloid_core.hpp"
#include "oloid/quadric_pencil.hpp"
#include "oloid/regression_edge.hpp"
#include "oloid/touching_curve.hpp"
#include "oracles.hpp"

using namespace oloid;
using namespace oloid::regression;

namespace {

ExtendedParam fin(double l) { return ExtendedParam::finite(l); }
bool near(const Point3& a, const Point3& b, double tol = 1e-12) { return distance(a, b) <= tol; }

// Midpoint of the common perpendicular of the rulings at t - h and t + h:
// neighbouring rulings of a developable meet on its edge of regression.
Point3 neighbouring_rulings_meet(double t, double h) {
    const Line3 a = core::generating_line(t - h, ZBranch::Upper);
    const Line3 b = core::generating_line(t + h, ZBranch::Upper);
    const Vec3 w = a.base - b.base;
    const double aa = a.dir.dot(a.dir), ab = a.dir.dot(b.dir), bb = b.dir.dot(b.dir);
    const double ad = a.dir.dot(w), bd = b.dir.dot(w);
    const double den = aa * bb - ab * ab;
    const double s = (ab * bd - bb * ad) / den;
    const double u = (aa * bd - ab * ad) / den;
    return (a.at(s) + b.at(u)) * 0.5;
}

}  // namespace

TEST_CASE("osculating parameter reference values") {
    CHECK(std::abs(osculating_lambda(kTwoPiThirds)) < 1e-15);
    CHECK(std::abs(osculating_lambda(-kTwoPiThirds)) < 1e-15);
    CHECK(osculating_lambda(0.0) == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(osculating_lambda(kPi / 3.0) == doctest::Approx(1.6).epsilon(1e-15));
    CHECK_THROWS_AS(osculating_lambda(kPi / 2.0), PoleError);
    CHECK_THROWS_AS(osculating_lambda(2.5), DomainError);
}

TEST_CASE("inverse of the osculating parameter") {
    CHECK(osculating_angle(1.6, Side::Pos) == doctest::Approx(kPi / 3.0).epsilon(1e-14));
    for (double l : {-5.0, -2.0, -1.01, 1.01, 1.6, 4.0, 50.0}) {
        for (Side side : {Side::Neg, Side::Pos}) {
            const double t = osculating_angle(l, side);
            CHECK(std::abs(osculating_lambda(t) - l) / std::abs(l) < 1e-10);
            CHECK((side == Side::Pos ? t > 0.0 : t < 0.0));
        }
    }
    CHECK_THROWS_AS(osculating_angle(0.5, Side::Pos), DomainError);
}

TEST_CASE("edge points from neighbouring rulings") {
    for (double t : {-1.9, -1.2, -0.5, 0.3, 1.0, 2.0}) {
        const Point3 oracle_point = neighbouring_rulings_meet(t, 1e-4);
        const Point3 p = point_at_angle(t, ZBranch::Upper);
        CHECK(distance(p, oracle_point) < 1e-6 * (1.0 + p.norm()));
        // The parameter of the quadric osculating there, solved on psi.
        const Line3 ruling = core::generating_line(t, ZBranch::Upper);
        const double m = (p - ruling.base).dot(ruling.dir) / ruling.dir.dot(ruling.dir);
        const double l = osculating_lambda(t);
        CHECK(touching::ruling_parameter(fin(l), t) == doctest::Approx(m).epsilon(1e-10));
    }
}

TEST_CASE("Czuber system on the edge") {
    for (int i = 0; i < 60; ++i) {
        const double t = -2.0 + 4.0 * (i + 0.5) / 60.0;
        if (std::abs(std::cos(t)) < 0.05) continue;
        const double l = osculating_lambda(t);
        if (std::abs(l) < 1e-3 || std::abs(l - 1.0) < 1e-3) continue;
        const Point3 g = point_at_angle(t, ZBranch::Upper);
        const double scale = pencil::residual_scale(fin(l), g);
        CHECK(std::abs(pencil::residual(fin(l), g)) / scale < 1e-8);
        CHECK(std::abs(pencil::residual_d1(l, g)) / scale < 1e-8);
        CHECK(std::abs(pencil::residual_d2(l, g)) / scale < 1e-8);
    }
}

TEST_CASE("edge point by parameter") {
    CHECK(near(point_at_lambda(2.0), {0.53728, 0.86603, 1.51967}, 1e-5));
    CHECK(near(point_at_lambda(1.6, {-1, 1}), {-kSqrt3 / 6.0, 5.0 / 9.0, 8.0 * std::sqrt(2.0) / 9.0}));
    CHECK(near(point_at_angle(kPi / 3.0, ZBranch::Upper), {-kSqrt3 / 6.0, 5.0 / 9.0, 8.0 * std::sqrt(2.0) / 9.0}));
    for (double l : {-5.0, -2.0, -1.01, 1.01, 1.6, 4.0, 50.0}) {
        const double tn = osculating_angle(l, Side::Neg);
        const double tp = osculating_angle(l, Side::Pos);
        const Point3 r = point_at_lambda(l);
        CHECK(distance(r, point_at_angle(tn, ZBranch::Upper)) < 1e-10 * (1.0 + r.norm()));
        CHECK(distance(point_at_lambda(l, {-1, 1}), point_at_angle(tp, ZBranch::Upper)) < 1e-10 * (1.0 + r.norm()));
        CHECK(distance(point_at_lambda(l, {1, -1}), point_at_angle(tn, ZBranch::Lower)) < 1e-10 * (1.0 + r.norm()));
        // It is also the point of the touching curve on that ruling.
        CHECK(distance(r, touching::first_branch_point(l, tn)) < 1e-10 * (1.0 + r.norm()));
    }
    CHECK_THROWS_AS(point_at_lambda(0.5), DomainError);
}

TEST_CASE("cusps") {
    const auto c = cusps();
    CHECK(distance(point_at_angle(kTwoPiThirds - 1e-4, ZBranch::Upper), c[0]) < 1e-3);
    CHECK(near(point_at_angle(kTwoPiThirds, ZBranch::Upper), c[0]));
    CHECK(near(point_at_angle(-kTwoPiThirds, ZBranch::Lower), c[1]));
    CHECK(near(point_at_angle(0.0, ZBranch::Upper), c[2]));
    CHECK(near(point_at_angle(0.0, ZBranch::Lower), c[3]));
    CHECK_THROWS_AS(point_at_angle(kPi / 2.0, ZBranch::Upper), PoleError);
    CHECK_THROWS_AS(point_at_angle(2.3, ZBranch::Upper), DomainError);
}

TEST_CASE("asymptotes of the edge and their intersections") {
    for (int k = 1; k <= 4; ++k) {
        const Line3 a = asymptote(k);
        // Each asymptote is a ruling at t = -+pi/2.
        bool on_some_ruling = false;
        for (double t : {-kPi / 2.0, kPi / 2.0}) {
            for (ZBranch zb : {ZBranch::Upper, ZBranch::Lower}) {
                const Line3 r = core::generating_line(t, zb);
                if (a.distance_to(r.at(-3.0)) < 1e-12 && a.distance_to(r.at(4.0)) < 1e-12) on_some_ruling = true;
            }
        }
        CHECK(on_some_ruling);
        // The edge approaches it near the pole.
        const double t = k == 1 || k == 4 ? -kPi / 2.0 : kPi / 2.0;
        const ZBranch zb = k <= 2 ? ZBranch::Upper : ZBranch::Lower;
        CHECK(a.distance_to(point_at_angle(t + 1e-5, zb)) < 1e-3);
        CHECK(a.distance_to(point_at_angle(t - 1e-5, zb)) < 1e-3);
    }
    const auto s = asymptote_intersections();
    CHECK(near(s[0], {0.0, 0.5, 1.0}));
    CHECK(near(s[1], {1.0, -0.5, 0.0}));
    CHECK(near(s[2], {0.0, 0.5, -1.0}));
    CHECK(near(s[3], {-1.0, -0.5, 0.0}));
    for (int k = 1; k <= 4; ++k) {
        const Point3 p = s[static_cast<std::size_t>(k - 1)];
        CHECK(asymptote(k).distance_to(p) < 1e-14);
        CHECK(asymptote(k % 4 + 1).distance_to(p) < 1e-14);
    }
    CHECK_THROWS_AS(asymptote(0), DomainError);
}
