#include "doctest.h"

#include <cmath>
#include <vector>

#include "oloid/development.hpp"
#include "oloid/errors.hpp"
#include "oloid/oloid_core.hpp"
#include "oloid/regression_edge.hpp"
#include "oloid/touching_curve.hpp"
#include "oracles.hpp"

using namespace oloid;
using namespace oloid::development;

namespace {

ExtendedParam fin(double l) { return ExtendedParam::finite(l); }

// Closed forms printed for the circle, the other circle and lambda = 1/2,
// written with plain arccos; t in I1.
PlanePoint printed_special_case(double l, double t) {
    const double c = std::cos(t), s = std::abs(std::sin(t));
    const double arc = std::acos(std::sqrt(2.0) * c / std::sqrt(1.0 + c));
    const double root = s * std::sqrt(2.0 * (1.0 + 2.0 * c));
    const double k1 = 2.0 * std::sqrt(3.0) / 9.0, k2 = std::sqrt(3.0) / 9.0;
    const double lg = std::log(2.0 / (1.0 + c));
    double xi = 0.0, eta = 0.0;
    if (l == 0.0) {
        xi = k1 * (arc + root / std::sqrt(1.0 + c));
        eta = k2 * (lg + 4.0 * (1.0 - c));
    } else if (l == 1.0) {
        xi = k1 * (arc - root / std::pow(1.0 + c, 1.5));
        eta = k2 * (lg + (11.0 + 7.0 * c) / (1.0 + c));
    } else {
        xi = k1 * arc;
        eta = k2 * (lg + 3.0 * (5.0 + c) / (2.0 + c));
    }
    return {t < 0.0 ? -xi : xi, eta};
}

}  // namespace

TEST_CASE("step function") {
    CHECK(h_step(0.0) == 0.0);
    CHECK(std::abs(h_step(kFourPiThirds)) < 1e-15);
    CHECK(h_step(kTwoPiThirds) == doctest::Approx(-kTwoPiThirds));
    CHECK(h_step(-kTwoPiThirds) == doctest::Approx(kTwoPiThirds));
    CHECK(reduce_angle(3.0 * kFourPiThirds + 0.1).period == 3);
    for (double t = -20.0; t <= 20.0; t += 0.37) {
        const ReducedAngle r = reduce_angle(t);
        CHECK(std::abs(r.h) <= kTwoPiThirds + 1e-12);
        CHECK(r.h + r.period * kFourPiThirds == doctest::Approx(t));
    }
}

TEST_CASE("reference points of the developed curves") {
    const PlanePoint a = develop_touching(fin(0.5), 0.0);
    CHECK(std::abs(a.xi) < 1e-15);
    CHECK(a.eta == doctest::Approx(2.0 * kSqrt3 / 3.0).epsilon(1e-14));
    // t = 2pi/3 reduces to -2pi/3 one period up; the xi value is the same.
    CHECK(develop_touching(fin(0.0), kTwoPiThirds).xi == doctest::Approx(2.0 * kSqrt3 * kPi / 9.0).epsilon(1e-14));
    const PlanePoint b = develop_touching(fin(1.0), 0.0);
    CHECK(std::abs(b.xi) < 1e-15);
    CHECK(b.eta == doctest::Approx(kSqrt3).epsilon(1e-14));
    const PlanePoint r0 = develop_regression(0.0);
    CHECK(std::abs(r0.xi) < 1e-15);
    CHECK(r0.eta == doctest::Approx(kSqrt3).epsilon(1e-14));
    const PlanePoint r1 = develop_regression(kTwoPiThirds);
    CHECK(r1.xi == doctest::Approx(2.0 * kSqrt3 * kPi / 9.0).epsilon(1e-14));
    CHECK(r1.eta == doctest::Approx(kSqrt3 / 9.0 * (std::log(4.0) + 6.0)).epsilon(1e-14));
    CHECK(develop_regression(kPi / 2.0 - 1e-6).eta > 1e4);
    CHECK_THROWS_AS(develop_regression(kPi / 2.0), PoleError);
    CHECK_THROWS_AS(develop_touching(fin(2.0), kTwoPiThirds - 1e-300), PoleError);
}

TEST_CASE("general development matches the printed special cases") {
    for (double l : {0.0, 1.0, 0.5}) {
        for (int i = 0; i < 50; ++i) {
            const double t = -kTwoPiThirds + (i + 0.5) * 2.0 * kTwoPiThirds / 50.0;
            const PlanePoint p = develop_touching(fin(l), t);
            const PlanePoint q = printed_special_case(l, t);
            CHECK(std::abs(p.xi - q.xi) < 1e-12);
            CHECK(std::abs(p.eta - q.eta) < 1e-12);
        }
    }
}

TEST_CASE("period and oddness") {
    for (ExtendedParam l : {fin(0.0), fin(0.3), fin(0.7), fin(-3.0), fin(5.0), ExtendedParam::infinity()}) {
        for (double t : {-1.9, -1.1, -0.2, 0.4, 1.3, 2.0}) {
            const double c = std::cos(t);
            if (l.is_infinite() ? std::abs(c) < 1e-2 : std::abs(1.0 + l.value() * c) < 1e-2) continue;
            const PlanePoint p = develop_touching(l, t);
            const PlanePoint q = develop_touching(l, t + kFourPiThirds);
            CHECK(std::abs(q.xi - p.xi - kXiPeriod) < 1e-12);
            CHECK(std::abs(q.eta - p.eta) < 1e-12 * (1.0 + std::abs(p.eta)));
            const PlanePoint m = develop_touching(l, -t);
            CHECK(std::abs(m.xi + p.xi) < 1e-14 * (1.0 + std::abs(p.xi)));
            CHECK(m.eta == p.eta);
        }
    }
    CHECK(kXiPeriod == doctest::Approx(4.0 * kPi / (3.0 * kSqrt3)).epsilon(1e-15));
    for (double l : {0.0, 0.5, 1.0}) {
        const double jump = develop_touching(fin(l), kTwoPiThirds - 1e-15).xi -
                            develop_touching(fin(l), -kTwoPiThirds + 1e-15).xi;
        CHECK(std::abs(jump - kXiPeriod) < 1e-7);
    }
}

TEST_CASE("rulings develop to straight segments of the same length") {
    for (double t : {-2.0, -1.0, 0.0, 0.5, 1.8}) {
        const PlanePoint a = develop_touching(fin(0.0), t);
        const PlanePoint b = develop_touching(fin(1.0), t);
        const double surface = distance(core::circle_point_a(t), core::circle_point_b(t, ZBranch::Lower));
        CHECK(distance(a, b) == doctest::Approx(surface).epsilon(1e-12));
        for (double l : {-2.0, 0.3, 0.8, 3.0}) {
            if (std::abs(1.0 + l * std::cos(t)) < 1e-2) continue;
            const double m = touching::ruling_parameter(fin(l), t);
            const PlanePoint p = develop_touching(fin(l), t);
            const PlanePoint q = develop_ruling_point(m, t);
            CHECK(distance(p, q) < 1e-12 * (1.0 + std::abs(m)));
        }
        if (std::abs(std::cos(t)) > 1e-2 && std::abs(t) < kTwoPiThirds) {
            const double m = touching::ruling_parameter(fin(regression::osculating_lambda(t)), t);
            CHECK(distance(develop_regression(t), develop_ruling_point(m, t)) < 1e-11 * (1.0 + std::abs(m)));
        }
    }
}

TEST_CASE("development at infinity is the limit of the finite ones") {
    for (double t : {-1.4, -0.3, 0.9, 1.2}) {
        const PlanePoint p = develop_touching(ExtendedParam::infinity(), t);
        const PlanePoint q = develop_touching(fin(1e8), t);
        CHECK(distance(p, q) < 1e-6);
    }
}

TEST_CASE("arc lengths") {
    const auto circle = arc_length_surface([](double t) { return core::circle_point_a(t); }, -kTwoPiThirds,
                                           kTwoPiThirds);
    CHECK(circle.length == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-8));
    const auto flat = arc_length_plane([](double t) { return develop_touching(fin(0.0), t); }, -kTwoPiThirds + 1e-9,
                                       kTwoPiThirds - 1e-9);
    CHECK(flat.length == doctest::Approx(4.0 * kPi / 3.0).epsilon(1e-6));
    const auto seg3 = arc_length_surface([](double m) { return core::ruling_point(m, 0.0, ZBranch::Lower); }, 0.0, 1.0);
    const auto seg2 = arc_length_plane([](double m) { return develop_ruling_point(m, 0.0); }, 0.0, 1.0);
    CHECK(seg3.length == doctest::Approx(kSqrt3).epsilon(1e-10));
    CHECK(seg2.length == doctest::Approx(kSqrt3).epsilon(1e-10));
    CHECK_THROWS_AS(arc_length_surface([](double t) { return core::circle_point_a(t); }, 1.0, 0.0), NonMonotoneError);
}

TEST_CASE("isometry of the touching-curve development") {
    const double eps = 1e-6;
    for (double l : {0.0, 0.3, 0.5, 0.7, 1.0}) {
        const auto surface = arc_length_surface(
            [l](double t) { return touching::first_branch_point(l, t); }, -kTwoPiThirds + eps, kTwoPiThirds - eps);
        const auto plane = arc_length_plane([l](double t) { return develop_touching(ExtendedParam::finite(l), t); },
                                            -kTwoPiThirds + eps, kTwoPiThirds - eps);
        CHECK(std::abs(surface.length - plane.length) / surface.length < 1e-6);
        // Polyline oracle with a fine uniform grid.
        std::vector<Point3> pts;
        const double ue = std::asin(1.0 - eps / kTwoPiThirds);
        for (int i = 0; i <= 20000; ++i) {
            const double u = -ue + 2.0 * ue * i / 20000;
            pts.push_back(touching::first_branch_point(l, kTwoPiThirds * std::sin(u)));
        }
        CHECK(std::abs(oracle::polyline_length(pts) - surface.length) / surface.length < 1e-6);
    }
}

TEST_CASE("sampled arc length") {
    std::vector<SurfaceSample> s;
    std::vector<PlaneSample> p;
    for (int i = 0; i <= 400; ++i) {
        const double t = -2.0 + 4.0 * i / 400.0;
        s.push_back({t, touching::first_branch_point(0.5, t)});
        p.push_back({t, develop_touching(fin(0.5), t)});
    }
    const auto a = arc_length_surface(s);
    const auto b = arc_length_plane(p);
    CHECK(std::abs(a.length - b.length) / a.length < 1e-6);
    CHECK(a.relative_error() < 1e-4);
    std::swap(s[3], s[4]);
    CHECK_THROWS_AS(arc_length_surface(s), NonMonotoneError);
}
