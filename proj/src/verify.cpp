#include "oloid/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <limits>
#include <random>
#include <stdexcept>

#include "oloid/development.hpp"
#include "oloid/errors.hpp"
#include "oloid/geometry.hpp"
#include "oloid/oloid_core.hpp"
#include "oloid/quadric_pencil.hpp"
#include "oloid/regression_edge.hpp"
#include "oloid/ruling_lines.hpp"
#include "oloid/touching_curve.hpp"

namespace oloid::verify {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct MaxAbs {
    double value = 0.0;
    void add(double v) {
        v = std::abs(v);
        value = std::isnan(v) ? kInf : std::max(value, v);
    }
};

class Grid {
public:
    explicit Grid(std::uint64_t seed) : rng_(seed), jitter_(seed != 0) {}

    // Midpoints of n equal cells of [lo, hi], optionally moved inside their cell.
    std::vector<double> operator()(double lo, double hi, int n) {
        std::uniform_real_distribution<double> shift(-0.4, 0.4);
        std::vector<double> out;
        const double cell = (hi - lo) / n;
        for (int i = 0; i < n; ++i) out.push_back(lo + (i + 0.5 + (jitter_ ? shift(rng_) : 0.0)) * cell);
        return out;
    }

private:
    std::mt19937_64 rng_;
    bool jitter_;
};

class Suite {
public:
    Suite(std::string name, const Options& options) : options_(options), grid_(options.seed) {
        report_.suite = std::move(name);
    }
    void check(std::string name, double residual, double tolerance) {
        report_.checks.push_back({std::move(name), std::isnan(residual) ? kInf : residual,
                                  options_.tolerance.value_or(tolerance)});
    }
    Grid& grid() { return grid_; }
    SuiteReport take() { return std::move(report_); }

private:
    Options options_;
    Grid grid_;
    SuiteReport report_;
};

ExtendedParam fin(double l) { return ExtendedParam::finite(l); }

// Distance from t to the nearest pole of the touching curve (mod 8pi/3).
double pole_distance(ExtendedParam lambda, double t) {
    if (!touching::has_poles(lambda)) return kInf;
    const auto set = lambda.is_infinite() ? touching::poles_at_infinity() : touching::poles(lambda.value());
    double best = kInf;
    const double period = 2.0 * kFourPiThirds;
    for (double p : set.as_array()) {
        const double d = std::remainder(t - p, period);
        best = std::min(best, std::abs(d));
    }
    return best;
}

std::pair<Point3, Point3> closest_points(const Line3& a, const Line3& b) {
    const Vec3 w = a.base - b.base;
    const double aa = a.dir.dot(a.dir), ab = a.dir.dot(b.dir), bb = b.dir.dot(b.dir);
    const double d = a.dir.dot(w), e = b.dir.dot(w);
    const double den = aa * bb - ab * ab;
    const double s = (ab * e - bb * d) / den;
    const double u = (aa * e - ab * d) / den;
    return {a.at(s), b.at(u)};
}

double min_distance(const Point3& p, const std::vector<Point3>& set) {
    double best = kInf;
    for (const auto& q : set) best = std::min(best, distance(p, q));
    return best;
}

// Residuals of polynomial equations grow with the coordinates; samples are
// taken inside the plotting box.
bool in_box(const Point3& p, double half) {
    return std::abs(p.x) <= half && std::abs(p.y) <= half && std::abs(p.z) <= half;
}

double relative(double a, double b) { return std::abs(a - b) / std::max(1.0, std::abs(b)); }

// ---------------------------------------------------------------------------

void golden(Suite& s) {
    MaxAbs axis;
    const double r3 = kSqrt3;
    axis.add(distance(*touching::axis_points(fin(-1.0)).z1, {2.0 / r3, -0.5, 0.0}));
    axis.add(distance(*touching::axis_points(fin(2.0)).x1, {0.0, 0.5, 2.0 / r3}));
    const auto lim = touching::axis_points(ExtendedParam::infinity());
    axis.add(distance(*lim.x1, {0.0, 1.5, r3}));
    axis.add(distance(*lim.z2, {-r3, -1.5, 0.0}));
    s.check("axis points X1(2), Z1(-1), lim X1, lim Z2", axis.value, 1e-12);

    MaxAbs on_curve;
    for (double l : {-3.0, -0.5, 0.3, 1.5, 4.0}) {
        const auto ap = touching::axis_points(fin(l));
        on_curve.add(distance(*ap.x1, touching::curve_point(fin(l), 0.0).point));
        on_curve.add(distance(*ap.x2, touching::curve_point(fin(l), kFourPiThirds).point));
        on_curve.add(distance(*ap.z1, touching::curve_point(fin(l), kTwoPiThirds).point));
        on_curve.add(distance(*ap.z2, touching::curve_point(fin(l), -kTwoPiThirds).point));
    }
    s.check("axis points lie on the touching curve", on_curve.value, 1e-12);

    MaxAbs meet;
    const auto expected = regression::asymptote_intersections();
    for (int k = 1; k <= 4; ++k) {
        const auto [p, q] = closest_points(regression::asymptote(k), regression::asymptote(k % 4 + 1));
        meet.add(distance(p, q));
        meet.add(distance((p + q) * 0.5, expected[static_cast<std::size_t>(k - 1)]));
    }
    s.check("asymptote intersections S12, S23, S34, S41", meet.value, 1e-12);

    MaxAbs cusp;
    const auto c = regression::cusps();
    cusp.add(distance(regression::point_at_angle(kTwoPiThirds, ZBranch::Upper), c[0]));
    cusp.add(distance(regression::point_at_angle(-kTwoPiThirds, ZBranch::Upper), c[1]));
    cusp.add(distance(regression::point_at_angle(0.0, ZBranch::Upper), c[2]));
    cusp.add(distance(regression::point_at_angle(0.0, ZBranch::Lower), c[3]));
    s.check("cusps of the edge of regression", cusp.value, 1e-12);

    MaxAbs misc;
    misc.add(distance(regression::point_at_lambda(1.6, {-1, 1}), {-kSqrt3 / 6.0, 5.0 / 9.0, 8.0 * std::sqrt(2.0) / 9.0}));
    misc.add(rulings::contact_angle(1.6) - kPi / 3.0);
    misc.add(rulings::regression_contact_parameter(2.0) - (1.0 + r3) / r3);
    misc.add(development::h_step(kTwoPiThirds) + kTwoPiThirds);
    misc.add(development::h_step(kFourPiThirds));
    const auto d = development::develop_touching(fin(1.0), 0.0);
    misc.add(distance(d, {0.0, r3}));
    misc.add(distance(development::develop_regression(0.0), {0.0, r3}));
    s.check("closed-form example values", misc.value, 1e-12);
}

void tangency(Suite& s) {
    MaxAbs f, d1, member, disc, root, plane;
    const std::vector<double> lambdas{-3.0, -1.4, -0.5, 0.2, 0.3, 0.5, 0.8, 1.5, 2.0, 4.0, 10.0};
    for (double l : lambdas) {
        for (double t : s.grid()(-kTwoPiThirds, 2.0 * kPi, 40)) {
            if (pole_distance(fin(l), t) < 0.05) continue;
            const auto cp = touching::curve_point(fin(l), t);
            const bool first = cp.branch == touching::CurveBranch::Gamma1;
            const double u = first ? cp.t : kFourPiThirds - cp.t;
            f.add(pencil::residual(fin(l), cp.point));
            d1.add(pencil::residual_d1(l, cp.point));

            const double m0 = touching::ruling_parameter(fin(l), u);
            member.add(distance(cp.point, core::ruling_point_extended(m0, cp.t)));
            auto q = [&](double m) { return pencil::residual(fin(l), core::ruling_point_extended(m, cp.t)); };
            const double qm = q(m0 - 1.0), q0 = q(m0), qp = q(m0 + 1.0);
            const double a = 0.5 * (qp + qm) - q0, b = 0.5 * (qp - qm);
            disc.add((b * b - 4.0 * a * q0) / (a * a));
            root.add(b / (2.0 * a));

            const Vec3 g = pencil::gradient(fin(l), cp.point);
            const Vec3 dir = core::ruling_point_extended(1.0, cp.t) - core::ruling_point_extended(0.0, cp.t);
            plane.add(g.dot(dir) / (g.norm() * dir.norm()));
        }
    }
    s.check("|f| on touching curves", f.value, 1e-9);
    s.check("|df/dlambda| on touching curves", d1.value, 1e-9);
    s.check("touching point on its ruling", member.value, 1e-10);
    s.check("double root: scaled discriminant", disc.value, 1e-9);
    s.check("double root: root vs ruling parameter", root.value, 1e-9);
    s.check("ruling lies in the tangent plane", plane.value, 1e-9);
}

void czuber(Suite& s) {
    MaxAbs f, d1, d2;
    for (double t : s.grid()(0.0, kTwoPiThirds, 60)) {
        if (std::abs(t - kPi / 2.0) < 0.02) continue;
        const double l = regression::osculating_lambda(t);
        const Point3 g = regression::point_at_angle(t, ZBranch::Upper);
        f.add(pencil::residual(fin(l), g));
        d1.add(pencil::residual_d1(l, g));
        d2.add(pencil::residual_d2(l, g));
    }
    s.check("|f| on the edge of regression", f.value, 1e-8);
    s.check("|f'| on the edge of regression", d1.value, 1e-8);
    s.check("|f''| on the edge of regression", d2.value, 1e-8);

    MaxAbs equiv, inverse;
    for (double l : {-50.0, -5.0, -2.0, -1.0, -0.3, 1.2, 1.6, 2.0, 3.0, 10.0, 100.0}) {
        const double tn = regression::osculating_angle(l, regression::Side::Neg);
        const double tp = regression::osculating_angle(l, regression::Side::Pos);
        const Point3 r = regression::point_at_lambda(l);
        equiv.add(distance(r, touching::first_branch_point(l, tn)));
        equiv.add(distance(r, regression::point_at_angle(tn, ZBranch::Upper)));
        inverse.add((regression::osculating_lambda(tn) - l) / l);
        inverse.add((regression::osculating_lambda(tp) - l) / l);
    }
    s.check("edge point by angle vs by lambda", equiv.value, 1e-10);
    s.check("lambda(angle(lambda)) relative", inverse.value, 1e-10);

    MaxAbs ratio;
    for (double t : {-1.2, -0.6, 0.3, 1.0, 1.9}) {
        const Line3 line = core::generating_line(t, ZBranch::Upper);
        const double far = line.distance_to(regression::point_at_angle(t + 1e-2, ZBranch::Upper));
        const double near = line.distance_to(regression::point_at_angle(t + 1e-3, ZBranch::Upper));
        ratio.add(near / far);
    }
    s.check("ruling tangent to the edge (distance ratio over h = 1e-2, 1e-3)", ratio.value, 0.02);
}

void ruled(Suite& s) {
    MaxAbs quadric, surface, on_edge, on_curve, contact, parallel, limit;
    for (double l : {-3.0, -1.5, 1.3, 2.0, 4.0, 25.0}) {
        const double tt = rulings::contact_angle(l);
        std::vector<Line3> rulings_at;
        std::vector<Point3> edge, curve;
        for (double sign : {-1.0, 1.0}) {
            for (ZBranch zb : {ZBranch::Upper, ZBranch::Lower}) {
                rulings_at.push_back(core::generating_line(sign * tt, zb));
                edge.push_back(regression::point_at_angle(sign * tt, zb));
            }
            const Point3 c = touching::first_branch_point(l, sign * tt);
            curve.push_back(c);
            curve.push_back({c.x, c.y, -c.z});
        }
        const auto lines = rulings::common_generators(fin(l));
        for (const auto& line : lines) {
            for (double m : {-2.0, -0.5, 0.0, 1.0, 2.5}) {
                const Point3 p = line.at(m);
                quadric.add(pencil::residual(fin(l), p));
                double best = kInf;
                for (const auto& r : rulings_at) best = std::min(best, r.distance_to(p));
                surface.add(best);
            }
        }
        const auto points = rulings::tangency_points(l);
        for (std::size_t k = 0; k < 4; ++k) {
            on_edge.add(min_distance(points[k], edge));
            on_curve.add(min_distance(points[k], curve));
            contact.add(lines[k].distance_to(points[k]));
        }
        contact.add(distance(lines[0].at(rulings::regression_contact_parameter(l)), points[0]));
        const Vec3 a = lines[0].dir / lines[0].dir.norm();
        const Vec3 b = touching::first_branch_tangent(l, -tt);
        parallel.add(a.cross(b / b.norm()).norm());
    }
    const auto far = rulings::common_generators(fin(1e6));
    const auto inf = rulings::common_generators(ExtendedParam::infinity());
    for (std::size_t k = 0; k < 4; ++k) limit.add(windowed_distance(far[k], inf[k], 5.0));

    s.check("common lines on the quadric", quadric.value, 1e-9);
    s.check("common lines on the oloid", surface.value, 1e-9);
    s.check("tangency points on the edge of regression", on_edge.value, 1e-9);
    s.check("tangency points on the touching curve", on_curve.value, 1e-9);
    s.check("tangency points on the common lines", contact.value, 1e-10);
    s.check("common line tangent to the touching curve", parallel.value, 1e-9);
    s.check("common lines at 1e6 vs infinity (window 5)", limit.value, 1e-4);
}

void asymptotes(Suite& s) {
    MaxAbs scaled, shrink, at_inf;
    for (int k = 1; k <= 4; ++k) {
        const Line3 target = regression::asymptote(k);
        const double d3 = windowed_distance(touching::asymptote(fin(1e3), k), target, 5.0);
        const double d5 = windowed_distance(touching::asymptote(fin(1e5), k), target, 5.0);
        scaled.add(d3 * 1e3 / 10.0);
        scaled.add(d5 * 1e5 / 10.0);
        shrink.add(d5 / d3);
        at_inf.add(windowed_distance(touching::asymptote(ExtendedParam::infinity(), k), target, 5.0));
    }
    s.check("asymptote distance * lambda / 10 at 1e3, 1e5", scaled.value, 1.0);
    s.check("asymptote distance ratio 1e5 vs 1e3", shrink.value, 1.0 - 1e-9);
    s.check("asymptotes at infinity equal the edge asymptotes", at_inf.value, 1e-12);

    MaxAbs approach, monotone;
    for (double l : {-3.0, 2.5, 4.0, 10.0}) {
        const auto poles = touching::poles(l).as_array();
        for (int k = 1; k <= 4; ++k) {
            const Line3 line = touching::asymptote(fin(l), k);
            for (double side : {-1.0, 1.0}) {
                double prev = kInf;
                for (double eps : {1e-2, 1e-3, 1e-4}) {
                    const double t = poles[static_cast<std::size_t>(k - 1)] + side * eps;
                    const double d = line.distance_to(touching::curve_point(fin(l), t).point);
                    monotone.add(d < prev ? 0.0 : 1.0);
                    prev = d;
                }
                approach.add(prev);
            }
        }
    }
    s.check("curve to asymptote distance at 1e-4 from the pole", approach.value, 1e-3);
    s.check("curve approaches its asymptotes monotonically", monotone.value, 0.0);
}

void projection(Suite& s) {
    MaxAbs xr, yr, zr;
    for (double t : s.grid()(-kTwoPiThirds, kTwoPiThirds, 100)) {
        if (std::abs(std::abs(t) - kPi / 2.0) < 0.1) continue;
        const auto r = touching::projection_residuals_at_infinity(touching::limit_first_branch_point(t));
        xr.add(r.x_plane);
        yr.add(r.y_plane);
        zr.add(r.z_plane);
    }
    s.check("limit curve: (y+1/2)^2 - z^2 = 1", xr.value, 1e-10);
    s.check("limit curve: (x^2-z^2)^2 - 2(x^2+z^2) = 3", yr.value, 1e-10);
    s.check("limit curve: (y-1/2)^2 - x^2 = 1", zr.value, 1e-10);

    using touching::ProjectionPlane;
    MaxAbs px, py, pz;
    const auto cx = touching::projection_curve(-1.0, ProjectionPlane::X);
    const auto cy = touching::projection_curve(-1.0, ProjectionPlane::Y);
    const auto cz = touching::projection_curve(-1.0, ProjectionPlane::Z);
    for (double t : s.grid()(-kTwoPiThirds, 2.0 * kPi, 100)) {
        const Point3 p = touching::curve_point(fin(-1.0), t).point;
        if (!in_box(p, 5.0)) continue;
        px.add(cx.residual(p));
        py.add(cy.residual(p));
        pz.add(cz.residual(p));
    }
    s.check("lambda = -1, |x|,|y|,|z| <= 5: (y-1/2)^2 - 3z^2 = 1", px.value, 1e-9);
    s.check("lambda = -1: 3x^4 + 8x^2 - 64z^2 = 16", py.value, 1e-9);
    s.check("lambda = -1: y = -3x^2/8", pz.value, 1e-9);

    MaxAbs hyp, centre;
    for (double l : {-0.87, -1.4}) {
        const auto c = touching::projection_curve(l, ProjectionPlane::X);
        for (double t : s.grid()(-kTwoPiThirds, 2.0 * kPi, 100)) {
            const Point3 p = touching::curve_point(fin(l), t).point;
            if (!in_box(p, 5.0)) continue;
            hyp.add(c.residual(p));
        }
    }
    centre.add(touching::x_projection_center(-0.87) - 29831.0 / 49938.0);
    centre.add(touching::x_projection_center(-1.4) - 71.0 / 238.0);
    s.check("x = 0 projection hyperbola, lambda = -0.87, -1.4", hyp.value, 1e-9);
    s.check("hyperbola centres 29831/49938, 71/238", centre.value, 1e-12);
}

void polar(Suite& s) {
    const auto tet = pencil::self_polar_tetrahedron();
    MaxAbs incidence, polarity, dual, pencil_dual;
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (i == j) continue;
            incidence.add(std::abs(pencil::pair(tet.faces[i], tet.vertices[j])));
        }
    }
    for (double l : {-2.0, -0.5, 0.3, 0.7, 3.0}) {
        for (std::size_t i = 0; i < 4; ++i) {
            polarity.add(pencil::polar_plane(l, tet.vertices[i]).deviation(tet.faces[i]));
        }
    }
    s.check("tetrahedron vertex/face incidences", incidence.value, 1e-12);
    s.check("vertices polar to opposite faces", polarity.value, 1e-10);

    using C = pencil::Complex;
    for (double t : s.grid()(-kPi, kPi, 24)) {
        const double sn = std::sin(t), cs = std::cos(t);
        const Point3 a = core::circle_point_a(t);
        const pencil::HomElemC ua{{C(6.0 - 4.0 * a.y), C(-8.0 * a.x), C(-4.0 - 8.0 * a.y), C(0.37 * sn)}};
        dual.add(std::abs(pencil::dual_cylinder_residual(pencil::DualCylinder::A, ua)));
        const Point3 b{0.0, 0.5 + cs, sn};
        const pencil::HomElemC ub{{C(6.0 + 4.0 * b.y), C(-0.21 * cs), C(4.0 - 8.0 * b.y), C(-8.0 * b.z)}};
        dual.add(std::abs(pencil::dual_cylinder_residual(pencil::DualCylinder::B, ub)));
    }
    s.check("tangent planes of the circles lie on their dual cylinders", dual.value, 1e-12);

    for (double l : {-2.0, 0.3, 0.7, 3.0}) {
        for (double t : s.grid()(-2.0, 2.0, 9)) {
            if (pole_distance(fin(l), t) < 0.05) continue;
            const Point3 p = touching::first_branch_point(l, t);
            pencil_dual.add(std::abs(pencil::tangential_pencil_residual(l, pencil::tangent_plane(l, p).normalized())));
        }
    }
    s.check("tangent planes of Q_lambda satisfy the tangential pencil", pencil_dual.value, 1e-10);
}

void development_suite(Suite& s) {
    using development::develop_touching;
    MaxAbs special;
    const double k1 = 2.0 * kSqrt3 / 9.0, k2 = kSqrt3 / 9.0;
    for (double t : s.grid()(-kTwoPiThirds, kTwoPiThirds, 50)) {
        const double sn = std::abs(std::sin(t)), c = std::cos(t), w = std::max(1.0 + 2.0 * c, 0.0);
        const double arc = std::acos(std::clamp(std::sqrt(2.0) * c / std::sqrt(1.0 + c), -1.0, 1.0));
        const double lg = std::log(2.0 / (1.0 + c));
        const double sg = sgn(t);
        const PlanePoint p0{sg * k1 * (arc + sn * std::sqrt(2.0 * w) / std::sqrt(1.0 + c)), k2 * (lg + 4.0 * (1.0 - c))};
        const PlanePoint p1{sg * k1 * (arc - sn * std::sqrt(2.0 * w) / std::pow(1.0 + c, 1.5)),
                            k2 * (lg + (11.0 + 7.0 * c) / (1.0 + c))};
        const PlanePoint ph{sg * k1 * arc, k2 * (lg + 3.0 * (5.0 + c) / (2.0 + c))};
        special.add(distance(develop_touching(fin(0.0), t), p0));
        special.add(distance(develop_touching(fin(1.0), t), p1));
        special.add(distance(develop_touching(fin(0.5), t), ph));
    }
    s.check("general development vs lambda = 0, 1, 1/2 forms", special.value, 1e-12);

    MaxAbs iso;
    constexpr double eps = 1e-4;
    for (double l : {0.0, 0.3, 0.5, 0.7, 1.0}) {
        auto surface = [l](double t) { return touching::first_branch_point(l, t); };
        auto plane = [l](double t) { return develop_touching(fin(l), t); };
        const auto a = development::arc_length_surface(surface, -kTwoPiThirds + eps, kTwoPiThirds - eps);
        const auto b = development::arc_length_plane(plane, -kTwoPiThirds + eps, kTwoPiThirds - eps);
        iso.add((a.length - b.length) / a.length);
    }
    s.check("isometry: surface vs plane arc length (relative)", iso.value, 1e-6);

    MaxAbs period, odd, edge, ruling;
    for (double t : s.grid()(-kTwoPiThirds, kTwoPiThirds, 50)) {
        for (auto l : {fin(0.0), fin(0.3), fin(0.5), fin(1.0), fin(-0.5)}) {
            const auto p = develop_touching(l, t);
            const auto q = develop_touching(l, t + kFourPiThirds);
            period.add(q.xi - p.xi - development::kXiPeriod);
            period.add(q.eta - p.eta);
            const auto m = develop_touching(l, -t);
            odd.add(m.xi + p.xi);
            odd.add(m.eta - p.eta);
        }
        if (std::abs(std::abs(t) - kPi / 2.0) > 0.05) {
            edge.add(distance(development::develop_regression(t),
                              develop_touching(fin(regression::osculating_lambda(t)), t)));
        }
        for (double l : {-0.5, 0.3, 0.7, 1.5}) {
            const double psi = touching::ruling_parameter(fin(l), t);
            ruling.add(distance(develop_touching(fin(l), t), development::develop_ruling_point(psi, t)));
        }
    }
    s.check("xi period 4pi/(3 sqrt3), eta periodic", period.value, 1e-12);
    s.check("xi odd, eta even", odd.value, 1e-12);
    s.check("developed edge of regression on developed touching curves", edge.value, 1e-10);
    s.check("touching curves develop along straight rulings", ruling.value, 1e-10);
}

void area(Suite& s) {
    // Area element |(B - A) x ((1 - m) A' + m B')| integrated over m in [0, 1]
    // and t = (2pi/3) sin u, which removes the square-root endpoint behaviour.
    static constexpr std::array<double, 8> x{-0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
                                      -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
                                      0.7966664774136267,  0.9602898564975363};
    static constexpr std::array<double, 8> wgt{0.1012285362903763, 0.2223810344533745, 0.3137066553962359,
                                        0.3626837833783620, 0.3626837833783620, 0.3137066553962359,
                                        0.2223810344533745, 0.1012285362903763};
    auto element = [](double u) {
        const double t = kTwoPiThirds * std::sin(u);
        const double sn = std::sin(t), c = std::cos(t), w = 1.0 + 2.0 * c, rw = std::sqrt(w);
        const Vec3 a{sn, -0.5 - c, 0.0}, da{c, sn, 0.0};
        const Vec3 b{0.0, 0.5 - c / (1.0 + c), rw / (1.0 + c)};
        const Vec3 db{0.0, sn / ((1.0 + c) * (1.0 + c)), sn * c / (rw * (1.0 + c) * (1.0 + c))};
        const double jac = kTwoPiThirds * std::cos(u);
        double sum = 0.0;
        for (std::size_t i = 0; i < 8; ++i) {
            const double m = 0.5 * (x[i] + 1.0);
            sum += 0.5 * wgt[i] * (b - a).cross((da * (1.0 - m) + db * m) * jac).norm();
        }
        return sum;
    };
    constexpr int panels = 64;
    double total = 0.0;
    const double h = kPi / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = -kPi / 2.0 + p * h;
        for (std::size_t i = 0; i < 8; ++i) total += 0.5 * h * wgt[i] * element(lo + 0.5 * h * (x[i] + 1.0));
    }
    total *= 2.0;  // both z-branches
    s.check("oloid surface area vs 4 pi (relative)", std::abs(total - 4.0 * kPi) / (4.0 * kPi), 1e-4);
}

void derivatives(Suite& s) {
    constexpr double h = 1e-5;
    MaxAbs tangent, first, second;
    for (double l : {-3.0, -0.5, 0.3, 0.5, 0.7, 1.5, 4.0}) {
        for (double t : s.grid()(-kTwoPiThirds + 0.05, kTwoPiThirds - 0.05, 30)) {
            if (pole_distance(fin(l), t) < 0.05) continue;
            const Vec3 exact = touching::first_branch_tangent(l, t);
            const Vec3 fd = (touching::first_branch_point(l, t + h) - touching::first_branch_point(l, t - h)) / (2.0 * h);
            tangent.add((exact - fd).norm() / std::max(1.0, exact.norm()));
        }
    }
    for (double t : s.grid()(-kTwoPiThirds + 0.05, kTwoPiThirds - 0.05, 30)) {
        if (std::abs(std::abs(t) - kPi / 2.0) < 0.05) continue;
        const Vec3 exact = touching::limit_first_branch_tangent(t);
        const Vec3 fd = (touching::limit_first_branch_point(t + h) - touching::limit_first_branch_point(t - h)) / (2.0 * h);
        tangent.add((exact - fd).norm() / std::max(1.0, exact.norm()));
    }
    s.check("curve tangent vs central differences", tangent.value, 1e-6);

    for (double l : {-3.0, -0.5, 0.3, 0.7, 1.5, 4.0}) {
        for (double x0 : {-1.0, 0.4}) {
            for (double y0 : {-0.7, 0.2, 1.1}) {
                for (double z0 : {-0.9, 0.6}) {
                    const Point3 p{x0, y0, z0};
                    const double fd1 =
                        (pencil::residual(fin(l + h), p) - pencil::residual(fin(l - h), p)) / (2.0 * h);
                    const double fd2 = (pencil::residual_d1(l + h, p) - pencil::residual_d1(l - h, p)) / (2.0 * h);
                    first.add(relative(pencil::residual_d1(l, p), fd1));
                    second.add(relative(pencil::residual_d2(l, p), fd2));
                }
            }
        }
    }
    s.check("df/dlambda vs central differences", first.value, 1e-6);
    s.check("d2f/dlambda2 vs central differences", second.value, 1e-6);
}

struct Entry {
    std::string name;
    std::function<void(Suite&)> run;
};

const std::vector<Entry>& registry() {
    static const std::vector<Entry> entries{
        {"golden", golden},       {"tangency", tangency},     {"czuber", czuber},
        {"ruled", ruled},         {"asymptotes", asymptotes}, {"projection", projection},
        {"polar", polar},         {"development", development_suite},
        {"area", area},           {"derivatives", derivatives}};
    return entries;
}

}  // namespace

bool SuiteReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& e : registry()) out.push_back(e.name);
        return out;
    }();
    return names;
}

SuiteReport run_suite(std::string_view name, const Options& options) {
    for (const auto& e : registry()) {
        if (e.name != name) continue;
        const auto start = std::chrono::steady_clock::now();
        Suite suite(e.name, options);
        e.run(suite);
        SuiteReport report = suite.take();
        report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return report;
    }
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
}

std::vector<SuiteReport> run_all(const Options& options) {
    std::vector<SuiteReport> out;
    for (const auto& e : registry()) out.push_back(run_suite(e.name, options));
    return out;
}

std::string format_report(const std::vector<SuiteReport>& reports) {
    std::string out;
    char buf[256];
    std::size_t failed = 0, total = 0;
    for (const auto& r : reports) {
        std::snprintf(buf, sizeof buf, "== %s (%.2f s)\n", r.suite.c_str(), r.seconds);
        out += buf;
        for (const auto& c : r.checks) {
            ++total;
            if (!c.passed()) ++failed;
            std::snprintf(buf, sizeof buf, "  [%s] %-62s max %.3e  tol %.1e\n", c.passed() ? "PASS" : "FAIL",
                          c.name.c_str(), c.max_residual, c.tolerance);
            out += buf;
        }
    }
    std::snprintf(buf, sizeof buf, "%zu checks, %zu failed\n", total, failed);
    out += buf;
    return out;
}

}  // namespace oloid::verify
