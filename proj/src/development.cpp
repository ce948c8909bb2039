#include "oloid/development.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "oloid/errors.hpp"
#include "oloid/numeric.hpp"

namespace oloid::development {

namespace {

constexpr double kLength = 2.0 * kSqrt3 / 9.0;
constexpr double kHeight = kSqrt3 / 9.0;

struct Trig {
    double s, c, w;
};

Trig reduced_trig(double h) {
    const double c = std::cos(h);
    return {std::sin(h), c, std::max(one_plus_two_cos(h), 0.0)};
}

// arccos(sqrt2 c / sqrt(1 + c)), evaluated as an atan2 that stays accurate
// where the arccos argument approaches 1.
double sweep(double h, double c, double w) { return std::atan2(std::abs(std::sin(h / 2.0)) * std::sqrt(w), c); }

void require_nonzero(double denom, double scale, const char* what, double t) {
    if (std::abs(denom) <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(scale))) {
        throw PoleError(std::string(what) + " vanishes at t = " + std::to_string(t));
    }
}

PlanePoint assemble(const ReducedAngle& r, double xi_half, double eta) {
    return {static_cast<double>(r.period) * kXiPeriod + sgn(r.h) * xi_half, eta};
}

Vec3 lift(const PlanePoint& p) { return {p.xi, p.eta, 0.0}; }

ArcLength speed_integral(const std::function<Vec3(double)>& path, double a, double b, double tol) {
    if (!(a < b)) {
        throw NonMonotoneError("arc length needs an increasing parameter range, got [" + std::to_string(a) + ", " +
                               std::to_string(b) + "]");
    }
    // t = a + (b - a)(1 - cos(pi s))/2 has dt/ds vanishing like the square
    // root of the distance to either end, which cancels the 1/sqrt speed
    // singularities of curves ending on the boundary of the ruling domain.
    // The central-difference step stays well inside [a, b] so that it never
    // straddles such a singularity.
    auto speed = [&](double s) {
        const double t = a + (b - a) * 0.5 * (1.0 - std::cos(kPi * s));
        const double dt = (b - a) * 0.5 * kPi * std::sin(kPi * s);
        const double h = std::min(1e-6 * (1.0 + std::abs(t)), 0.01 * std::min(t - a, b - t));
        if (!(h > 0.0) || dt == 0.0) return 0.0;
        return ((path(t + h) - path(t - h)) * (1.0 / (2.0 * h))).norm() * dt;
    };
    const auto q = numeric::adaptive_simpson(speed, 0.0, 1.0, tol);
    return {q.value, q.error_estimate};
}

template <class Sample, class Lift>
ArcLength chord_richardson(std::span<const Sample> samples, Lift lift_point) {
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i].t > samples[i - 1].t)) {
            throw NonMonotoneError("sample parameters must increase strictly (index " + std::to_string(i) + ")");
        }
    }
    if (samples.size() < 2) return {};
    double fine = 0.0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        fine += distance(lift_point(samples[i].p), lift_point(samples[i - 1].p));
    }
    if (samples.size() < 3) return {fine, fine};
    double coarse = 0.0;
    std::size_t last = 0;
    for (std::size_t i = 2; i < samples.size(); i += 2) {
        coarse += distance(lift_point(samples[i].p), lift_point(samples[last].p));
        last = i;
    }
    if (last != samples.size() - 1) coarse += distance(lift_point(samples.back().p), lift_point(samples[last].p));
    const double correction = (fine - coarse) / 3.0;
    return {fine + correction, std::abs(correction)};
}

}  // namespace

ReducedAngle reduce_angle(double t) {
    const double q = 3.0 * std::abs(t) / (4.0 * kPi) + 0.5;
    double steps = std::floor(q);
    if (std::ceil(q) - q < 1e-12) steps = std::ceil(q);
    const long period = static_cast<long>(sgn(t) * steps);
    return {t - static_cast<double>(period) * kFourPiThirds, period};
}

PlanePoint develop_touching(ExtendedParam lambda, double t) {
    const ReducedAngle r = reduce_angle(t);
    const auto [s, c, w] = reduced_trig(r.h);
    const double root = std::sqrt(2.0 * w) * std::abs(s);
    const double log_term = std::log(2.0 / (1.0 + c));
    if (lambda.is_infinite()) {
        require_nonzero(c, 1.0, "cos h(t)", t);
        const double xi = kLength * (sweep(r.h, c, w) - 2.0 * root / (c * std::sqrt(1.0 + c)));
        const double eta = kHeight * (log_term + (7.0 + 11.0 * c) / c);
        return assemble(r, xi, eta);
    }
    const double l = lambda.value();
    const double d = 1.0 + l * c;
    require_nonzero(d, l, "1 + lambda cos h(t)", t);
    const double xi = kLength * (sweep(r.h, c, w) + (1.0 - 2.0 * l) * root / (d * std::sqrt(1.0 + c)));
    const double eta = kHeight * (log_term + (4.0 + 7.0 * l + (11.0 * l - 4.0) * c) / d);
    return assemble(r, xi, eta);
}

PlanePoint develop_regression(double t) {
    const ReducedAngle r = reduce_angle(t);
    const auto [s, c, w] = reduced_trig(r.h);
    require_nonzero(c, 1.0, "cos h(t)", t);
    const double opc = 1.0 + c;
    const double xi = kLength * (sweep(r.h, c, w) - (2.0 + 2.0 * c - c * c) * std::sqrt(2.0 * w) * std::abs(s) /
                                                 (3.0 * c * opc * std::sqrt(opc)));
    const double eta =
        kHeight * (std::log(2.0 / opc) + (7.0 + 33.0 * c + 18.0 * c * c - 4.0 * c * c * c) / (3.0 * c * opc));
    return assemble(r, xi, eta);
}

PlanePoint develop_ruling_point(double m, double t) {
    const PlanePoint a = develop_touching(ExtendedParam::finite(0.0), t);
    const PlanePoint b = develop_touching(ExtendedParam::finite(1.0), t);
    return {(1.0 - m) * a.xi + m * b.xi, (1.0 - m) * a.eta + m * b.eta};
}

ArcLength arc_length_surface(const std::function<Point3(double)>& path, double a, double b, double tol) {
    return speed_integral(path, a, b, tol);
}

ArcLength arc_length_plane(const std::function<PlanePoint(double)>& path, double a, double b, double tol) {
    return speed_integral([&](double t) { return lift(path(t)); }, a, b, tol);
}

ArcLength arc_length_surface(std::span<const SurfaceSample> samples) {
    return chord_richardson(samples, [](const Point3& p) { return p; });
}

ArcLength arc_length_plane(std::span<const PlaneSample> samples) {
    return chord_richardson(samples, lift);
}

}  // namespace oloid::development
