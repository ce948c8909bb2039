#include "oloid/sampling.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <limits>
#include <stdexcept>
#include <type_traits>

#include "oloid/development.hpp"
#include "oloid/errors.hpp"
#include "oloid/oloid_core.hpp"
#include "oloid/quadric_pencil.hpp"
#include "oloid/regression_edge.hpp"
#include "oloid/ruling_lines.hpp"
#include "oloid/touching_curve.hpp"

namespace oloid::sampling {

namespace {

struct Named {
    ObjectKind kind;
    std::string_view name;
};

constexpr std::array<Named, 8> kNames{{{ObjectKind::Oloid, "oloid"},
                                       {ObjectKind::Quadric, "quadric"},
                                       {ObjectKind::Touching, "touching"},
                                       {ObjectKind::Regression, "regression"},
                                       {ObjectKind::Asymptotes, "asymptotes"},
                                       {ObjectKind::Generators, "generators"},
                                       {ObjectKind::DevTouching, "dev-touching"},
                                       {ObjectKind::DevRegression, "dev-regression"}}};

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> out(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = i == n - 1 ? hi : lo + (hi - lo) * i / (n - 1);
    return out;
}

// Uniform grid bent so that samples crowd towards the given breakpoints.
std::vector<double> cosine_grid(double lo, double hi, int n, std::vector<double> breaks) {
    breaks.push_back(lo);
    breaks.push_back(hi);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::remove_if(breaks.begin(), breaks.end(), [&](double b) { return b < lo || b > hi; }),
                 breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    std::vector<double> out = linspace(lo, hi, n);
    for (double& u : out) {
        auto it = std::upper_bound(breaks.begin(), breaks.end(), u);
        if (it == breaks.begin() || it == breaks.end()) continue;
        const double a = *(it - 1);
        const double b = *it;
        u = a + (b - a) * 0.5 * (1.0 - std::cos(kPi * (u - a) / (b - a)));
    }
    return out;
}

// All values base + k * period inside [lo, hi].
std::vector<double> periodic_hits(const std::vector<double>& bases, double period, double lo, double hi) {
    std::vector<double> out;
    for (double b : bases) {
        for (double k = std::ceil((lo - b) / period); b + k * period <= hi; k += 1.0) out.push_back(b + k * period);
    }
    std::sort(out.begin(), out.end());
    return out;
}

class Builder {
public:
    Builder(std::string object, std::string lambda) : object_(std::move(object)), lambda_(std::move(lambda)) {}

    void point(const std::string& branch, double t, std::vector<double> coords) {
        rows_.push_back({object_, lambda_, branch, t, std::move(coords)});
    }

    void gap(double t) {
        if (rows_.empty() || rows_.back().is_gap()) return;
        rows_.push_back({object_, lambda_, std::string(kGapBranch), t, {}});
    }

    // Samples eval over ts, replacing pole neighbourhoods and undefined
    // points by gaps and separating the pieces on either side of a pole.
    template <class Branch, class Eval>
    void trace(const Branch& branch, const std::vector<double>& ts, const std::vector<double>& poles,
               double eps, Eval eval) {
        double prev = -std::numeric_limits<double>::infinity();
        for (double t : ts) {
            const auto crossed = std::find_if(poles.begin(), poles.end(), [&](double p) { return p > prev && p < t; });
            if (crossed != poles.end()) gap(*crossed);
            prev = t;
            if (std::any_of(poles.begin(), poles.end(), [&](double p) { return std::abs(t - p) < eps; })) {
                gap(t);
                continue;
            }
            try {
                if constexpr (std::is_invocable_v<Branch, double>) {
                    point(branch(t), t, eval(t));
                } else {
                    point(branch, t, eval(t));
                }
            } catch (const PoleError&) {
                gap(t);
            } catch (const DomainError&) {
                gap(t);
            } catch (const BoundaryError&) {
                gap(t);
            }
        }
    }

    std::vector<Row> finish() {
        if (!rows_.empty() && rows_.back().is_gap()) rows_.pop_back();
        return std::move(rows_);
    }

private:
    std::string object_;
    std::string lambda_;
    std::vector<Row> rows_;
};

std::vector<double> xyz(const Point3& p) { return {p.x, p.y, p.z}; }
std::vector<double> plane(const PlanePoint& p) { return {p.xi, p.eta}; }

std::vector<double> touching_poles(ExtendedParam lambda, const Range& r) {
    if (!touching::has_poles(lambda)) return {};
    const auto set = lambda.is_infinite() ? touching::poles_at_infinity() : touching::poles(lambda.value());
    const auto a = set.as_array();
    return periodic_hits({a.begin(), a.end()}, 2.0 * kFourPiThirds, r.lo, r.hi);
}

std::vector<double> development_poles(ExtendedParam lambda, const Range& r) {
    if (!touching::has_poles(lambda)) return {};
    const double a = lambda.is_infinite() ? kPi / 2.0 : touching::poles(lambda.value()).t2;
    return periodic_hits({-a, a}, kFourPiThirds, r.lo, r.hi);
}

void sample_quadric(Builder& out, ExtendedParam lambda, const Range& r, int n) {
    const auto ts = linspace(r.lo, r.hi, n);
    const auto cls = pencil::classify(lambda);
    if (cls == pencil::QuadricClass::CircleKA) {
        out.trace("circle", ts, {}, 0.0, [](double t) { return xyz(core::circle_point_a(t)); });
        return;
    }
    if (cls == pencil::QuadricClass::CircleKB) {
        out.trace("circle", ts, {}, 0.0,
                  [](double t) { return std::vector<double>{0.0, 0.5 + std::cos(t), std::sin(t)}; });
        return;
    }
    constexpr int kCurves = 12;
    for (int j = 0; j < kCurves; ++j) {
        const double theta = j * kPi / 6.0;
        const double ct = std::cos(theta);
        const double st = std::sin(theta);
        std::function<std::vector<double>(double)> eval;
        if (cls == pencil::QuadricClass::HyperbolicParaboloid) {
            eval = [=](double s) {
                return std::vector<double>{s * ct, s * s * (st * st - ct * ct) / 2.0, s * st};
            };
        } else {
            const double l = lambda.value();
            const double y0 = l - 0.5;
            const double a = std::sqrt(std::abs(1.0 - l));
            const double b = std::sqrt(1.0 - l + l * l);
            const double c = std::sqrt(std::abs(l));
            if (cls == pencil::QuadricClass::Ellipsoid) {
                eval = [=](double phi) {
                    return std::vector<double>{a * std::sin(phi) * ct, y0 + b * std::cos(phi), c * std::sin(phi) * st};
                };
            } else if (cls == pencil::QuadricClass::HyperboloidOneSheetXYSpine) {
                eval = [=](double v) {
                    return std::vector<double>{a * std::cosh(v) * ct, y0 + b * std::cosh(v) * st, c * std::sinh(v)};
                };
            } else {
                eval = [=](double v) {
                    return std::vector<double>{a * std::sinh(v), y0 + b * std::cosh(v) * ct, c * std::cosh(v) * st};
                };
            }
        }
        out.trace("curve-" + std::to_string(j + 1), ts, {}, 0.0, eval);
        out.gap(ts.back());
    }
}

void sample_lines(Builder& out, const std::array<Line3, 4>& lines, const char* prefix, const Range& r, int n) {
    const auto ts = linspace(r.lo, r.hi, n);
    for (std::size_t k = 0; k < 4; ++k) {
        const Line3 line = lines[k];
        out.trace(prefix + std::to_string(k + 1), ts, {}, 0.0, [&](double s) { return xyz(line.at(s)); });
        out.gap(ts.back());
    }
}

}  // namespace

std::optional<ObjectKind> parse_object(std::string_view name) {
    for (const auto& e : kNames) {
        if (e.name == name) return e.kind;
    }
    return std::nullopt;
}

std::string_view to_string(ObjectKind kind) {
    for (const auto& e : kNames) {
        if (e.kind == kind) return e.name;
    }
    return "?";
}

bool is_planar(ObjectKind kind) { return kind == ObjectKind::DevTouching || kind == ObjectKind::DevRegression; }

bool uses_lambda(ObjectKind kind) {
    return kind != ObjectKind::Oloid && kind != ObjectKind::Regression && kind != ObjectKind::DevRegression;
}

Range default_range(ObjectKind kind, ExtendedParam lambda) {
    switch (kind) {
        case ObjectKind::Touching: return {-kTwoPiThirds, 2.0 * kPi};
        case ObjectKind::Oloid:
        case ObjectKind::Regression:
        case ObjectKind::DevTouching:
        case ObjectKind::DevRegression: return {-kTwoPiThirds, kTwoPiThirds};
        case ObjectKind::Asymptotes:
        case ObjectKind::Generators: return {-3.0, 3.0};
        case ObjectKind::Quadric:
            switch (pencil::classify(lambda)) {
                case pencil::QuadricClass::Ellipsoid: return {0.0, kPi};
                case pencil::QuadricClass::HyperbolicParaboloid: return {0.0, 3.0};
                case pencil::QuadricClass::CircleKA:
                case pencil::QuadricClass::CircleKB: return {-kPi, kPi};
                default: return {-1.5, 1.5};
            }
    }
    return {0.0, 1.0};
}

std::vector<Row> sample(const Request& req) {
    if (req.n < 2) throw std::invalid_argument("--n must be at least 2");
    const Range def = default_range(req.object, req.lambda);
    const Range r{req.t_min.value_or(def.lo), req.t_max.value_or(def.hi)};
    if (!(r.lo < r.hi)) throw std::invalid_argument("empty parameter range");
    const ExtendedParam lambda = req.lambda;
    Builder out(std::string(to_string(req.object)), uses_lambda(req.object) ? lambda.to_string() : std::string());
    const double eps = req.pole_exclusion;

    switch (req.object) {
        case ObjectKind::Touching: {
            auto branch = [](double t) {
                return std::string(core::in_first_interval(core::reduce_curve_parameter(t)) ? "gamma1" : "gamma2");
            };
            out.trace(branch, linspace(r.lo, r.hi, req.n), touching_poles(lambda, r), eps, [&](double t) {
                return xyz(touching::curve_point(lambda, t).point);
            });
            break;
        }
        case ObjectKind::Regression: {
            const auto ts = cosine_grid(r.lo, r.hi, req.n, {-kTwoPiThirds, 0.0, kTwoPiThirds});
            const auto poles = periodic_hits({-kPi / 2.0, kPi / 2.0}, 2.0 * kPi, r.lo, r.hi);
            for (ZBranch zb : {ZBranch::Upper, ZBranch::Lower}) {
                out.trace(zb == ZBranch::Upper ? "upper" : "lower", ts, poles, eps,
                          [&](double t) { return xyz(regression::point_at_angle(t, zb)); });
                out.gap(r.hi);
            }
            break;
        }
        case ObjectKind::Oloid: {
            for (ZBranch zb : {ZBranch::Upper, ZBranch::Lower}) {
                const std::string branch = zb == ZBranch::Upper ? "ruling-upper" : "ruling-lower";
                for (double t : linspace(r.lo, r.hi, req.n)) {
                    out.point(branch, t, xyz(core::ruling_point(0.0, t, zb)));
                    out.point(branch, t, xyz(core::ruling_point(1.0, t, zb)));
                    out.gap(t);
                }
            }
            const auto angles = linspace(-kPi, kPi, req.n);
            out.trace("circle-a", angles, {}, 0.0, [](double t) { return xyz(core::circle_point_a(t)); });
            out.gap(kPi);
            out.trace("circle-b", angles, {}, 0.0,
                      [](double t) { return std::vector<double>{0.0, 0.5 + std::cos(t), std::sin(t)}; });
            break;
        }
        case ObjectKind::Quadric: sample_quadric(out, lambda, r, req.n); break;
        case ObjectKind::Asymptotes: {
            std::array<Line3, 4> lines;
            for (int k = 1; k <= 4; ++k) lines[static_cast<std::size_t>(k - 1)] = touching::asymptote(lambda, k);
            sample_lines(out, lines, "A", r, req.n);
            break;
        }
        case ObjectKind::Generators: sample_lines(out, rulings::common_generators(lambda), "G", r, req.n); break;
        case ObjectKind::DevTouching: {
            out.trace(std::string("curve"), linspace(r.lo, r.hi, req.n), development_poles(lambda, r), eps,
                      [&](double t) { return plane(development::develop_touching(lambda, t)); });
            break;
        }
        case ObjectKind::DevRegression: {
            const auto poles = periodic_hits({-kPi / 2.0, kPi / 2.0}, kFourPiThirds, r.lo, r.hi);
            const auto cusps = periodic_hits({-kTwoPiThirds, 0.0, kTwoPiThirds}, kFourPiThirds, r.lo, r.hi);
            out.trace("curve", cosine_grid(r.lo, r.hi, req.n, cusps), poles, eps,
                      [](double t) { return plane(development::develop_regression(t)); });
            break;
        }
    }
    return out.finish();
}

}  // namespace oloid::sampling
