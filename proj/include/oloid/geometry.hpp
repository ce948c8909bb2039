#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <string>
#include <string_view>

namespace oloid {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPiThirds = 2.0 * std::numbers::pi / 3.0;
inline constexpr double kFourPiThirds = 4.0 * std::numbers::pi / 3.0;
inline constexpr double kSqrt3 = std::numbers::sqrt3;

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Vec3 operator+(const Vec3& o) const { return {x + o.x, y + o.y, z + o.z}; }
    constexpr Vec3 operator-(const Vec3& o) const { return {x - o.x, y - o.y, z - o.z}; }
    constexpr Vec3 operator-() const { return {-x, -y, -z}; }
    constexpr Vec3 operator*(double s) const { return {x * s, y * s, z * s}; }
    constexpr Vec3 operator/(double s) const { return {x / s, y / s, z / s}; }
    constexpr bool operator==(const Vec3&) const = default;

    constexpr double dot(const Vec3& o) const { return x * o.x + y * o.y + z * o.z; }
    constexpr Vec3 cross(const Vec3& o) const {
        return {y * o.z - z * o.y, z * o.x - x * o.z, x * o.y - y * o.x};
    }
    double norm() const { return std::sqrt(dot(*this)); }
    bool finite() const { return std::isfinite(x) && std::isfinite(y) && std::isfinite(z); }
};

constexpr Vec3 operator*(double s, const Vec3& v) { return v * s; }

// Points and directions share a representation; the alias documents intent.
using Point3 = Vec3;

inline double distance(const Point3& a, const Point3& b) { return (a - b).norm(); }

// Affine line {base + s * dir}.
struct Line3 {
    Point3 base;
    Vec3 dir;

    Point3 at(double s) const { return base + dir * s; }
    double distance_to(const Point3& p) const;
    // Point of the line closest to p.
    Point3 project(const Point3& p) const;
};

// Max distance between the parts of two lines inside the ball of the given
// radius around the origin (symmetrised). Lines missing the ball are measured
// at their point closest to the origin.
double windowed_distance(const Line3& a, const Line3& b, double radius);

// Coordinates in the development plane; the eta axis carries the developed
// ruling at t = 0.
struct PlanePoint {
    double xi = 0.0;
    double eta = 0.0;

    constexpr bool operator==(const PlanePoint&) const = default;
    bool finite() const { return std::isfinite(xi) && std::isfinite(eta); }
};

inline double distance(const PlanePoint& a, const PlanePoint& b) {
    return std::hypot(a.xi - b.xi, a.eta - b.eta);
}

// Selects the z -> -z mirror copy of a ruling.
enum class ZBranch : int { Upper = 1, Lower = -1 };

constexpr double sign_of(ZBranch b) { return b == ZBranch::Upper ? 1.0 : -1.0; }

// The family parameter: a finite real or the single point at infinity.
class ExtendedParam {
public:
    static constexpr ExtendedParam finite(double lambda) { return ExtendedParam(lambda, false); }
    static constexpr ExtendedParam infinity() { return ExtendedParam(0.0, true); }

    constexpr bool is_infinite() const { return infinite_; }
    // Precondition: !is_infinite().
    constexpr double value() const { return value_; }

    constexpr bool operator==(const ExtendedParam&) const = default;

    // Accepts decimal reals and "inf", "+inf", "-inf", "infinity" (any case).
    static std::optional<ExtendedParam> parse(std::string_view text);
    std::string to_string() const;

private:
    constexpr ExtendedParam(double v, bool inf) : value_(v), infinite_(inf) {}
    double value_;
    bool infinite_;
};

// Slack for residual checks. The formulas are exact, so these only absorb
// floating-point error.
struct Tolerance {
    double abs = 1e-10;
    double rel = 1e-10;

    bool accepts(double residual, double scale = 0.0) const {
        return std::abs(residual) <= abs + rel * std::abs(scale);
    }
};

// Maps an arbitrary angle to (-pi, pi].
double normalize_angle(double t);

// 1 + 2 cos t written as a product of sines, accurate near its zeros at
// t = +-2pi/3.
inline double one_plus_two_cos(double t) {
    return 4.0 * std::sin((kTwoPiThirds + t) / 2.0) * std::sin((kTwoPiThirds - t) / 2.0);
}

// Signum with sgn(0) = 0.
constexpr double sgn(double v) { return v > 0.0 ? 1.0 : (v < 0.0 ? -1.0 : 0.0); }

}  // namespace oloid
