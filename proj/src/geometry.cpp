#include "oloid/geometry.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>

namespace oloid {

double Line3::distance_to(const Point3& p) const {
    return (p - base).cross(dir).norm() / dir.norm();
}

Point3 Line3::project(const Point3& p) const {
    return base + dir * ((p - base).dot(dir) / dir.dot(dir));
}

namespace {

// Max distance from the in-ball chord of `a` to the line `b`. Distance to a
// line is convex along a segment, so the chord endpoints suffice.
double one_sided(const Line3& a, const Line3& b, double radius) {
    const Point3 foot = a.project(Point3{});
    const double r2 = radius * radius - foot.dot(foot);
    if (r2 <= 0.0) return b.distance_to(foot);
    const Vec3 u = a.dir / a.dir.norm();
    const double half = std::sqrt(r2);
    return std::max(b.distance_to(foot + u * half), b.distance_to(foot - u * half));
}

}  // namespace

double windowed_distance(const Line3& a, const Line3& b, double radius) {
    return std::max(one_sided(a, b, radius), one_sided(b, a, radius));
}

std::optional<ExtendedParam> ExtendedParam::parse(std::string_view text) {
    std::string lower;
    lower.reserve(text.size());
    for (char c : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
    if (lower == "inf" || lower == "+inf" || lower == "-inf" || lower == "infinity" ||
        lower == "+infinity" || lower == "-infinity") {
        return infinity();
    }
    double v = 0.0;
    const char* first = lower.data();
    const char* last = lower.data() + lower.size();
    if (!lower.empty() && *first == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || !std::isfinite(v)) return std::nullopt;
    return finite(v);
}

std::string ExtendedParam::to_string() const {
    if (infinite_) return "inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", value_);
    return buf;
}

double normalize_angle(double t) {
    if (!std::isfinite(t)) throw std::invalid_argument("angle must be finite");
    double r = std::remainder(t, 2.0 * kPi);  // [-pi, pi]
    if (r <= -kPi) r += 2.0 * kPi;
    return r;
}

}  // namespace oloid
