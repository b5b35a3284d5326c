#include "d2dbound/geometry.hpp"

#include "d2dbound/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

namespace d2d {

namespace {

double clamped_acos(double c, const char* where)
{
    if (!std::isfinite(c) || c > 1.0 + kArccosSlack || c < -1.0 - kArccosSlack) {
        throw DomainError(std::string(where) + ": arccos argument out of range (" + std::to_string(c) + ")");
    }
    return std::acos(std::clamp(c, -1.0, 1.0));
}

void check_pair(double R, double r, double d, const char* where)
{
    if (!(R >= 0.0) || !(r >= 0.0)) {
        throw DomainError(std::string(where) + ": radii must be non-negative");
    }
    if (!(d > 0.0)) {
        throw DomainError(std::string(where) + ": center distance must be positive");
    }
}

} // namespace

double distance(Point a, Point b) { return std::hypot(a.x - b.x, a.y - b.y); }

double chord_abscissa(double R, double r, double d)
{
    check_pair(R, r, d, "chord_abscissa");
    const double scale = std::max({R, r, d});
    const double slack = kArccosSlack * scale;
    if (d > R + r + slack || d < std::abs(R - r) - slack) {
        throw DomainError("chord_abscissa: circles do not intersect");
    }
    const double x = (d * d - r * r + R * R) / (2.0 * d);
    return std::clamp(x, -R, R);
}

double arc_length(double R, double r, double d)
{
    check_pair(R, r, d, "arc_length");
    if (R == 0.0) return 0.0;
    const double c = (d * d - r * r + R * R) / (2.0 * d * R);
    return 2.0 * R * clamped_acos(c, "arc_length");
}

double segment_area(double R, double x)
{
    if (!(R >= 0.0)) throw DomainError("segment_area: radius must be non-negative");
    if (std::abs(x) > R * (1.0 + kArccosSlack)) {
        throw DomainError("segment_area: |x| exceeds the radius");
    }
    if (R == 0.0) return 0.0;
    const double xc = std::clamp(x, -R, R);
    return R * R * std::acos(xc / R) - xc * std::sqrt(std::max(0.0, R * R - xc * xc));
}

namespace {

// phi - sin(phi) without the cancellation at small angles.
double phi_minus_sin(double phi)
{
    if (phi > 1e-2) return phi - std::sin(phi);
    const double p2 = phi * phi;
    return phi * p2 / 6.0 * (1.0 - p2 / 20.0 * (1.0 - p2 / 42.0));
}

} // namespace

double intersection_area(double R, double r, double d)
{
    if (!(R >= 0.0) || !(r >= 0.0) || !(d >= 0.0)) {
        throw DomainError("intersection_area: arguments must be non-negative");
    }
    // Order the radii so both argument orders take the same arithmetic path.
    const double big = std::max(R, r);
    const double small = std::min(R, r);
    if (d >= big + small) return 0.0;
    if (d <= big - small) return std::numbers::pi * small * small;

    // Same lens as S(big, x) + S(small, d - x), but with the half chord built from
    // factored differences so tangency and near-containment keep full precision.
    const double a = big + small - d;
    const double b = d + small - big;
    const double c = d + big - small;
    const double h = std::sqrt(std::max(0.0, a * b * c * (d + big + small))) / (2.0 * d);
    const double x_big = (d * d - small * small + big * big) / (2.0 * d);
    const double x_small = (d * d + small * small - big * big) / (2.0 * d);
    const double phi_big = 2.0 * std::atan2(h, x_big);
    const double phi_small = 2.0 * std::atan2(h, x_small);
    const double area = 0.5 * (big * big * phi_minus_sin(phi_big) + small * small * phi_minus_sin(phi_small));
    return std::clamp(area, 0.0, std::numbers::pi * small * small);
}

double intersection_area(const Circle& a, const Circle& b)
{
    return intersection_area(a.radius, b.radius, std::hypot(a.cx - b.cx, a.cy - b.cy));
}

} // namespace d2d
