#pragma once

namespace d2d {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

double distance(Point a, Point b);

struct Circle {
    double cx = 0.0;
    double cy = 0.0;
    double radius = 0.0;
};

// Two circles of radius R (at the origin) and r (at (d, 0)).

/// Abscissa of the intersection chord, (d^2 - r^2 + R^2) / 2d.
double chord_abscissa(double R, double r, double d);

/// Length of the arc of the R circle lying inside the r circle.
double arc_length(double R, double r, double d);

/// Area of the circular segment of a radius-R disk cut by the chord at abscissa x.
double segment_area(double R, double x);

/// Overlap area of the two disks. Total on R, r, d >= 0.
double intersection_area(double R, double r, double d);
double intersection_area(const Circle& a, const Circle& b);

/// Tolerance for clamping arccos arguments that drift past +-1.
inline constexpr double kArccosSlack = 1e-12;

} // namespace d2d
