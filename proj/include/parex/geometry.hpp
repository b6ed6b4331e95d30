#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <vector>

namespace parex {

using complex_t = std::complex<double>;

struct Vec2 {
    double x = 0.0, y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double a) const { return {a * x, a * y}; }
    double dot(Vec2 o) const { return x * o.x + y * o.y; }
    double norm() const { return std::hypot(x, y); }
};

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;

    Vec3 operator+(Vec3 o) const { return {x + o.x, y + o.y, z + o.z}; }
    Vec3 operator-(Vec3 o) const { return {x - o.x, y - o.y, z - o.z}; }
    Vec3 operator*(double a) const { return {a * x, a * y, a * z}; }
    double dot(Vec3 o) const { return x * o.x + y * o.y + z * o.z; }
    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

// Axis-aligned closed rectangle [x0,x1] x [y0,y1].
struct Rect {
    double x0 = 0.0, x1 = 0.0, y0 = 0.0, y1 = 0.0;

    bool empty() const { return x1 < x0 || y1 < y0; }
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }
    double area() const { return empty() ? 0.0 : width() * height(); }
    Vec2 center() const { return {0.5 * (x0 + x1), 0.5 * (y0 + y1)}; }

    bool contains(Vec2 p) const {
        return p.x >= x0 && p.x <= x1 && p.y >= y0 && p.y <= y1;
    }
    bool contains_strict(Vec2 p) const {
        return p.x > x0 && p.x < x1 && p.y > y0 && p.y < y1;
    }
    bool intersects(const Rect& o) const {
        return x0 <= o.x1 && o.x0 <= x1 && y0 <= o.y1 && o.y0 <= y1;
    }
    Rect intersect(const Rect& o) const {
        return {std::max(x0, o.x0), std::min(x1, o.x1),
                std::max(y0, o.y0), std::min(y1, o.y1)};
    }
    // Concentric scaling: (1+t)R has the same center and side scaled by 1+t.
    Rect scaled(double factor) const {
        const Vec2 c = center();
        const double hw = 0.5 * width() * factor, hh = 0.5 * height() * factor;
        return {c.x - hw, c.x + hw, c.y - hh, c.y + hh};
    }
    Rect padded(double m) const { return {x0 - m, x1 + m, y0 - m, y1 + m}; }

    // L^infinity gap between two rectangles (0 if they touch or overlap).
    double gap(const Rect& o) const {
        const double dx = std::max({0.0, o.x0 - x1, x0 - o.x1});
        const double dy = std::max({0.0, o.y0 - y1, y0 - o.y1});
        return std::max(dx, dy);
    }
    // Euclidean distance between the two sets.
    double dist(const Rect& o) const {
        const double dx = std::max({0.0, o.x0 - x1, x0 - o.x1});
        const double dy = std::max({0.0, o.y0 - y1, y0 - o.y1});
        return std::hypot(dx, dy);
    }
};

// The base square U of the source plane lives in unit coordinates [0,1]^2.
// Physically U is the axis-parallel square of side 1/2 centered at the
// origin, which keeps it inside the ball B(0,1/2) required of supports of
// extension densities.  All dyadic bookkeeping uses unit coordinates; the
// paraboloid phase and every modulation e^{i u.y} evaluate physical
// coordinates through this map.
struct Domain {
    double side = 0.5;

    Vec2 to_physical(Vec2 u) const {
        return {(u.x - 0.5) * side, (u.y - 0.5) * side};
    }
    Vec2 to_unit(Vec2 p) const {
        return {p.x / side + 0.5, p.y / side + 0.5};
    }
};

inline const Domain& domain() {
    static const Domain d{};
    return d;
}

// Paraboloid parameterization applied to a physical point.
inline Vec3 paraboloid_lift(Vec2 p) {
    return {p.x, p.y, p.x * p.x + p.y * p.y};
}

}  // namespace parex
