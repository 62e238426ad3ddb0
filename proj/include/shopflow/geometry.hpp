#pragma once

#include <cmath>

namespace shopflow {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2 operator+(Vec2 o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(Vec2 o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2&) const = default;

    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
    Vec2 normalized() const {
        const double n = norm();
        return n > 0.0 ? Vec2{x / n, y / n} : Vec2{};
    }
    // 90-degree rotations; y-up convention
    Vec2 perp_left() const { return {-y, x}; }
    Vec2 perp_right() const { return {y, -x}; }
};

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
inline double dist(Vec2 a, Vec2 b) { return (a - b).norm(); }

// Axis-aligned rectangle, lo <= hi componentwise.
struct Rect {
    Vec2 lo;
    Vec2 hi;

    double width() const { return hi.x - lo.x; }
    double depth() const { return hi.y - lo.y; }
    bool contains(Vec2 p) const {
        return p.x >= lo.x && p.x <= hi.x && p.y >= lo.y && p.y <= hi.y;
    }
    bool strictly_inside(Vec2 p, double eps = 1e-9) const {
        return p.x > lo.x + eps && p.x < hi.x - eps && p.y > lo.y + eps && p.y < hi.y - eps;
    }
    Vec2 corner(int i) const {  // CCW from lo
        switch (i & 3) {
            case 0: return lo;
            case 1: return {hi.x, lo.y};
            case 2: return hi;
            default: return {lo.x, hi.y};
        }
    }
};

// True when the open segment (a,b) passes through the interior of `rect`.
// Touching the boundary (grazing an edge, passing exactly through a corner,
// or ending on an edge) does not block.
bool segment_crosses_interior(Vec2 a, Vec2 b, const Rect& rect);

}  // namespace shopflow
