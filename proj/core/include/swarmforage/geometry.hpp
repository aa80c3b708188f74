#pragma once

#include <cmath>

namespace swarmforage {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }

inline double dot(Vec2 a, Vec2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Vec2 v) { return std::sqrt(dot(v, v)); }
inline double distance(Vec2 a, Vec2 b) { return norm(a - b); }
inline double distance_sq(Vec2 a, Vec2 b) { return dot(a - b, a - b); }

/// Axis-aligned rectangle, closed on all edges.
struct Rect {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;

    static Rect centered(Vec2 c, double width, double height) {
        return {c.x - width / 2, c.y - height / 2, c.x + width / 2, c.y + height / 2};
    }

    bool contains(Vec2 p) const {
        return p.x >= min_x && p.x <= max_x && p.y >= min_y && p.y <= max_y;
    }

    Vec2 center() const { return {(min_x + max_x) / 2, (min_y + max_y) / 2}; }
    double width() const { return max_x - min_x; }
    double height() const { return max_y - min_y; }
};

/// Wrap an angle into (-pi, pi].
inline double wrap_angle(double a) {
    while (a <= -M_PI) a += 2 * M_PI;
    while (a > M_PI) a -= 2 * M_PI;
    return a;
}

} // namespace swarmforage
