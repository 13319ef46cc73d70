#ifndef MONO_VEC_HPP
#define MONO_VEC_HPP

#include <cmath>

namespace mono {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    Vec2() = default;
    Vec2(double x_, double y_) : x(x_), y(y_) {}

    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator*(double s) const { return {x * s, y * s}; }
    bool operator==(const Vec2& o) const { return x == o.x && y == o.y; }

    double norm() const { return std::hypot(x, y); }
    double norm2() const { return x * x + y * y; }
};

inline double dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline double cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline double dist(const Vec2& a, const Vec2& b) { return (a - b).norm(); }

/// Unit direction vector; invariant dx^2+dy^2 = 1 up to 1e-12.
struct Direction {
    double dx = 1.0;
    double dy = 0.0;

    Vec2 vec() const { return {dx, dy}; }
    double angle() const { return std::atan2(dy, dx); }
};

inline Direction direction_from_angle(double theta) {
    double c = std::cos(theta), s = std::sin(theta);
    // snap near-axis and near-diagonal components so the eight lattice
    // directions test exactly against integer offsets
    if (std::fabs(c) < 1e-12) c = 0.0;
    if (std::fabs(s) < 1e-12) s = 0.0;
    if (std::fabs(std::fabs(c) - std::fabs(s)) < 1e-12) {
        const double r = 0.70710678118654752;
        c = std::copysign(r, c);
        s = std::copysign(r, s);
    }
    double n = std::hypot(c, s);
    return {c / n, s / n};
}

// distance from p to segment [a,b]
inline double dist_to_segment(const Vec2& p, const Vec2& a, const Vec2& b) {
    Vec2 ab = b - a;
    double len2 = ab.norm2();
    if (len2 == 0.0) return dist(p, a);
    double t = dot(p - a, ab) / len2;
    if (t < 0.0) t = 0.0;
    if (t > 1.0) t = 1.0;
    return dist(p, a + ab * t);
}

}  // namespace mono

#endif
