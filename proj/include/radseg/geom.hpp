#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace radseg {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(Vec2 a, double s) { return {a.x * s, a.y * s}; }
inline bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }

// Closed polygon; vertices in order, last edge wraps to the first vertex.
using Polygon = std::vector<Vec2>;

struct Bounds {
    double min_x = 0.0, min_y = 0.0, max_x = 0.0, max_y = 0.0;
};

inline Bounds polygon_bounds(const Polygon& poly) {
    Bounds b{poly[0].x, poly[0].y, poly[0].x, poly[0].y};
    for (const Vec2& v : poly) {
        b.min_x = std::min(b.min_x, v.x);
        b.min_y = std::min(b.min_y, v.y);
        b.max_x = std::max(b.max_x, v.x);
        b.max_y = std::max(b.max_y, v.y);
    }
    return b;
}

// Squared distance from p to the segment [a, b].
inline double dist_sq_to_segment(Vec2 p, Vec2 a, Vec2 b) {
    const double abx = b.x - a.x, aby = b.y - a.y;
    const double apx = p.x - a.x, apy = p.y - a.y;
    const double len_sq = abx * abx + aby * aby;
    double t = len_sq > 0.0 ? (apx * abx + apy * aby) / len_sq : 0.0;
    t = std::clamp(t, 0.0, 1.0);
    const double dx = apx - t * abx;
    const double dy = apy - t * aby;
    return dx * dx + dy * dy;
}

// True when edge [a, b] crosses the horizontal line y = py under the
// half-open rule (endpoints with a.y == py count as below). On a crossing,
// *x_cross is the intersection abscissa. Every interiority test in this
// project — the per-pixel predicate and the scanline rasterizer — must go
// through this one function so their float decisions are identical.
inline bool edge_crosses_row(Vec2 a, Vec2 b, double py, double* x_cross) {
    if ((a.y > py) == (b.y > py)) return false;
    *x_cross = a.x + (py - a.y) * (b.x - a.x) / (b.y - a.y);
    return true;
}

// Even-odd interiority at p: parity of edge crossings strictly left of p.
inline bool point_in_polygon(Vec2 p, const Polygon& poly) {
    bool inside = false;
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        double x;
        if (edge_crosses_row(poly[j], poly[i], p.y, &x) && x < p.x) inside = !inside;
    }
    return inside;
}

// Squared distance from p to the polygon boundary.
inline double dist_sq_to_polygon(Vec2 p, const Polygon& poly) {
    double best = std::numeric_limits<double>::infinity();
    const std::size_t n = poly.size();
    for (std::size_t i = 0, j = n - 1; i < n; j = i++) {
        best = std::min(best, dist_sq_to_segment(p, poly[j], poly[i]));
    }
    return best;
}

}  // namespace radseg
