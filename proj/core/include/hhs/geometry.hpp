#pragma once

#include <compare>
#include <span>
#include <vector>

#include "hhs/rational.hpp"

namespace hhs {

struct Point {
    Rational x;
    Rational y;

    bool operator==(const Point& o) const { return x == o.x && y == o.y; }
};

// Lexicographic (x, then y); a convenient total order for hulls and dedup.
bool lexLess(const Point& a, const Point& b);

// A nonzero direction stored as a primitive integer vector (components divided
// by their gcd), so equal directions compare equal componentwise.
struct Direction {
    BigInt dx;
    BigInt dy;

    Direction(BigInt dxIn, BigInt dyIn);
    static Direction fromRationals(const Rational& dx, const Rational& dy);

    bool operator==(const Direction& o) const { return dx == o.dx && dy == o.dy; }
};

// Non-vertical line y = slope*x + intercept.
struct Line {
    Rational slope;
    Rational intercept;

    Rational valueAt(const Rational& x) const { return slope * x + intercept; }
    bool operator==(const Line& o) const { return slope == o.slope && intercept == o.intercept; }
};

// Sign of the cross product (b-a) x (c-a): +1 ccw, 0 collinear, -1 cw.
int orient(const Point& a, const Point& b, const Point& c);

// Sign of the cross product u x v of two direction vectors.
int crossSign(const Direction& u, const Direction& v);

// Total order of non-horizontal directions by counterclockwise angle measured
// from west (-1, 0). Every direction with dy < 0 precedes every direction with
// dy > 0. Throws HorizontalDirectionError when dy == 0.
std::strong_ordering compareCcwFromWest(const Direction& u, const Direction& v);

// Minimal counterclockwise convex hull (Andrew monotone chain). Degenerate
// inputs yield a single point or the two endpoints of a segment.
std::vector<Point> convexHull(std::span<const Point> points);

// Index of a hull vertex maximizing dot(v, d), O(log |hull|). Ties resolve to
// an arbitrary maximizer.
int extremePointIndex(std::span<const Point> hull, const Direction& d);

inline const Point& extremePoint(std::span<const Point> hull, const Direction& d) {
    return hull[extremePointIndex(hull, d)];
}

}  // namespace hhs
