#pragma once

#include "hhs/geometry.hpp"
#include "hhs/rational.hpp"

namespace hhs {

// Closed half-plane {q : nx*q.x + ny*q.y >= c}. The normal (nx, ny) points
// into the half-plane.
struct HalfPlane {
    Rational nx;
    Rational ny;
    Rational c;

    bool contains(const Point& p) const { return cmp(nx * p.x + ny * p.y, c) >= 0; }

    Direction normal() const { return Direction::fromRationals(nx, ny); }

    bool verticalBoundary() const { return sgn(ny) == 0; }
    bool isLower() const { return sgn(ny) < 0; }

    // y = slope*x + intercept of the bounding line; requires ny != 0.
    Line boundingLine() const { return Line{-nx / ny, c / ny}; }
};

}  // namespace hhs
