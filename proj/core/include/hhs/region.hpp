#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hhs/envelope.hpp"
#include "hhs/halfplane.hpp"

namespace hhs {

enum class RegionStatus { Empty, BoundedPolygon, Unbounded };

// Intersection of closed half-planes, kept as a floor envelope (max of the
// "y >=" bounding lines), a ceiling envelope (min of the "y <=" lines, stored
// negated) and x bounds from vertical constraints. `boundary` lists the finite
// vertices in ccw order; for unbounded regions with no vertex (a half-plane, a
// slab) it stays empty and the status alone describes the shape.
class ConvexRegion {
public:
    RegionStatus status() const { return status_; }
    const std::vector<Point>& boundary() const { return boundary_; }

    // Exact closed containment, O(log size).
    bool contains(const Point& p) const;

    friend ConvexRegion halfPlaneIntersection(std::span<const HalfPlane> halfplanes);

private:
    RegionStatus status_ = RegionStatus::Empty;
    std::vector<Point> boundary_;
    std::optional<Rational> xlo_, xhi_;          // from vertical constraints
    std::optional<UpperEnvelope> floorEnv_;      // y >= floor(x)
    std::optional<UpperEnvelope> negCeilEnv_;    // y <= -negCeil(x)
};

// Exact intersection, O(k log k). Requires at least one half-plane.
ConvexRegion halfPlaneIntersection(std::span<const HalfPlane> halfplanes);

inline bool pointInConvexRegion(const ConvexRegion& r, const Point& p) { return r.contains(p); }

}  // namespace hhs
