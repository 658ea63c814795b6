#pragma once

#include <optional>
#include <vector>

#include "hhs/instance.hpp"
#include "hhs/region.hpp"

namespace hhs {

// Among half-planes sharing a normal direction only the most restrictive one
// survives; originalId maps surviving positions back to input ids.
struct DedupeResult {
    std::vector<HalfPlane> halfplanes;
    std::vector<int> originalId;
};
DedupeResult dedupeNormals(const Instance& inst);

// Id of the first half-plane hit by no point, or nullopt when a hitting set
// exists. O((n+m) log m) via the hull of the points.
std::optional<int> feasibilityCheck(const Instance& inst);

// Lowest-index point inside the common intersection of all half-planes, i.e.
// a size-1 hitting set. Call only after feasibilityCheck passes.
std::optional<int> singletonCheck(const Instance& inst);

struct RotationRecord {
    bool applied = false;
    int k = 0;          // rotation (cos, sin) = ((k^2-1)/(k^2+1), 2k/(k^2+1))
    Rational cosv = 1;
    Rational sinv = 0;
};

struct RotatedInstance {
    Instance instance;
    RotationRecord record;
};

// Exact rational rotation applied to points and normals whenever some
// bounding line is vertical (normal with ny == 0); offsets are unchanged
// because rotations preserve dot products.
RotatedInstance rotateIfNeeded(const Instance& inst);

}  // namespace hhs
