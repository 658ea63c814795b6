#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hhs/halfplane.hpp"

namespace hhs {

struct Instance {
    std::vector<Point> points;
    std::vector<HalfPlane> halfplanes;
};

inline bool hits(const Point& p, const HalfPlane& h) { return h.contains(p); }

struct HittingSet {
    enum class Status { Optimal, Infeasible };
    Status status = Status::Infeasible;
    std::vector<int> pointIds;  // sorted ascending when optimal

    int size() const { return static_cast<int>(pointIds.size()); }
};

// Instance file: {"points":[["x","y"],...],"halfplanes":[["nx","ny","c"],...]}
// with coordinates as canonical rational strings. Throws ParseError.
Instance parseInstance(const std::string& text);
std::string serializeInstance(const Instance& inst);

// Solution file: {"status":"optimal","size":k,"indices":[...]} or
// {"status":"infeasible"}.
HittingSet parseHittingSet(const std::string& text);
std::string serializeHittingSet(const HittingSet& hs);

// Deterministic random instance: integer coordinates uniform in a square,
// non-horizontal integer normals. With ensureFeasible every half-plane is
// anchored at (or just below) a randomly chosen point, so it is hit.
Instance generate(int numPoints, int numHalfplanes, std::uint64_t seed, bool ensureFeasible);

// First violated half-plane id, or nullopt when every half-plane is hit.
// Throws BadIndexError on an out-of-range point id.
std::optional<int> verifyHittingSet(const Instance& inst, std::span<const int> pointIds);

}  // namespace hhs
