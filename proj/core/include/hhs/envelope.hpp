#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hhs/geometry.hpp"

namespace hhs {

struct EnvelopeEdge {
    int lineId;  // index into the caller's line sequence
    Line line;
};

// Upper envelope (pointwise maximum) of a set of non-vertical lines.
// Edges are ordered left to right with strictly increasing slopes; edge k
// spans [breakpoints[k-1], breakpoints[k]] with -inf/+inf at the ends.
// Spans are closed: a query x exactly at a breakpoint belongs to both
// neighboring edges, and edgeIndexAt returns the left one. Lines that touch
// the envelope in at most one point carry no edge.
struct UpperEnvelope {
    std::vector<EnvelopeEdge> edges;
    std::vector<Rational> breakpoints;  // size edges.size() - 1

    int edgeCount() const { return static_cast<int>(edges.size()); }

    // Leftmost edge whose closed span contains x.
    int edgeIndexAt(const Rational& x) const;

    Rational valueAt(const Rational& x) const { return edges[edgeIndexAt(x)].line.valueAt(x); }

    // Edge with exactly this slope, if present.
    std::optional<int> edgeWithSlope(const Rational& slope) const;

    // Closed span of edge k; nullopt encodes -inf / +inf.
    std::pair<std::optional<Rational>, std::optional<Rational>> spanOf(int k) const;
};

// Exact upper envelope; duplicate lines are collapsed (keeping the lowest id)
// and among parallel lines only the highest survives. O(k log k).
UpperEnvelope upperEnvelopeOfLines(std::span<const Line> lines);

namespace detail {

// Stack construction over lines already sorted by strictly increasing slope.
// `order` lists indices into `lines`; the result's lineIds refer to the same
// index space.
struct EnvelopeShape {
    std::vector<int> lineIds;
    std::vector<Rational> breakpoints;
};
EnvelopeShape buildUpperEnvelopeShape(std::span<const Line> lines, std::span<const int> order);

// x coordinate of the intersection of two non-parallel lines.
Rational lineIntersectionX(const Line& a, const Line& b);

}  // namespace detail

}  // namespace hhs
