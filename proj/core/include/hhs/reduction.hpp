#pragma once

#include <optional>
#include <vector>

#include "hhs/envelope_tree.hpp"
#include "hhs/instance.hpp"

namespace hhs {

// Combinatorial circle: half-plane ids sorted counterclockwise by normal with
// the cut at west, so positions 1..t hold the lower group (ny < 0) and
// t+1..n the upper group. The circle itself is never materialized; everything
// downstream works on this index order.
struct CircleInstance {
    std::vector<int> order;       // order[k] = half-plane id at position k+1
    std::vector<int> positionOf;  // id -> position (1-based)
    int t = 0;                    // count of lower half-planes

    int size() const { return static_cast<int>(order.size()); }
    int idAt(int pos) const { return order[pos - 1]; }
    int next(int pos) const { return pos % size() + 1; }
    int prev(int pos) const { return (pos + size() - 2) % size() + 1; }
};

// Cyclic position interval [i..j] (1-based, inclusive) whose defining
// half-planes are all hit by the owning point, maximal on both sides.
struct Arc {
    int owner;
    int i;
    int j;

    bool operator==(const Arc& o) const { return owner == o.owner && i == o.i && j == o.j; }
};

int arcLength(const Arc& a, int n);
bool arcCoversPos(const Arc& a, int pos, int n);
// Positions of `inner` all covered by `outer` (owners ignored).
bool arcContainsArc(const Arc& outer, const Arc& inner, int n);

// Requires pairwise distinct, non-horizontal normals (run dedupe + rotation
// first). Throws DuplicateNormalError otherwise.
CircleInstance buildB(const Instance& inst);

// The full family A: for every point, every maximal run of hit positions.
// O(n*m); baseline use only. Requires that no point hits all half-planes.
std::vector<Arc> buildFullArcs(const Instance& inst, const CircleInstance& circle);

struct EnvelopeTrees {
    std::optional<EnvelopeTree> lower;  // positions 1..t
    std::optional<EnvelopeTree> upper;  // positions t+1..n
};
EnvelopeTrees buildEnvelopeTrees(const Instance& inst, const CircleInstance& circle,
                                 int leafSize = kDefaultEnvelopeLeaf);

// Maximal cyclic run of hit positions containing anchorPos, or nullopt when
// the point misses the anchor; O(log^2 n) via the trees.
std::optional<Arc> maximalHitRun(const Instance& inst, const CircleInstance& circle,
                                 const EnvelopeTrees& trees, int pointId, int anchorPos);

// The left arc (covering b_n or b_1) and right arc (covering b_t or b_t+1),
// deduplicated when they coincide.
std::vector<Arc> leftRightArcs(const Instance& inst, const CircleInstance& circle,
                               const EnvelopeTrees& trees, int pointId);

// Dual data of one group. Group positions g = 1..groupSize() are sorted by
// dual x; circlePosOfGroup maps them onto circle positions (identity for the
// lower group, reversed for the reflected upper group).
struct DualSide {
    bool reflected = false;             // upper group handled via y -> -y
    std::vector<Point> duals;           // duals[g-1] is h* of group position g
    std::vector<int> circlePosOfGroup;  // group position -> circle position
    std::vector<Line> pointDualLines;   // one line per distinct point
    std::vector<int> dualLineOwner;     // dual line id -> lowest point id
    std::vector<int> pointDualLineId;   // point id -> dual line id
    UpperEnvelope envelope;             // upper envelope of pointDualLines

    int groupSize() const { return static_cast<int>(duals.size()); }
};

// Duals of the lower half-planes h* = (-nx/ny, -c/ny) plus the dual lines
// y = a*x - b of all distinct points. Throws InternalOrderMismatchError if the
// dual x order disagrees with the position order.
DualSide dualizeLower(const Instance& inst, const CircleInstance& circle);
// Same machinery after reflecting y -> -y, which turns the upper group into a
// lower one.
DualSide dualizeUpperReflected(const Instance& inst, const CircleInstance& circle);

struct AnchorResult {
    enum class Kind { EdgeAnchored, VertexAnchored, Undefined };
    Kind kind = Kind::Undefined;
    int seedLo = 0;  // group positions, inclusive
    int seedHi = 0;

    bool defined() const { return kind != Kind::Undefined; }
};

// Seed positions of the special covered sublist for a point: the group
// positions under the envelope edge its dual line owns, or the consecutive
// pair straddling the envelope vertex with tangent parallel to that line.
AnchorResult anchorSublist(const DualSide& side, int pointId);

// Extends an anchor seed to the maximal hit run inside the group and emits the
// lower (or upper) arc when the run touches neither group boundary.
std::optional<Arc> lowerUpperArc(const Instance& inst, const CircleInstance& circle,
                                 const EnvelopeTrees& trees, const DualSide& side, int pointId,
                                 const AnchorResult& anchor);

// The reduced family A-hat: per distinct point its left, right, lower and
// upper arcs; at most 4|P| arcs in total.
std::vector<Arc> buildReducedArcs(const Instance& inst, const CircleInstance& circle,
                                  const EnvelopeTrees& trees);

}  // namespace hhs
