#include "hhs/reduction.hpp"

#include <algorithm>
#include <numeric>

#include "hhs/errors.hpp"

namespace hhs {

int arcLength(const Arc& a, int n) { return (a.j - a.i + n) % n + 1; }

bool arcCoversPos(const Arc& a, int pos, int n) {
    return (pos - a.i + n) % n < arcLength(a, n);
}

bool arcContainsArc(const Arc& outer, const Arc& inner, int n) {
    int off = (inner.i - outer.i + n) % n;
    return off + arcLength(inner, n) <= arcLength(outer, n);
}

CircleInstance buildB(const Instance& inst) {
    const int n = static_cast<int>(inst.halfplanes.size());
    std::vector<Direction> normals;
    normals.reserve(n);
    for (const HalfPlane& h : inst.halfplanes) normals.push_back(h.normal());

    CircleInstance circle;
    circle.order.resize(n);
    std::iota(circle.order.begin(), circle.order.end(), 0);
    std::sort(circle.order.begin(), circle.order.end(), [&](int a, int b) {
        return compareCcwFromWest(normals[a], normals[b]) < 0;
    });
    for (int k = 0; k + 1 < n; ++k) {
        if (normals[circle.order[k]] == normals[circle.order[k + 1]]) {
            throw DuplicateNormalError(circle.order[k], circle.order[k + 1]);
        }
    }
    circle.positionOf.resize(n);
    for (int k = 0; k < n; ++k) circle.positionOf[circle.order[k]] = k + 1;
    circle.t = static_cast<int>(std::count_if(inst.halfplanes.begin(), inst.halfplanes.end(),
                                              [](const HalfPlane& h) { return h.isLower(); }));
    return circle;
}

std::vector<Arc> buildFullArcs(const Instance& inst, const CircleInstance& circle) {
    const int n = circle.size();
    std::vector<Arc> arcs;
    std::vector<char> hit(n);
    for (std::size_t pid = 0; pid < inst.points.size(); ++pid) {
        const Point& p = inst.points[pid];
        int firstMiss = -1;
        for (int k = 0; k < n; ++k) {
            hit[k] = inst.halfplanes[circle.order[k]].contains(p);
            if (!hit[k] && firstMiss < 0) firstMiss = k;
        }
        if (firstMiss < 0) {
            throw InternalInvariantError("buildFullArcs: a point hits every half-plane");
        }
        // Walk once around starting after a miss, collecting maximal runs.
        int runStart = -1;
        for (int s = 1; s <= n; ++s) {
            int k = (firstMiss + s) % n;
            if (hit[k] && runStart < 0) runStart = k;
            if (!hit[k] && runStart >= 0) {
                arcs.push_back(Arc{static_cast<int>(pid), runStart + 1, (k + n - 1) % n + 1});
                runStart = -1;
            }
        }
        if (runStart >= 0) {
            arcs.push_back(Arc{static_cast<int>(pid), runStart + 1, (firstMiss + n - 1) % n + 1});
        }
    }
    return arcs;
}

EnvelopeTrees buildEnvelopeTrees(const Instance& inst, const CircleInstance& circle, int leafSize) {
    EnvelopeTrees trees;
    const int n = circle.size();
    const int t = circle.t;
    if (t >= 1) {
        std::vector<Line> lines;
        lines.reserve(t);
        for (int pos = 1; pos <= t; ++pos) {
            lines.push_back(inst.halfplanes[circle.idAt(pos)].boundingLine());
        }
        trees.lower.emplace(std::move(lines), 1, EnvelopeSense::Lower, leafSize);
    }
    if (t < n) {
        std::vector<Line> lines;
        lines.reserve(n - t);
        for (int pos = t + 1; pos <= n; ++pos) {
            lines.push_back(inst.halfplanes[circle.idAt(pos)].boundingLine());
        }
        trees.upper.emplace(std::move(lines), t + 1, EnvelopeSense::Upper, leafSize);
    }
    return trees;
}

namespace {

struct Segment {
    int lo, hi;
    const EnvelopeTree* tree;
};

// Cyclic scan order q, q+1, ..., q-1 decomposed into group-contiguous pieces;
// each tree appears at most twice.
std::vector<Segment> forwardSegments(const CircleInstance& circle, const EnvelopeTrees& trees, int q) {
    const int n = circle.size();
    const int t = circle.t;
    const EnvelopeTree* L = trees.lower ? &*trees.lower : nullptr;
    const EnvelopeTree* U = trees.upper ? &*trees.upper : nullptr;
    std::vector<Segment> segs;
    if (q <= t) {
        segs.push_back({q, t, L});
        segs.push_back({t + 1, n, U});
        segs.push_back({1, q - 1, L});
    } else {
        segs.push_back({q, n, U});
        segs.push_back({1, t, L});
        segs.push_back({t + 1, q - 1, U});
    }
    std::erase_if(segs, [](const Segment& s) { return s.lo > s.hi || s.tree == nullptr; });
    return segs;
}

// Cyclic scan order q, q-1, ..., q+1 decomposed the same way.
std::vector<Segment> backwardSegments(const CircleInstance& circle, const EnvelopeTrees& trees, int q) {
    const int n = circle.size();
    const int t = circle.t;
    const EnvelopeTree* L = trees.lower ? &*trees.lower : nullptr;
    const EnvelopeTree* U = trees.upper ? &*trees.upper : nullptr;
    std::vector<Segment> segs;
    if (q <= t) {
        segs.push_back({1, q, L});
        segs.push_back({t + 1, n, U});
        segs.push_back({q + 1, t, L});
    } else {
        segs.push_back({t + 1, q, U});
        segs.push_back({1, t, L});
        segs.push_back({q + 1, n, U});
    }
    std::erase_if(segs, [](const Segment& s) { return s.lo > s.hi || s.tree == nullptr; });
    return segs;
}

std::optional<int> firstUnhitCyclic(const CircleInstance& circle, const EnvelopeTrees& trees,
                                    const Point& p, int q) {
    for (const Segment& s : forwardSegments(circle, trees, q)) {
        if (auto u = s.tree->firstUnhitInRange(s.lo, s.hi, p)) return u;
    }
    return std::nullopt;
}

std::optional<int> lastUnhitCyclic(const CircleInstance& circle, const EnvelopeTrees& trees,
                                   const Point& p, int q) {
    for (const Segment& s : backwardSegments(circle, trees, q)) {
        if (auto u = s.tree->lastUnhitInRange(s.lo, s.hi, p)) return u;
    }
    return std::nullopt;
}

bool hitsPos(const Instance& inst, const CircleInstance& circle, const Point& p, int pos) {
    return inst.halfplanes[circle.idAt(pos)].contains(p);
}

}  // namespace

std::optional<Arc> maximalHitRun(const Instance& inst, const CircleInstance& circle,
                                 const EnvelopeTrees& trees, int pointId, int anchorPos) {
    const Point& p = inst.points[pointId];
    if (!hitsPos(inst, circle, p, anchorPos)) return std::nullopt;
    auto fwd = firstUnhitCyclic(circle, trees, p, circle.next(anchorPos));
    auto bwd = lastUnhitCyclic(circle, trees, p, circle.prev(anchorPos));
    if (!fwd || !bwd) {
        throw InternalInvariantError("maximalHitRun: point hits every half-plane");
    }
    return Arc{pointId, circle.next(*bwd), circle.prev(*fwd)};
}

std::vector<Arc> leftRightArcs(const Instance& inst, const CircleInstance& circle,
                               const EnvelopeTrees& trees, int pointId) {
    const int n = circle.size();
    const int t = circle.t;
    const Point& p = inst.points[pointId];
    std::vector<Arc> out;
    auto tryAnchors = [&](int first, int second) {
        int anchor = -1;
        if (first >= 1 && first <= n && hitsPos(inst, circle, p, first)) {
            anchor = first;
        } else if (second >= 1 && second <= n && hitsPos(inst, circle, p, second)) {
            anchor = second;
        }
        if (anchor < 0) return;
        auto arc = maximalHitRun(inst, circle, trees, pointId, anchor);
        if (arc && std::find(out.begin(), out.end(), *arc) == out.end()) {
            out.push_back(*arc);
        }
    };
    tryAnchors(n, 1);      // left arc: covers b_n or b_1
    tryAnchors(t, t + 1);  // right arc: covers b_t or b_t+1
    return out;
}

namespace {

DualSide dualizeSide(const Instance& inst, const CircleInstance& circle, bool reflected) {
    const int n = circle.size();
    const int t = circle.t;
    DualSide side;
    side.reflected = reflected;

    if (!reflected) {
        side.duals.reserve(t);
        side.circlePosOfGroup.resize(t + 1);
        for (int pos = 1; pos <= t; ++pos) {
            const HalfPlane& h = inst.halfplanes[circle.idAt(pos)];
            side.duals.push_back(Point{-h.nx / h.ny, -h.c / h.ny});
            side.circlePosOfGroup[pos] = pos;
        }
    } else {
        // Reflecting y -> -y maps the upper half-plane (nx, ny, c) to the
        // lower one (nx, -ny, c); its dual is (nx/ny, c/ny). Reflected dual x
        // decreases with circle position, so the group order reverses.
        const int g = n - t;
        side.duals.reserve(g);
        side.circlePosOfGroup.resize(g + 1);
        for (int gp = 1; gp <= g; ++gp) {
            const int pos = n + 1 - gp;
            const HalfPlane& h = inst.halfplanes[circle.idAt(pos)];
            side.duals.push_back(Point{h.nx / h.ny, h.c / h.ny});
            side.circlePosOfGroup[gp] = pos;
        }
    }
    for (std::size_t k = 0; k + 1 < side.duals.size(); ++k) {
        if (cmp(side.duals[k].x, side.duals[k + 1].x) >= 0) {
            throw InternalOrderMismatchError("dual x order disagrees with circle position order");
        }
    }

    // Duplicate points collapse onto one dual line owned by the lowest index.
    const int m = static_cast<int>(inst.points.size());
    std::vector<int> byCoord(m);
    std::iota(byCoord.begin(), byCoord.end(), 0);
    std::sort(byCoord.begin(), byCoord.end(), [&](int a, int b) {
        if (inst.points[a] == inst.points[b]) return a < b;
        return lexLess(inst.points[a], inst.points[b]);
    });
    side.pointDualLineId.assign(m, -1);
    for (int k = 0; k < m; ++k) {
        int id = byCoord[k];
        if (k > 0 && inst.points[id] == inst.points[byCoord[k - 1]]) {
            side.pointDualLineId[id] = side.pointDualLineId[byCoord[k - 1]];
            continue;
        }
        const Point& p = inst.points[id];
        // Dual of (a, b) is y = a*x - b; reflection flips b.
        side.pointDualLines.push_back(Line{p.x, reflected ? p.y : Rational(-p.y)});
        side.dualLineOwner.push_back(id);
        side.pointDualLineId[id] = static_cast<int>(side.pointDualLines.size()) - 1;
    }
    side.envelope = upperEnvelopeOfLines(side.pointDualLines);
    return side;
}

}  // namespace

DualSide dualizeLower(const Instance& inst, const CircleInstance& circle) {
    return dualizeSide(inst, circle, false);
}

DualSide dualizeUpperReflected(const Instance& inst, const CircleInstance& circle) {
    return dualizeSide(inst, circle, true);
}

namespace {

bool dualOnOrBelow(const Line& lp, const Point& dual) {
    return cmp(lp.valueAt(dual.x), dual.y) >= 0;
}

// Last group position with dual x < bound (strict).
int lastBefore(const std::vector<Point>& duals, const Rational& bound) {
    auto it = std::lower_bound(duals.begin(), duals.end(), bound,
                               [](const Point& d, const Rational& v) { return cmp(d.x, v) < 0; });
    return static_cast<int>(it - duals.begin());  // 0 when none
}

// Last group position with dual x <= bound.
int lastAtOrBefore(const std::vector<Point>& duals, const Rational& bound) {
    auto it = std::upper_bound(duals.begin(), duals.end(), bound,
                               [](const Rational& v, const Point& d) { return cmp(v, d.x) < 0; });
    return static_cast<int>(it - duals.begin());
}

// The straddle rule shared by both anchor cases: seed {L, R} around the gap
// (xl, xr) when both neighbors exist, are consecutive and lie on or below lp.
AnchorResult straddleSeed(AnchorResult::Kind kind, const Line& lp, const std::vector<Point>& duals,
                          const std::optional<Rational>& xl, const std::optional<Rational>& xr) {
    const int g = static_cast<int>(duals.size());
    if (!xl || !xr) return AnchorResult{};  // an unbounded span has no neighbor on that side
    int L = lastBefore(duals, *xl);
    int R = lastAtOrBefore(duals, *xr) + 1;
    if (L < 1 || R > g || R != L + 1) return AnchorResult{};
    if (!dualOnOrBelow(lp, duals[L - 1]) || !dualOnOrBelow(lp, duals[R - 1])) return AnchorResult{};
    return AnchorResult{kind, L, R};
}

}  // namespace

AnchorResult anchorSublist(const DualSide& side, int pointId) {
    const std::vector<Point>& duals = side.duals;
    const UpperEnvelope& env = side.envelope;
    const int g = side.groupSize();
    if (g == 0) return AnchorResult{};
    const int lineId = side.pointDualLineId[pointId];
    const Line& lp = side.pointDualLines[lineId];

    auto slopeEdge = env.edgeWithSlope(lp.slope);
    if (slopeEdge && env.edges[*slopeEdge].lineId == lineId) {
        // The dual line owns an envelope edge: seed with everything under its
        // closed span.
        auto [xl, xr] = env.spanOf(*slopeEdge);
        int lo = xl ? lastBefore(duals, *xl) + 1 : 1;
        int hi = xr ? lastAtOrBefore(duals, *xr) : g;
        if (lo <= hi) return AnchorResult{AnchorResult::Kind::EdgeAnchored, lo, hi};
        return straddleSeed(AnchorResult::Kind::EdgeAnchored, lp, duals, xl, xr);
    }
    if (slopeEdge) {
        // Parallel strictly below an envelope edge; the tangent vertex is not
        // unique, so straddle that edge's span.
        auto [xl, xr] = env.spanOf(*slopeEdge);
        return straddleSeed(AnchorResult::Kind::VertexAnchored, lp, duals, xl, xr);
    }
    // The envelope vertex whose tangent is parallel to lp sits between the
    // edges with the neighboring slopes.
    auto it = std::upper_bound(env.edges.begin(), env.edges.end(), lp.slope,
                               [](const Rational& s, const EnvelopeEdge& e) { return cmp(s, e.line.slope) < 0; });
    const int idx = static_cast<int>(it - env.edges.begin());
    if (idx == 0 || idx == env.edgeCount()) {
        throw InternalInvariantError("anchorSublist: dual line slope outside the envelope slope range");
    }
    const Rational& xv = env.breakpoints[idx - 1];
    const int L = lastAtOrBefore(duals, xv);  // x == x(v_p) counts as left
    if (L < 1 || L + 1 > g) return AnchorResult{};
    if (!dualOnOrBelow(lp, duals[L - 1]) || !dualOnOrBelow(lp, duals[L])) return AnchorResult{};
    return AnchorResult{AnchorResult::Kind::VertexAnchored, L, L + 1};
}

std::optional<Arc> lowerUpperArc(const Instance& inst, const CircleInstance& circle,
                                 const EnvelopeTrees& trees, const DualSide& side, int pointId,
                                 const AnchorResult& anchor) {
    if (!anchor.defined()) return std::nullopt;
    const int cA = side.circlePosOfGroup[anchor.seedLo];
    const int cB = side.circlePosOfGroup[anchor.seedHi];
    const int cLo = std::min(cA, cB);
    const int cHi = std::max(cA, cB);
    const int glo = side.reflected ? circle.t + 1 : 1;
    const int ghi = side.reflected ? circle.size() : circle.t;
    const EnvelopeTree& tree = side.reflected ? *trees.upper : *trees.lower;
    const Point& p = inst.points[pointId];

    if (!tree.hitsPosition(cLo, p)) {
        throw SeedNotHitError("anchor seed position not hit by its point");
    }
    int i = glo, j = ghi;
    if (cLo > glo) {
        if (auto u = tree.lastUnhitInRange(glo, cLo - 1, p)) i = *u + 1;
    }
    if (cLo < ghi) {
        if (auto u = tree.firstUnhitInRange(cLo + 1, ghi, p)) j = *u - 1;
    }
    if (j < cHi) {
        throw SeedNotHitError("anchor seed interior not hit by its point");
    }
    if (i != glo && j != ghi) return Arc{pointId, i, j};
    return std::nullopt;
}

std::vector<Arc> buildReducedArcs(const Instance& inst, const CircleInstance& circle,
                                  const EnvelopeTrees& trees) {
    const int n = circle.size();
    const int t = circle.t;
    std::optional<DualSide> lowerSide, upperSide;
    if (t >= 1) lowerSide = dualizeLower(inst, circle);
    if (t < n) upperSide = dualizeUpperReflected(inst, circle);

    // One representative per distinct coordinate; duplicates contribute the
    // same arcs, attributed to the lowest index.
    const std::vector<int>& reps = lowerSide ? lowerSide->dualLineOwner : upperSide->dualLineOwner;

    std::vector<Arc> out;
    out.reserve(4 * reps.size());
    for (int rep : reps) {
        std::vector<Arc> mine = leftRightArcs(inst, circle, trees, rep);
        for (const auto& side : {std::cref(lowerSide), std::cref(upperSide)}) {
            if (!side.get()) continue;
            AnchorResult anchor = anchorSublist(*side.get(), rep);
            if (auto arc = lowerUpperArc(inst, circle, trees, *side.get(), rep, anchor)) {
                if (std::find(mine.begin(), mine.end(), *arc) == mine.end()) {
                    mine.push_back(*arc);
                }
            }
        }
        out.insert(out.end(), mine.begin(), mine.end());
    }
    if (out.size() > 4 * inst.points.size()) {
        throw InternalInvariantError("reduced arc family exceeds 4|P|");
    }
    return out;
}

}  // namespace hhs
