#include "hhs/region.hpp"

#include <algorithm>

#include "hhs/errors.hpp"

namespace hhs {

namespace {

struct XInterval {
    bool empty = true;
    std::optional<Rational> lo, hi;  // nullopt = unbounded end
};

void widen(XInterval& acc, const std::optional<Rational>& lo, const std::optional<Rational>& hi) {
    if (lo && hi && cmp(*lo, *hi) > 0) return;  // empty piece
    if (acc.empty) {
        acc = XInterval{false, lo, hi};
        return;
    }
    if (!lo || (acc.lo && cmp(*lo, *acc.lo) < 0)) acc.lo = lo;
    if (!hi || (acc.hi && cmp(*hi, *acc.hi) > 0)) acc.hi = hi;
}

// Feasible x set {x : fl(x) + gl(x) <= 0} restricted to [a, b], added to acc.
void addPieceFeasible(XInterval& acc, const Line& fl, const Line& gl,
                      const std::optional<Rational>& a, const std::optional<Rational>& b) {
    Rational s = fl.slope + gl.slope;
    Rational c0 = fl.intercept + gl.intercept;
    int ss = sgn(s);
    if (ss == 0) {
        if (sgn(c0) <= 0) widen(acc, a, b);
        return;
    }
    Rational root = -c0 / s;
    if (ss > 0) {  // feasible x <= root
        std::optional<Rational> hi = b;
        if (!hi || cmp(root, *hi) < 0) hi = root;
        if (a && cmp(*a, *hi) > 0) return;
        widen(acc, a, hi);
    } else {  // feasible x >= root
        std::optional<Rational> lo = a;
        if (!lo || cmp(root, *lo) > 0) lo = root;
        if (b && cmp(*lo, *b) > 0) return;
        widen(acc, lo, b);
    }
}

// {x : F(x) + G(x) <= 0} for two upper envelopes; a closed interval since the
// sum is convex.
XInterval feasibleInterval(const UpperEnvelope& F, const UpperEnvelope& G) {
    XInterval acc;
    std::size_t fi = 0, gi = 0;
    std::optional<Rational> prev;  // left end of the current piece
    while (true) {
        const bool fMore = fi < F.breakpoints.size();
        const bool gMore = gi < G.breakpoints.size();
        std::optional<Rational> cut;
        if (fMore && gMore) {
            cut = cmp(F.breakpoints[fi], G.breakpoints[gi]) <= 0 ? F.breakpoints[fi] : G.breakpoints[gi];
        } else if (fMore) {
            cut = F.breakpoints[fi];
        } else if (gMore) {
            cut = G.breakpoints[gi];
        }
        addPieceFeasible(acc, F.edges[fi].line, G.edges[gi].line, prev, cut);
        if (!cut) break;
        if (fMore && F.breakpoints[fi] == *cut) ++fi;
        if (gMore && G.breakpoints[gi] == *cut) ++gi;
        prev = std::move(cut);
    }
    return acc;
}

void clampInterval(XInterval& acc, const std::optional<Rational>& xlo, const std::optional<Rational>& xhi) {
    if (acc.empty) return;
    if (xlo && (!acc.lo || cmp(*xlo, *acc.lo) > 0)) acc.lo = xlo;
    if (xhi && (!acc.hi || cmp(*xhi, *acc.hi) < 0)) acc.hi = xhi;
    if (acc.lo && acc.hi && cmp(*acc.lo, *acc.hi) > 0) acc = XInterval{};
}

}  // namespace

bool ConvexRegion::contains(const Point& p) const {
    if (status_ == RegionStatus::Empty) return false;
    if (xlo_ && cmp(p.x, *xlo_) < 0) return false;
    if (xhi_ && cmp(p.x, *xhi_) > 0) return false;
    if (floorEnv_ && cmp(p.y, floorEnv_->valueAt(p.x)) < 0) return false;
    if (negCeilEnv_ && cmp(-p.y, negCeilEnv_->valueAt(p.x)) < 0) return false;
    return true;
}

ConvexRegion halfPlaneIntersection(std::span<const HalfPlane> halfplanes) {
    if (halfplanes.empty()) {
        throw InternalInvariantError("half-plane intersection of an empty set");
    }
    ConvexRegion r;
    std::vector<Line> floorLines, negCeilLines;
    for (const HalfPlane& h : halfplanes) {
        int sy = sgn(h.ny);
        if (sy == 0) {
            Rational bound = h.c / h.nx;
            if (sgn(h.nx) > 0) {
                if (!r.xlo_ || cmp(bound, *r.xlo_) > 0) r.xlo_ = bound;
            } else {
                if (!r.xhi_ || cmp(bound, *r.xhi_) < 0) r.xhi_ = bound;
            }
        } else if (sy > 0) {
            floorLines.push_back(h.boundingLine());
        } else {
            Line l = h.boundingLine();
            negCeilLines.push_back(Line{-l.slope, -l.intercept});
        }
    }
    if (r.xlo_ && r.xhi_ && cmp(*r.xlo_, *r.xhi_) > 0) {
        r.status_ = RegionStatus::Empty;
        return r;
    }
    if (!floorLines.empty()) r.floorEnv_ = upperEnvelopeOfLines(floorLines);
    if (!negCeilLines.empty()) r.negCeilEnv_ = upperEnvelopeOfLines(negCeilLines);

    XInterval feas;
    if (r.floorEnv_ && r.negCeilEnv_) {
        feas = feasibleInterval(*r.floorEnv_, *r.negCeilEnv_);
    } else {
        feas.empty = false;  // y is always realizable
    }
    clampInterval(feas, r.xlo_, r.xhi_);
    if (feas.empty) {
        r.status_ = RegionStatus::Empty;
        return r;
    }

    const bool bounded = feas.lo && feas.hi && r.floorEnv_ && r.negCeilEnv_;
    r.status_ = bounded ? RegionStatus::BoundedPolygon : RegionStatus::Unbounded;

    // Collect the finite boundary vertices: corners at finite feasible ends
    // plus envelope breakpoints strictly inside the feasible interval.
    std::vector<Point> cands;
    auto addCorner = [&](const Rational& x) {
        if (r.floorEnv_) cands.push_back(Point{x, r.floorEnv_->valueAt(x)});
        if (r.negCeilEnv_) cands.push_back(Point{x, -r.negCeilEnv_->valueAt(x)});
    };
    if (feas.lo) addCorner(*feas.lo);
    if (feas.hi && (!feas.lo || *feas.lo != *feas.hi)) addCorner(*feas.hi);
    auto inOpenFeas = [&](const Rational& x) {
        if (feas.lo && cmp(x, *feas.lo) <= 0) return false;
        if (feas.hi && cmp(x, *feas.hi) >= 0) return false;
        return true;
    };
    if (r.floorEnv_) {
        for (const Rational& x : r.floorEnv_->breakpoints) {
            if (inOpenFeas(x)) cands.push_back(Point{x, r.floorEnv_->valueAt(x)});
        }
    }
    if (r.negCeilEnv_) {
        for (const Rational& x : r.negCeilEnv_->breakpoints) {
            if (inOpenFeas(x)) cands.push_back(Point{x, -r.negCeilEnv_->valueAt(x)});
        }
    }
    if (!cands.empty()) r.boundary_ = convexHull(cands);
    return r;
}

}  // namespace hhs
