#include "hhs/preprocess.hpp"

#include <algorithm>
#include <numeric>

#include "hhs/errors.hpp"

namespace hhs {

DedupeResult dedupeNormals(const Instance& inst) {
    const int n = static_cast<int>(inst.halfplanes.size());
    struct Canon {
        Direction dir;
        Rational offset;  // c rescaled to the primitive normal
        int id;
    };
    std::vector<Canon> canon;
    canon.reserve(n);
    for (int i = 0; i < n; ++i) {
        const HalfPlane& h = inst.halfplanes[i];
        Direction dir = h.normal();
        // (nx, ny) = lambda * dir with lambda > 0.
        Rational lambda = sgn(dir.dx) != 0 ? h.nx / dir.dx : h.ny / dir.dy;
        canon.push_back(Canon{std::move(dir), h.c / lambda, i});
    }
    std::sort(canon.begin(), canon.end(), [](const Canon& a, const Canon& b) {
        int c = cmp(a.dir.dx, b.dir.dx);
        if (c != 0) return c < 0;
        c = cmp(a.dir.dy, b.dir.dy);
        if (c != 0) return c < 0;
        c = cmp(a.offset, b.offset);
        if (c != 0) return c > 0;  // most restrictive first
        return a.id < b.id;
    });
    std::vector<int> keep;
    for (std::size_t i = 0; i < canon.size(); ++i) {
        if (i > 0 && canon[i].dir == canon[i - 1].dir) continue;
        keep.push_back(canon[i].id);
    }
    std::sort(keep.begin(), keep.end());
    DedupeResult out;
    out.halfplanes.reserve(keep.size());
    out.originalId = std::move(keep);
    for (int id : out.originalId) out.halfplanes.push_back(inst.halfplanes[id]);
    return out;
}

std::optional<int> feasibilityCheck(const Instance& inst) {
    std::vector<Point> hull = convexHull(inst.points);
    for (std::size_t i = 0; i < inst.halfplanes.size(); ++i) {
        const HalfPlane& h = inst.halfplanes[i];
        if (!h.contains(extremePoint(hull, h.normal()))) {
            return static_cast<int>(i);
        }
    }
    return std::nullopt;
}

std::optional<int> singletonCheck(const Instance& inst) {
    ConvexRegion region = halfPlaneIntersection(inst.halfplanes);
    if (region.status() == RegionStatus::Empty) return std::nullopt;
    for (std::size_t i = 0; i < inst.points.size(); ++i) {
        if (region.contains(inst.points[i])) return static_cast<int>(i);
    }
    return std::nullopt;
}

RotatedInstance rotateIfNeeded(const Instance& inst) {
    bool needed = std::any_of(inst.halfplanes.begin(), inst.halfplanes.end(),
                              [](const HalfPlane& h) { return h.verticalBoundary(); });
    if (!needed) {
        return RotatedInstance{inst, RotationRecord{}};
    }
    for (int k = 2;; ++k) {
        const Rational den = rational(static_cast<long>(k) * k + 1);
        const Rational cosv = rational(static_cast<long>(k) * k - 1) / den;
        const Rational sinv = rational(2L * k) / den;
        bool ok = true;
        for (const HalfPlane& h : inst.halfplanes) {
            if (sgn(sinv * h.nx + cosv * h.ny) == 0) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        RotatedInstance out;
        out.record = RotationRecord{true, k, cosv, sinv};
        out.instance.points.reserve(inst.points.size());
        for (const Point& p : inst.points) {
            out.instance.points.push_back(Point{cosv * p.x - sinv * p.y, sinv * p.x + cosv * p.y});
        }
        out.instance.halfplanes.reserve(inst.halfplanes.size());
        for (const HalfPlane& h : inst.halfplanes) {
            out.instance.halfplanes.push_back(
                HalfPlane{cosv * h.nx - sinv * h.ny, sinv * h.nx + cosv * h.ny, h.c});
        }
        return out;
    }
}

}  // namespace hhs
