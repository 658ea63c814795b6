#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "hhs/instance.hpp"
#include "hhs/reduction.hpp"

namespace testsupport {

inline hhs::Rational rat(const char* s) { return hhs::rationalFromString(s); }

inline hhs::Point pt(long x, long y) { return hhs::Point{hhs::rational(x), hhs::rational(y)}; }

inline hhs::HalfPlane hp(long nx, long ny, long c) {
    return hhs::HalfPlane{hhs::rational(nx), hhs::rational(ny), hhs::rational(c)};
}

// Running example: four points on the axes, four diagonal half-planes.
// Circle order [SW, SE, NE, NW], t = 2; optimal hitting sets have size 2.
inline hhs::Instance makeE1() {
    hhs::Instance inst;
    inst.points = {pt(0, 3), pt(3, 0), pt(0, -3), pt(-3, 0)};          // p1..p4 = ids 0..3
    inst.halfplanes = {hp(-1, -1, 2), hp(1, -1, 2), hp(1, 1, 2), hp(-1, 1, 2)};  // SW SE NE NW
    return inst;
}

inline std::int64_t randInt(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

struct DenseParams {
    int maxPoints = 8;
    int maxHalfplanes = 8;
    int coordRange = 8;
    int normalRange = 3;
    bool ensureFeasible = true;
    bool allowHorizontalNormals = false;
};

// Small instances with deliberately tiny coordinate ranges: duplicate points,
// duplicate normals and boundary-exact hits are all common.
inline hhs::Instance denseRandomInstance(std::mt19937_64& rng, const DenseParams& params = {}) {
    hhs::Instance inst;
    const int m = static_cast<int>(randInt(rng, 1, params.maxPoints));
    const int n = static_cast<int>(randInt(rng, 1, params.maxHalfplanes));
    for (int i = 0; i < m; ++i) {
        inst.points.push_back(pt(randInt(rng, -params.coordRange, params.coordRange),
                                 randInt(rng, -params.coordRange, params.coordRange)));
    }
    for (int i = 0; i < n; ++i) {
        long nx = 0, ny = 0;
        while (nx == 0 && ny == 0) {
            nx = randInt(rng, -params.normalRange, params.normalRange);
            ny = randInt(rng, -params.normalRange, params.normalRange);
            if (!params.allowHorizontalNormals && ny == 0) nx = ny = 0;
        }
        const hhs::Point& anchor = inst.points[randInt(rng, 0, m - 1)];
        hhs::Rational dot = hhs::rational(nx) * anchor.x + hhs::rational(ny) * anchor.y;
        hhs::Rational c = params.ensureFeasible
                              ? hhs::Rational(dot - hhs::rational(randInt(rng, 0, 2)))
                              : hhs::Rational(dot + hhs::rational(randInt(rng, -3L * params.coordRange,
                                                                          3L * params.coordRange)));
        inst.halfplanes.push_back(hhs::HalfPlane{hhs::rational(nx), hhs::rational(ny), std::move(c)});
    }
    return inst;
}

// O(n) oracle for the tree queries.
inline std::optional<int> scanFirstUnhit(const hhs::Instance& inst, const hhs::CircleInstance& circle,
                                         int lo, int hi, const hhs::Point& p) {
    for (int pos = lo; pos <= hi; ++pos) {
        if (!inst.halfplanes[circle.idAt(pos)].contains(p)) return pos;
    }
    return std::nullopt;
}

inline std::optional<int> scanLastUnhit(const hhs::Instance& inst, const hhs::CircleInstance& circle,
                                        int lo, int hi, const hhs::Point& p) {
    for (int pos = hi; pos >= lo; --pos) {
        if (!inst.halfplanes[circle.idAt(pos)].contains(p)) return pos;
    }
    return std::nullopt;
}

}  // namespace testsupport
