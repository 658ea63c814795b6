#include <doctest.h>

#include <random>

#include "hhs/region.hpp"
#include "support.hpp"

using namespace hhs;
using testsupport::hp;
using testsupport::pt;
using testsupport::randInt;

TEST_CASE("halfPlaneIntersection unit square") {
    std::vector<HalfPlane> hs = {hp(1, 0, 0), hp(-1, 0, -1), hp(0, 1, 0), hp(0, -1, -1)};
    ConvexRegion r = halfPlaneIntersection(hs);
    CHECK(r.status() == RegionStatus::BoundedPolygon);
    REQUIRE(r.boundary().size() == 4);
    CHECK(r.boundary()[0] == pt(0, 0));
    CHECK(r.boundary()[1] == pt(1, 0));
    CHECK(r.boundary()[2] == pt(1, 1));
    CHECK(r.boundary()[3] == pt(0, 1));

    CHECK(r.contains(Point{rational(1, 2), rational(1, 2)}));
    CHECK_FALSE(r.contains(pt(2, 0)));
    CHECK(r.contains(pt(0, 0)));  // closed boundary
}

TEST_CASE("halfPlaneIntersection contradictory and unbounded") {
    std::vector<HalfPlane> contradictory = {hp(0, 1, 1), hp(0, -1, 0)};  // y>=1, y<=0
    CHECK(halfPlaneIntersection(contradictory).status() == RegionStatus::Empty);

    std::vector<HalfPlane> half = {hp(0, 1, 0)};
    ConvexRegion r = halfPlaneIntersection(half);
    CHECK(r.status() == RegionStatus::Unbounded);
    CHECK(r.contains(pt(100, 5)));
    CHECK_FALSE(r.contains(pt(0, -1)));
}

TEST_CASE("halfPlaneIntersection degenerate shapes") {
    // Single point (0,0).
    std::vector<HalfPlane> pointOnly = {hp(1, 1, 0), hp(-1, -1, 0), hp(1, -1, 0), hp(-1, 1, 0)};
    ConvexRegion r = halfPlaneIntersection(pointOnly);
    CHECK(r.status() == RegionStatus::BoundedPolygon);
    CHECK(r.contains(pt(0, 0)));
    CHECK_FALSE(r.contains(pt(1, 0)));

    // The x-axis: a line, unbounded but with empty interior.
    std::vector<HalfPlane> axis = {hp(0, 1, 0), hp(0, -1, 0)};
    r = halfPlaneIntersection(axis);
    CHECK(r.status() == RegionStatus::Unbounded);
    CHECK(r.contains(pt(7, 0)));
    CHECK_FALSE(r.contains(pt(7, 1)));

    // Vertical slab.
    std::vector<HalfPlane> slab = {hp(1, 0, 0), hp(-1, 0, -2)};
    r = halfPlaneIntersection(slab);
    CHECK(r.status() == RegionStatus::Unbounded);
    CHECK(r.contains(pt(1, 1000)));
    CHECK_FALSE(r.contains(pt(3, 0)));
}

TEST_CASE("region classifies points exactly like the constraint conjunction") {
    std::mt19937_64 rng(31);
    int checked = 0;
    for (int it = 0; it < 80; ++it) {
        std::vector<HalfPlane> hs;
        int k = static_cast<int>(randInt(rng, 1, 12));
        for (int i = 0; i < k; ++i) {
            long nx = 0, ny = 0;
            while (nx == 0 && ny == 0) {
                nx = randInt(rng, -4, 4);
                ny = randInt(rng, -4, 4);
            }
            hs.push_back(hp(nx, ny, randInt(rng, -12, 12)));
        }
        ConvexRegion r = halfPlaneIntersection(hs);
        for (int s = 0; s < 25; ++s) {
            Point p{rational(randInt(rng, -30, 30), randInt(rng, 1, 3)),
                    rational(randInt(rng, -30, 30), randInt(rng, 1, 3))};
            bool direct = true;
            for (const HalfPlane& h : hs) direct = direct && h.contains(p);
            CHECK(r.contains(p) == direct);
            ++checked;
        }
        if (r.status() == RegionStatus::Empty) {
            for (int s = 0; s < 5; ++s) {
                Point p{rational(randInt(rng, -9, 9)), rational(randInt(rng, -9, 9))};
                bool direct = true;
                for (const HalfPlane& h : hs) direct = direct && h.contains(p);
                CHECK_FALSE(direct);
            }
        }
    }
    CHECK(checked >= 1000);
}
