#include <doctest.h>

#include <random>

#include "hhs/envelope_tree.hpp"
#include "hhs/preprocess.hpp"
#include "hhs/reduction.hpp"
#include "support.hpp"

using namespace hhs;
using testsupport::denseRandomInstance;
using testsupport::makeE1;
using testsupport::pt;
using testsupport::randInt;
using testsupport::scanFirstUnhit;
using testsupport::scanLastUnhit;

TEST_CASE("E1 lower tree root envelope is the minimum of the two bounding lines") {
    Instance e1 = makeE1();
    CircleInstance circle = buildB(e1);
    EnvelopeTrees trees = buildEnvelopeTrees(e1, circle, /*leafSize=*/1);
    REQUIRE(trees.lower.has_value());
    // Bounding lines y=-x-2 (h_SW) and y=x-2 (h_SE) cross at x=0.
    auto bps = trees.lower->nodeBreakpoints(1, 2);
    REQUIRE(bps.has_value());
    REQUIRE(bps->size() == 1);
    CHECK((*bps)[0] == rational(0));
    CHECK(trees.lower->nodeEnvelopeValueAt(1, 2, rational(0)) == rational(-2));
    CHECK(trees.lower->nodeEnvelopeValueAt(1, 2, rational(3)) == rational(-5));
    CHECK(trees.lower->nodeEnvelopeValueAt(1, 2, rational(-3)) == rational(-5));

    // p3 = (0,-3) lies below the root envelope at x=0, so it hits both lower
    // half-planes.
    CHECK(trees.lower->hitsAll(1, 2, pt(0, -3)));
}

TEST_CASE("single-line tree") {
    Instance inst;
    inst.points = {pt(0, 0)};
    inst.halfplanes = {testsupport::hp(1, -1, 0)};
    CircleInstance circle = buildB(inst);
    EnvelopeTrees trees = buildEnvelopeTrees(inst, circle, 1);
    REQUIRE(trees.lower.has_value());
    CHECK_FALSE(trees.upper.has_value());
    CHECK(trees.lower->hitsAll(1, 1, pt(5, 0)));        // 5 - 0 >= 0
    CHECK_FALSE(trees.lower->hitsAll(1, 1, pt(0, 5)));  // 0 - 5 < 0
}

TEST_CASE("firstUnhit and lastUnhit spec examples on E1") {
    Instance e1 = makeE1();
    CircleInstance circle = buildB(e1);
    EnvelopeTrees trees = buildEnvelopeTrees(e1, circle, 1);
    REQUIRE(trees.lower.has_value());
    REQUIRE(trees.upper.has_value());

    CHECK(trees.lower->firstUnhit(1, pt(0, 3)) == 1);  // p1 misses h_SW
    CHECK_FALSE(trees.lower->firstUnhit(1, pt(0, -3)).has_value());
    CHECK(trees.upper->lastUnhit(4, pt(0, -3)) == 4);  // p3 misses h_NW
}

TEST_CASE("tree queries agree with a linear scan") {
    std::mt19937_64 rng(71);
    testsupport::DenseParams params;
    params.maxPoints = 6;
    params.maxHalfplanes = 14;
    params.normalRange = 5;
    for (int it = 0; it < 150; ++it) {
        Instance inst = denseRandomInstance(rng, params);
        DedupeResult dd = dedupeNormals(inst);
        Instance work{inst.points, dd.halfplanes};
        CircleInstance circle = buildB(work);
        const int leaf = 1 + static_cast<int>(randInt(rng, 0, 3));
        EnvelopeTrees trees = buildEnvelopeTrees(work, circle, leaf);
        for (const Point& p : work.points) {
            for (const auto& tree : {std::cref(trees.lower), std::cref(trees.upper)}) {
                if (!tree.get().has_value()) continue;
                const EnvelopeTree& T = *tree.get();
                for (int q = 0; q < 8; ++q) {
                    int lo = static_cast<int>(randInt(rng, T.posLo(), T.posHi()));
                    int hi = static_cast<int>(randInt(rng, lo, T.posHi()));
                    CHECK(T.firstUnhitInRange(lo, hi, p) == scanFirstUnhit(work, circle, lo, hi, p));
                    CHECK(T.lastUnhitInRange(lo, hi, p) == scanLastUnhit(work, circle, lo, hi, p));
                }
                CHECK(T.firstUnhit(T.posLo(), p) ==
                      scanFirstUnhit(work, circle, T.posLo(), T.posHi(), p));
                CHECK(T.lastUnhit(T.posHi(), p) ==
                      scanLastUnhit(work, circle, T.posLo(), T.posHi(), p));
            }
        }
    }
}

TEST_CASE("node envelopes match direct computation at random nodes") {
    std::mt19937_64 rng(72);
    testsupport::DenseParams params;
    params.maxPoints = 3;
    params.maxHalfplanes = 16;
    params.normalRange = 6;
    for (int it = 0; it < 60; ++it) {
        Instance inst = denseRandomInstance(rng, params);
        DedupeResult dd = dedupeNormals(inst);
        Instance work{inst.points, dd.halfplanes};
        CircleInstance circle = buildB(work);
        EnvelopeTrees trees = buildEnvelopeTrees(work, circle, 1);
        for (const auto& tree : {std::cref(trees.lower), std::cref(trees.upper)}) {
            if (!tree.get().has_value()) continue;
            const EnvelopeTree& T = *tree.get();
            // The root always exists as the node [posLo, posHi].
            for (int s = 0; s < 10; ++s) {
                Rational x = rational(randInt(rng, -40, 40), randInt(rng, 1, 4));
                auto got = T.nodeEnvelopeValueAt(T.posLo(), T.posHi(), x);
                REQUIRE(got.has_value());
                bool lower = T.sense() == EnvelopeSense::Lower;
                Rational expect;
                bool first = true;
                for (int pos = T.posLo(); pos <= T.posHi(); ++pos) {
                    Rational v = work.halfplanes[circle.idAt(pos)].boundingLine().valueAt(x);
                    if (first || (lower ? cmp(v, expect) < 0 : cmp(v, expect) > 0)) expect = v;
                    first = false;
                }
                CHECK(*got == expect);
            }
        }
    }
}
