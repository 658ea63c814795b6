#include <doctest.h>

#include <random>

#include "hhs/envelope.hpp"
#include "support.hpp"

using namespace hhs;
using testsupport::randInt;

namespace {
Line ln(long s, long b) { return Line{rational(s), rational(b)}; }
}  // namespace

TEST_CASE("upperEnvelopeOfLines spec example") {
    // {y=-3, y=3x, y=3, y=-3x}: -3x left, 3 in the middle, 3x right; y=-3 absent.
    std::vector<Line> lines = {ln(0, -3), ln(3, 0), ln(0, 3), ln(-3, 0)};
    UpperEnvelope env = upperEnvelopeOfLines(lines);
    REQUIRE(env.edgeCount() == 3);
    CHECK(env.edges[0].lineId == 3);
    CHECK(env.edges[1].lineId == 2);
    CHECK(env.edges[2].lineId == 1);
    REQUIRE(env.breakpoints.size() == 2);
    CHECK(env.breakpoints[0] == rational(-1));
    CHECK(env.breakpoints[1] == rational(1));
}

TEST_CASE("upperEnvelopeOfLines degenerate inputs") {
    std::vector<Line> single = {ln(0, 0)};
    UpperEnvelope env = upperEnvelopeOfLines(single);
    CHECK(env.edgeCount() == 1);
    CHECK(env.breakpoints.empty());

    std::vector<Line> parallel = {ln(1, 0), ln(1, 1)};
    env = upperEnvelopeOfLines(parallel);
    REQUIRE(env.edgeCount() == 1);
    CHECK(env.edges[0].lineId == 1);

    std::vector<Line> dup = {ln(2, 5), ln(2, 5)};
    env = upperEnvelopeOfLines(dup);
    REQUIRE(env.edgeCount() == 1);
    CHECK(env.edges[0].lineId == 0);
}

TEST_CASE("envelope equals pointwise maximum at random samples") {
    std::mt19937_64 rng(21);
    for (int it = 0; it < 50; ++it) {
        std::vector<Line> lines;
        int k = static_cast<int>(randInt(rng, 1, 25));
        for (int i = 0; i < k; ++i) {
            lines.push_back(Line{rational(randInt(rng, -8, 8), randInt(rng, 1, 4)),
                                 rational(randInt(rng, -20, 20), randInt(rng, 1, 4))});
        }
        UpperEnvelope env = upperEnvelopeOfLines(lines);
        // Slopes strictly increase across edges.
        for (int e = 0; e + 1 < env.edgeCount(); ++e) {
            CHECK(cmp(env.edges[e].line.slope, env.edges[e + 1].line.slope) < 0);
        }
        for (int s = 0; s < 20; ++s) {
            Rational x = rational(randInt(rng, -60, 60), randInt(rng, 1, 5));
            Rational expect = lines[0].valueAt(x);
            for (const Line& l : lines) {
                Rational v = l.valueAt(x);
                if (cmp(v, expect) > 0) expect = v;
            }
            CHECK(env.valueAt(x) == expect);
        }
    }
}

TEST_CASE("envelope breakpoint belongs to both neighboring spans") {
    std::vector<Line> lines = {ln(-1, 0), ln(1, 0)};
    UpperEnvelope env = upperEnvelopeOfLines(lines);
    REQUIRE(env.edgeCount() == 2);
    Rational bp = env.breakpoints[0];
    CHECK(env.edgeIndexAt(bp) == 0);  // leftmost containing edge
    CHECK(env.edges[0].line.valueAt(bp) == env.edges[1].line.valueAt(bp));
    auto [lo0, hi0] = env.spanOf(0);
    auto [lo1, hi1] = env.spanOf(1);
    CHECK(!lo0.has_value());
    CHECK(hi0.value() == bp);
    CHECK(lo1.value() == bp);
    CHECK(!hi1.has_value());
}
