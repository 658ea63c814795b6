#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hhs/envelope.hpp"
#include "hhs/geometry.hpp"

namespace hhs {

enum class EnvelopeSense {
    Lower,  // p hits member k iff p.y <= line_k(p.x); nodes hold lower envelopes
    Upper,  // p hits member k iff p.y >= line_k(p.x); nodes hold upper envelopes
};

inline constexpr int kDefaultEnvelopeLeaf = 8;

// Balanced tree over an index-contiguous run of half-plane bounding lines,
// one line per circle position posLo, posLo+1, .... Each internal node stores
// the envelope of its members (min for the Lower sense, max for Upper), which
// answers "does p hit every member here" with one binary search. first/last
// unhit queries descend into the first violating child: O(log^2 size).
//
// Internally every node keeps an upper envelope of transformed lines (Lower
// sense negates them), so one code path serves both groups.
class EnvelopeTree {
public:
    // Slopes must be strictly increasing across `lines`.
    EnvelopeTree(std::vector<Line> lines, int posLo, EnvelopeSense sense,
                 int leafSize = kDefaultEnvelopeLeaf);

    int posLo() const { return posLo_; }
    int posHi() const { return posLo_ + static_cast<int>(lines_.size()) - 1; }
    EnvelopeSense sense() const { return sense_; }

    // Smallest position in [lo, hi] whose half-plane p does not hit.
    std::optional<int> firstUnhitInRange(int lo, int hi, const Point& p) const;
    // Largest position in [lo, hi] whose half-plane p does not hit.
    std::optional<int> lastUnhitInRange(int lo, int hi, const Point& p) const;

    std::optional<int> firstUnhit(int fromPos, const Point& p) const {
        return firstUnhitInRange(fromPos, posHi(), p);
    }
    std::optional<int> lastUnhit(int fromPos, const Point& p) const {
        return lastUnhitInRange(posLo(), fromPos, p);
    }

    bool hitsAll(int lo, int hi, const Point& p) const {
        return !firstUnhitInRange(lo, hi, p).has_value();
    }
    bool hitsPosition(int pos, const Point& p) const;

    // Introspection for tests: envelope value of the node covering exactly
    // [lo, hi] in member sense (min of lines for Lower), and its breakpoints.
    std::optional<Rational> nodeEnvelopeValueAt(int lo, int hi, const Rational& x) const;
    std::optional<std::vector<Rational>> nodeBreakpoints(int lo, int hi) const;

private:
    struct Node {
        int lo, hi;  // member index range [lo, hi)
        int left = -1, right = -1;
        std::vector<int> edgeLine;       // envelope edges as indices into lines_
        std::vector<Rational> edgeFrom;  // breakpoints; edgeLine.size()-1 entries
    };

    int build(int lo, int hi);
    bool nodeAllHit(const Node& node, const Rational& x, const Rational& qy) const;
    bool memberHit(int k, const Rational& x, const Rational& qy) const;
    int firstViolation(int nodeIdx, int lo, int hi, const Rational& x, const Rational& qy) const;
    int lastViolation(int nodeIdx, int lo, int hi, const Rational& x, const Rational& qy) const;
    int findNode(int lo, int hi) const;

    std::vector<Line> lines_;  // transformed: negated for the Lower sense
    std::vector<Node> nodes_;
    int root_ = -1;
    int posLo_ = 1;
    int leafSize_ = kDefaultEnvelopeLeaf;
    EnvelopeSense sense_ = EnvelopeSense::Lower;
};

}  // namespace hhs
