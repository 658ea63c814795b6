#pragma once

#include <vector>

namespace hhs {

// Cyclic interval over positions 1..n covering start, start+1, ..., end
// (wrapping). start == end covers a single position; an interval of cyclic
// length n covers the whole circle.
struct CoverInterval {
    int start;
    int end;
};

struct CoverProblem {
    int n;  // positions 1..n
    std::vector<CoverInterval> intervals;
};

struct CoverSolution {
    std::vector<int> intervalIds;
    int size() const { return static_cast<int>(intervalIds.size()); }
};

// Minimum number of intervals covering every position, O((n+m) log (n+m)):
// every cover has an interval through position 1; for each such candidate the
// greedy farthest-reach chain closes the rest of the circle, counted with
// binary-lifting jump tables. Throws UncoverableError when a position lies in
// no interval.
CoverSolution minCircularPointCover(const CoverProblem& prob);

// Exact oracle by subset enumeration in increasing size; n <= 64 and small
// interval counts only. maxIntervals < 0 means no cap.
CoverSolution bruteForceCover(const CoverProblem& prob, int maxIntervals = -1);

// Shared helpers.
int coverIntervalLength(const CoverInterval& iv, int n);
bool coverIntervalContains(const CoverInterval& iv, int pos, int n);

}  // namespace hhs
