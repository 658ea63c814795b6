#include "hhs/circular_cover.hpp"

#include <algorithm>
#include <limits>

#include "hhs/errors.hpp"

namespace hhs {

int coverIntervalLength(const CoverInterval& iv, int n) {
    return (iv.end - iv.start + n) % n + 1;
}

bool coverIntervalContains(const CoverInterval& iv, int pos, int n) {
    return (pos - iv.start + n) % n < coverIntervalLength(iv, n);
}

namespace {

void validate(const CoverProblem& prob) {
    if (prob.n < 1) throw BadIndexError("cover problem needs n >= 1");
    for (const CoverInterval& iv : prob.intervals) {
        if (iv.start < 1 || iv.start > prob.n || iv.end < 1 || iv.end > prob.n) {
            throw BadIndexError("interval endpoint out of range 1..n");
        }
    }
}

}  // namespace

CoverSolution minCircularPointCover(const CoverProblem& prob) {
    validate(prob);
    const int n = prob.n;
    const int m = static_cast<int>(prob.intervals.size());

    for (int i = 0; i < m; ++i) {
        if (coverIntervalLength(prob.intervals[i], n) == n) {
            return CoverSolution{{i}};
        }
    }

    // farthest[q]: among intervals covering q, the one whose end reaches
    // farthest beyond q; computed by a prefix-max sweep over interval start
    // events on the circle unrolled from position 1. Ties pick the lowest id.
    std::vector<std::vector<std::pair<int, int>>> startsAt(n + 1);  // pos -> (unrolled end, id)
    for (int i = 0; i < m; ++i) {
        const CoverInterval& iv = prob.intervals[i];
        if (iv.start <= iv.end) {
            startsAt[iv.start].push_back({iv.end, i});
        } else {
            startsAt[iv.start].push_back({iv.end + n, i});
            startsAt[1].push_back({iv.end, i});
        }
    }
    std::vector<int> farthestId(n + 1, -1);
    int bestEnd = std::numeric_limits<int>::min();
    int bestId = -1;
    for (int q = 1; q <= n; ++q) {
        for (auto [endU, id] : startsAt[q]) {
            if (endU > bestEnd || (endU == bestEnd && id < bestId)) {
                bestEnd = endU;
                bestId = id;
            }
        }
        if (bestId < 0 || bestEnd < q) throw UncoverableError(q);
        farthestId[q] = bestId;
    }

    // Binary lifting over the greedy successor: one chain step from interval i
    // continues with the farthest interval covering the position after end(i).
    int levels = 1;
    while ((1 << levels) < n + 1) ++levels;
    std::vector<std::vector<int>> up(levels, std::vector<int>(m));
    std::vector<std::vector<int>> gain(levels, std::vector<int>(m));  // capped at n
    for (int i = 0; i < m; ++i) {
        int q = prob.intervals[i].end % n + 1;
        int s = farthestId[q];
        up[0][i] = s;
        gain[0][i] = (prob.intervals[s].end - prob.intervals[i].end + n) % n;
    }
    for (int k = 1; k < levels; ++k) {
        for (int i = 0; i < m; ++i) {
            int mid = up[k - 1][i];
            up[k][i] = up[k - 1][mid];
            gain[k][i] = std::min(n, gain[k - 1][i] + gain[k - 1][mid]);
        }
    }

    int bestCount = std::numeric_limits<int>::max();
    int bestCandidate = -1;
    for (int a = 0; a < m; ++a) {
        if (!coverIntervalContains(prob.intervals[a], 1, n)) continue;
        const int q0 = prob.intervals[a].end % n + 1;                   // first uncovered position
        const int tpos = prob.intervals[a].start == 1 ? n : prob.intervals[a].start - 1;
        const int target = (tpos - q0 + n) % n;                        // progress needed past q0
        int cur = farthestId[q0];
        int progress = (prob.intervals[cur].end - q0 + n) % n;
        int count = 2;  // a itself plus the first chain interval
        if (progress < target) {
            for (int k = levels - 1; k >= 0; --k) {
                if (progress + gain[k][cur] < target) {
                    progress += gain[k][cur];
                    cur = up[k][cur];
                    count += 1 << k;
                }
            }
            count += 1;  // final step crosses the target
        }
        if (count < bestCount) {
            bestCount = count;
            bestCandidate = a;
        }
    }

    // Replay the winning chain to recover ids.
    CoverSolution sol;
    sol.intervalIds.push_back(bestCandidate);
    const int q0 = prob.intervals[bestCandidate].end % n + 1;
    const int tpos = prob.intervals[bestCandidate].start == 1 ? n : prob.intervals[bestCandidate].start - 1;
    const int target = (tpos - q0 + n) % n;
    int q = q0;
    while (true) {
        int b = farthestId[q];
        sol.intervalIds.push_back(b);
        int reach = (prob.intervals[b].end - q0 + n) % n;
        if (reach >= target) break;
        q = prob.intervals[b].end % n + 1;
    }
    if (static_cast<int>(sol.intervalIds.size()) != bestCount) {
        throw InternalInvariantError("cover chain replay disagrees with counted minimum");
    }
    return sol;
}

CoverSolution bruteForceCover(const CoverProblem& prob, int maxIntervals) {
    validate(prob);
    const int n = prob.n;
    const int m = static_cast<int>(prob.intervals.size());
    if (n > 64) throw BadIndexError("bruteForceCover supports n <= 64");

    const std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> mask(m, 0);
    for (int i = 0; i < m; ++i) {
        for (int pos = 1; pos <= n; ++pos) {
            if (coverIntervalContains(prob.intervals[i], pos, n)) {
                mask[i] |= std::uint64_t{1} << (pos - 1);
            }
        }
    }
    std::uint64_t unionAll = 0;
    for (std::uint64_t mk : mask) unionAll |= mk;
    if (unionAll != all) {
        for (int pos = 1; pos <= n; ++pos) {
            if (!(unionAll >> (pos - 1) & 1)) throw UncoverableError(pos);
        }
    }

    const int cap = maxIntervals < 0 ? m : std::min(maxIntervals, m);
    std::vector<int> pick;
    for (int k = 1; k <= cap; ++k) {
        pick.assign(k, 0);
        for (int i = 0; i < k; ++i) pick[i] = i;
        while (true) {
            std::uint64_t covered = 0;
            for (int i : pick) covered |= mask[i];
            if (covered == all) {
                return CoverSolution{pick};
            }
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    throw BadIndexError("bruteForceCover: maxIntervals too small for any cover");
}

}  // namespace hhs
