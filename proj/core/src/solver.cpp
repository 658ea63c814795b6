#include "hhs/solver.hpp"

#include <algorithm>
#include <chrono>

#include "hhs/errors.hpp"
#include "hhs/preprocess.hpp"

namespace hhs {

namespace {

using Clock = std::chrono::steady_clock;

double msSince(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

HittingSet runPipeline(const Instance& inst, bool reduced, SolveTrace* trace) {
    SolveTrace local;
    SolveTrace& tr = trace ? *trace : local;
    tr = SolveTrace{};
    const auto t0 = Clock::now();

    if (auto bad = feasibilityCheck(inst)) {
        tr.feasible = false;
        tr.infeasibleId = *bad;
        tr.totalMs = msSince(t0);
        return HittingSet{HittingSet::Status::Infeasible, {}};
    }

    DedupeResult dd = dedupeNormals(inst);
    Instance work{inst.points, std::move(dd.halfplanes)};
    tr.circleSize = static_cast<int>(work.halfplanes.size());

    if (auto pid = singletonCheck(work)) {
        tr.singleton = true;
        tr.singletonPointId = *pid;
        tr.buildMs = msSince(t0);
        tr.totalMs = msSince(t0);
        return HittingSet{HittingSet::Status::Optimal, {*pid}};
    }

    RotatedInstance rot = rotateIfNeeded(work);
    tr.rotated = rot.record.applied;
    tr.enteredReduction = true;

    CircleInstance circle = buildB(rot.instance);
    std::vector<Arc> arcs;
    if (reduced) {
        EnvelopeTrees trees = buildEnvelopeTrees(rot.instance, circle);
        arcs = buildReducedArcs(rot.instance, circle, trees);
    } else {
        arcs = buildFullArcs(rot.instance, circle);
    }
    tr.arcCount = static_cast<int>(arcs.size());
    tr.buildMs = msSince(t0);

    const auto t1 = Clock::now();
    CoverProblem prob;
    prob.n = circle.size();
    prob.intervals.reserve(arcs.size());
    for (const Arc& a : arcs) prob.intervals.push_back(CoverInterval{a.i, a.j});
    CoverSolution cover;
    try {
        cover = minCircularPointCover(prob);
    } catch (const UncoverableError& e) {
        // Feasibility passed, so every circle position must be coverable.
        throw InternalInvariantError(std::string("cover solver: ") + e.what());
    }
    tr.coverSize = cover.size();
    HittingSet hs = mapCoverToHittingSet(inst, cover, arcs);
    tr.coverMs = msSince(t1);
    tr.totalMs = msSince(t0);
    return hs;
}

}  // namespace

HittingSet solve(const Instance& inst, SolveTrace* trace) { return runPipeline(inst, true, trace); }

HittingSet solveBaseline(const Instance& inst, SolveTrace* trace) {
    return runPipeline(inst, false, trace);
}

HittingSet solveBruteForce(const Instance& inst, int maxK) {
    const int m = static_cast<int>(inst.points.size());
    const int n = static_cast<int>(inst.halfplanes.size());
    const int cap = maxK < 0 ? m : std::min(maxK, m);

    // hitMask[p] over half-planes, in 64-bit words.
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> hitMask(m, std::vector<std::uint64_t>(words, 0));
    for (int p = 0; p < m; ++p) {
        for (int h = 0; h < n; ++h) {
            if (inst.halfplanes[h].contains(inst.points[p])) {
                hitMask[p][h / 64] |= std::uint64_t{1} << (h % 64);
            }
        }
    }
    std::vector<std::uint64_t> all(words, ~std::uint64_t{0});
    if (n % 64) all[words - 1] = (std::uint64_t{1} << (n % 64)) - 1;

    std::vector<int> pick;
    std::vector<std::uint64_t> acc(words);
    for (int k = 1; k <= cap; ++k) {
        pick.assign(k, 0);
        for (int i = 0; i < k; ++i) pick[i] = i;
        if (k > m) break;
        while (true) {
            std::fill(acc.begin(), acc.end(), 0);
            for (int p : pick) {
                for (int w = 0; w < words; ++w) acc[w] |= hitMask[p][w];
            }
            if (acc == all) {
                return HittingSet{HittingSet::Status::Optimal, pick};
            }
            int i = k - 1;
            while (i >= 0 && pick[i] == m - k + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return HittingSet{HittingSet::Status::Infeasible, {}};
}

HittingSet mapCoverToHittingSet(const Instance& inst, const CoverSolution& cover,
                                const std::vector<Arc>& arcs) {
    std::vector<int> owners;
    owners.reserve(cover.intervalIds.size());
    for (int id : cover.intervalIds) owners.push_back(arcs[id].owner);
    std::sort(owners.begin(), owners.end());
    if (std::adjacent_find(owners.begin(), owners.end()) != owners.end()) {
        throw InternalInvariantError("two chosen arcs share a defining point");
    }
    if (owners.size() != cover.intervalIds.size()) {
        throw InternalInvariantError("hitting set size differs from cover size");
    }
    if (auto viol = verifyHittingSet(inst, owners)) {
        throw InternalInvariantError("mapped hitting set misses half-plane " + std::to_string(*viol));
    }
    return HittingSet{HittingSet::Status::Optimal, std::move(owners)};
}

}  // namespace hhs
