#pragma once

#include "hhs/circular_cover.hpp"
#include "hhs/instance.hpp"
#include "hhs/reduction.hpp"

namespace hhs {

// Execution record of one solve call; timings in milliseconds.
struct SolveTrace {
    bool feasible = true;
    int infeasibleId = -1;
    bool singleton = false;
    int singletonPointId = -1;
    bool rotated = false;
    bool enteredReduction = false;
    int circleSize = 0;      // half-planes surviving dedupe
    int arcCount = 0;        // size of the arc family handed to the cover solver
    int coverSize = 0;
    double buildMs = 0.0;    // preprocessing + circle + trees + arc family
    double coverMs = 0.0;    // cover solve + mapping back
    double totalMs = 0.0;
};

// The full pipeline: feasibility, singleton special case, exact rotation,
// reduced arc family A-hat, circular-point cover, mapping back. O(n log^2 n).
HittingSet solve(const Instance& inst, SolveTrace* trace = nullptr);

// Same pipeline over the full arc family A instead of A-hat; O(n^2 log n).
// Cross-validation tier for moderate sizes.
HittingSet solveBaseline(const Instance& inst, SolveTrace* trace = nullptr);

// Independent oracle: increasing-size subset enumeration with direct hit
// checks, no reduction machinery. Practical for |P| up to ~14. maxK < 0 means
// up to |P|.
HittingSet solveBruteForce(const Instance& inst, int maxK = -1);

// Owners of the chosen arcs. Asserts the owners are pairwise distinct, that
// |P_opt| = |A_opt| and that the result verifies against the instance.
HittingSet mapCoverToHittingSet(const Instance& inst, const CoverSolution& cover,
                                const std::vector<Arc>& arcs);

}  // namespace hhs
