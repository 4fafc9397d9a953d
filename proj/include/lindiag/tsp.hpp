#pragma once

#include <chrono>
#include <cstdint>
#include <vector>

#include "lindiag/reduction.hpp"

namespace lindiag::tsp {

struct Tour {
    std::vector<int> order;  // every vertex exactly once
};

enum class Algorithm { brute, held_karp, branch_and_bound, heuristic, auto_dispatch };

struct SolverConfig {
    Algorithm algorithm = Algorithm::auto_dispatch;
    std::chrono::milliseconds time_limit{60000};
    std::uint64_t seed = 0;
    int two_opt_rounds = 64;
    int held_karp_cap = 22;   // vertices; the subset table is refused above this
    int pq_degree_cap = 14;   // max PQ-tree degree accepted by the constrained solver
    // Every tour length is a multiple of this; bounds are rounded up to it.
    // The column-order reductions set 2 (tour length is twice the block
    // count there).
    std::int64_t length_granularity = 1;
};

struct SearchStats {
    std::int64_t nodes_expanded = 0;
    std::chrono::microseconds elapsed{0};
    std::int64_t lower_bound = 0;
};

struct SolveResult {
    Tour tour;
    std::int64_t length = 0;
    bool optimal = false;
    SearchStats stats;
};

/// Enumerates every tour with vertex 0 first; capped at 10 vertices. The
/// oracle the other solvers are checked against.
SolveResult solve_brute(const TspInstance& inst);

/// Subset dynamic program, O(2^n * n^2) time and O(2^n * n) memory.
/// Refused above cfg.held_karp_cap; ties during backtracking go to the
/// smallest predecessor index.
SolveResult solve_held_karp(const TspInstance& inst, const SolverConfig& cfg = {});

/// Depth-first branch and bound over partial paths. Lower bound: partial
/// cost + MST over the unvisited vertices joined with both path ends.
/// Warm-started from solve_heuristic; on timeout returns the best tour
/// found with optimal = false and a certified lower bound.
SolveResult solve_branch_and_bound(const TspInstance& inst, const SolverConfig& cfg = {});

/// Nearest neighbour from the sentinel, then 2-opt and Or-opt passes.
SolveResult solve_heuristic(const TspInstance& inst, const SolverConfig& cfg = {});

/// Dispatch: held_karp when the instance fits under the cap, otherwise
/// branch and bound.
SolveResult solve(const TspInstance& inst, const SolverConfig& cfg = {});

/// Every tour contains a spanning tree, so the MST cost is a valid lower
/// bound on the optimal tour length.
std::int64_t mst_lower_bound(const TspInstance& inst);

/// Whether solve_held_karp accepts the instance under cfg.
bool held_karp_accepts(const TspInstance& inst, const SolverConfig& cfg);

}  // namespace lindiag::tsp
