#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "lindiag/matrix.hpp"
#include "lindiag/pqtree.hpp"
#include "lindiag/reduction.hpp"
#include "lindiag/tsp.hpp"

namespace lindiag {

/// An ordering constraint cannot be satisfied (or the solver returned a
/// non-optimal tour, which Lemma-style guarantees do not cover).
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    tsp::SolverConfig solver;
    bool collapse = true;  // merge duplicate columns before reducing
    std::optional<std::pair<int, int>> fix_rows;  // draw these two rows as single segments
    std::optional<RowWeights> weights;
    std::optional<PQTree> pq_constraint;
    std::string tsplib_out;  // when set, the reduced instance is written here
};

struct OrderResult {
    ColumnPermutation order;
    std::int64_t blocks = 0;     // cons1 of the input matrix under `order`
    std::int64_t objective = 0;  // blocks, or the weighted block count
    bool weighted = false;
    bool optimal = false;
    std::int64_t objective_lower_bound = 0;
    std::string algorithm;
    tsp::SearchStats stats;
};

/// Full pipeline: collapse duplicates (where sound for the chosen
/// constraint), build the reduction, solve, rotate the tour at the
/// sentinel, expand. At most one of fix_rows / weights / pq_constraint may
/// be set.
OrderResult solve_ordering(const BinaryMatrix& a, const SolveOptions& opt = {});

}  // namespace lindiag
