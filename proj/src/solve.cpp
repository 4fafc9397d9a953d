#include "lindiag/solve.hpp"

#include <algorithm>
#include <stdexcept>

#include "lindiag/io.hpp"

namespace lindiag {

namespace {

const char* algorithm_name(tsp::Algorithm a) {
    switch (a) {
        case tsp::Algorithm::brute: return "brute";
        case tsp::Algorithm::held_karp: return "held_karp";
        case tsp::Algorithm::branch_and_bound: return "branch_and_bound";
        case tsp::Algorithm::heuristic: return "tsp_heuristic";
        case tsp::Algorithm::auto_dispatch: break;
    }
    return "auto";
}

std::pair<tsp::SolveResult, std::string> run_solver(const TspInstance& inst,
                                                    const tsp::SolverConfig& cfg) {
    tsp::SolverConfig concrete = cfg;
    // every tour through a column-order reduction has even length
    concrete.length_granularity = 2;
    if (concrete.algorithm == tsp::Algorithm::auto_dispatch) {
        concrete.algorithm = tsp::held_karp_accepts(inst, concrete)
                                 ? tsp::Algorithm::held_karp
                                 : tsp::Algorithm::branch_and_bound;
    }
    return {tsp::solve(inst, concrete), algorithm_name(concrete.algorithm)};
}

CollapseMap singleton_map(int cols) {
    CollapseMap m;
    m.groups.reserve(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) m.groups.push_back({j});
    return m;
}

std::int64_t ceil_half(std::int64_t v) { return v <= 0 ? 0 : (v + 1) / 2; }

}  // namespace

OrderResult solve_ordering(const BinaryMatrix& a, const SolveOptions& opt) {
    const int constraints = (opt.fix_rows ? 1 : 0) + (opt.weights ? 1 : 0) +
                            (opt.pq_constraint ? 1 : 0);
    if (constraints > 1) {
        throw std::invalid_argument("at most one ordering constraint may be given");
    }

    OrderResult out;

    if (opt.pq_constraint) {
        if (!opt.tsplib_out.empty()) write_file(opt.tsplib_out, export_tsplib(build_plain(a)));
        auto r = constrained_min_cons1(a, *opt.pq_constraint, opt.solver);
        out.order = std::move(r.order);
        out.blocks = r.value;
        out.objective = r.value;
        out.optimal = true;
        out.objective_lower_bound = r.value;
        out.algorithm = "pqtree_dp";
        return out;
    }

    if (opt.weights) {
        const TspInstance inst = build_weighted(a, *opt.weights);
        if (!opt.tsplib_out.empty()) write_file(opt.tsplib_out, export_tsplib(inst));
        auto [res, name] = run_solver(inst, opt.solver);
        out.order = tour_to_permutation(res.tour.order, inst);
        out.blocks = cons1(apply_permutation(a, out.order));
        out.weighted = true;
        out.objective = res.length / 2;
        out.optimal = res.optimal;
        out.objective_lower_bound = res.optimal ? out.objective : ceil_half(res.stats.lower_bound);
        if (!out.optimal && out.objective_lower_bound >= out.objective) out.optimal = true;
        out.algorithm = std::move(name);
        out.stats = res.stats;
        return out;
    }

    if (opt.fix_rows) {
        const auto [r1, r2] = *opt.fix_rows;
        if (r1 == r2 || r1 < 0 || r2 < 0 || r1 >= a.rows() || r2 >= a.rows()) {
            throw InfeasibleError("fixed rows must be two distinct valid row indices");
        }
        if (!a.row_has_one(r1) || !a.row_has_one(r2)) {
            throw InfeasibleError("an empty set cannot be drawn as a single segment");
        }
        // Identical columns agree on both supports, so collapsing first is
        // sound; the groups are then taken on the collapsed matrix.
        auto [work, cmap] = opt.collapse ? collapse_duplicates(a)
                                         : std::make_pair(a, singleton_map(a.cols()));
        const ColumnGroups groups = groups_from_two_rows(work, r1, r2);
        const TspInstance inst = build_grouped(work, groups);
        if (!opt.tsplib_out.empty()) write_file(opt.tsplib_out, export_tsplib(inst));
        auto [res, name] = run_solver(inst, opt.solver);
        const ColumnPermutation collapsed_order = tour_to_permutation(res.tour.order, inst);
        if (!groups_consecutive(collapsed_order, groups)) {
            throw InfeasibleError("constraint infeasible or solver not optimal");
        }
        out.order = expand_permutation(collapsed_order, cmap);
        out.blocks = cons1(apply_permutation(a, out.order));
        out.objective = out.blocks;
        out.optimal = res.optimal;
        const std::int64_t penalty_total = 2 * groups.group_count() * groups.penalty;
        out.objective_lower_bound =
            res.optimal ? out.objective : ceil_half(res.stats.lower_bound - penalty_total);
        if (!out.optimal && out.objective_lower_bound >= out.objective) out.optimal = true;
        out.algorithm = std::move(name);
        out.stats = res.stats;
        return out;
    }

    auto [work, cmap] = opt.collapse ? collapse_duplicates(a)
                                     : std::make_pair(a, singleton_map(a.cols()));
    const TspInstance inst = build_plain(work);
    if (!opt.tsplib_out.empty()) write_file(opt.tsplib_out, export_tsplib(inst));
    auto [res, name] = run_solver(inst, opt.solver);
    const ColumnPermutation collapsed_order = tour_to_permutation(res.tour.order, inst);
    out.order = expand_permutation(collapsed_order, cmap);
    out.blocks = cons1(apply_permutation(a, out.order));
    out.objective = out.blocks;
    out.optimal = res.optimal;
    out.objective_lower_bound = res.optimal ? out.objective : ceil_half(res.stats.lower_bound);
    out.algorithm = std::move(name);
    out.stats = res.stats;
    if (!out.optimal && out.objective_lower_bound >= out.objective) out.optimal = true;
    if (!out.optimal && out.blocks == a.nonzero_rows()) {
        // Every non-empty row is a single block; nothing can do better.
        out.optimal = true;
        out.objective_lower_bound = out.objective;
    }
    return out;
}

}  // namespace lindiag
