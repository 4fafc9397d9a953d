#include "lindiag/verify.hpp"

#include <algorithm>
#include <string>

#include "lindiag/gen.hpp"
#include "lindiag/reduction.hpp"
#include "lindiag/rng.hpp"
#include "lindiag/solve.hpp"
#include "lindiag/tsp.hpp"

namespace lindiag {

namespace {

void report(std::ostream& out, const std::string& name, int failures, int trials) {
    out << (failures == 0 ? "ok   " : "FAIL ") << name << " (" << trials << " trials";
    if (failures > 0) out << ", " << failures << " failed";
    out << ")\n";
}

int check_tour_identity(int trials, Rng& rng) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int m = rng.next_int(1, 12);
        const int n = rng.next_int(1, 12);
        const BinaryMatrix a = random_matrix(m, n, 0.1 + 0.8 * rng.next_unit(), rng.next_u64());
        const TspInstance inst = build_plain(a);
        const std::vector<int> tour = rng.permutation(inst.size());
        const ColumnPermutation perm = tour_to_permutation(tour, inst);
        if (tour_length(inst, tour) != 2 * cons1(apply_permutation(a, perm))) ++failures;
    }
    return failures;
}

int check_weighted_identity(int trials, Rng& rng) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int m = rng.next_int(1, 10);
        const int n = rng.next_int(1, 10);
        const BinaryMatrix a = random_matrix(m, n, 0.1 + 0.8 * rng.next_unit(), rng.next_u64());
        std::vector<std::int64_t> w(static_cast<std::size_t>(m));
        for (auto& v : w) v = rng.next_int(1, 9);
        const RowWeights weights{std::vector<std::int64_t>(w)};
        const TspInstance inst = build_weighted(a, weights);
        const std::vector<int> tour = rng.permutation(inst.size());
        const BinaryMatrix permuted =
            apply_permutation(a, tour_to_permutation(tour, inst));
        std::int64_t weighted = 0;
        for (int i = 0; i < m; ++i) weighted += w[static_cast<std::size_t>(i)] * cons1_row(permuted, i);
        if (tour_length(inst, tour) != 2 * weighted) ++failures;
    }
    return failures;
}

int check_collapse_roundtrip(int trials, Rng& rng) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int m = rng.next_int(1, 6);
        const int distinct = rng.next_int(1, 3);
        const int n = rng.next_int(distinct, 7);
        const BinaryMatrix base = random_matrix(m, distinct, 0.2 + 0.6 * rng.next_unit(), rng.next_u64());
        BinaryMatrix a(m, n);
        for (int j = 0; j < n; ++j) {
            const int src = j < distinct ? j : rng.next_int(0, distinct - 1);
            for (int i = 0; i < m; ++i) {
                if (base.get(i, src)) a.set(i, j, true);
            }
        }
        SolveOptions collapsed;
        SolveOptions direct;
        direct.collapse = false;
        const OrderResult r1 = solve_ordering(a, collapsed);
        const OrderResult r2 = solve_ordering(a, direct);
        if (!r1.optimal || !r2.optimal || r1.blocks != r2.blocks) ++failures;
    }
    return failures;
}

int check_gadget(int trials, Rng& rng) {
    int failures = 0;
    for (int t = 0; t < trials; ++t) {
        const int n = rng.next_int(2, 7);
        std::vector<std::pair<int, int>> edges;
        SimpleGraph g;
        while (true) {
            edges.clear();
            for (int u = 0; u < n; ++u) {
                for (int v = u + 1; v < n; ++v) {
                    if (rng.next_bool(0.4)) edges.emplace_back(u, v);
                }
            }
            g = SimpleGraph(n, edges);
            bool ok = true;
            for (int v = 0; v < n; ++v) {
                if (g.degree(v) > 3) ok = false;
            }
            if (ok) break;
        }
        const GadgetInstance gadget = hampath_gadget(g);
        const tsp::SolveResult res = tsp::solve_held_karp(build_plain(gadget.matrix));
        const bool below = res.length / 2 <= gadget.threshold;
        if (below != has_hamiltonian_path(g)) ++failures;
    }
    return failures;
}

}  // namespace

bool run_verification(int trials, std::uint64_t seed, std::ostream& out) {
    Rng rng(seed);
    bool ok = true;
    const int f1 = check_tour_identity(trials, rng);
    report(out, "tour-length identity        ", f1, trials);
    ok = ok && f1 == 0;
    const int f2 = check_weighted_identity(trials, rng);
    report(out, "weighted tour-length identity", f2, trials);
    ok = ok && f2 == 0;
    const int collapse_trials = std::min(trials, 200);
    const int f3 = check_collapse_roundtrip(collapse_trials, rng);
    report(out, "collapse round-trip         ", f3, collapse_trials);
    ok = ok && f3 == 0;
    const int gadget_trials = std::min(trials, 200);
    const int f4 = check_gadget(gadget_trials, rng);
    report(out, "hamiltonian-path gadget     ", f4, gadget_trials);
    ok = ok && f4 == 0;
    return ok;
}

}  // namespace lindiag
