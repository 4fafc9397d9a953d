#include "lindiag/tsp.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace lindiag::tsp {

namespace {

using Clock = std::chrono::steady_clock;

constexpr std::int64_t kInf = std::numeric_limits<std::int64_t>::max() / 4;

std::chrono::microseconds since(Clock::time_point t0) {
    return std::chrono::duration_cast<std::chrono::microseconds>(Clock::now() - t0);
}

// Prim over an arbitrary vertex subset.
std::int64_t mst_cost(const TspInstance& inst, const std::vector<int>& verts) {
    if (verts.size() <= 1) return 0;
    const std::size_t n = verts.size();
    std::vector<std::int64_t> key(n, kInf);
    std::vector<bool> in_tree(n, false);
    key[0] = 0;
    std::int64_t total = 0;
    for (std::size_t round = 0; round < n; ++round) {
        std::size_t u = n;
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_tree[i] && (u == n || key[i] < key[u])) u = i;
        }
        in_tree[u] = true;
        total += key[u];
        for (std::size_t i = 0; i < n; ++i) {
            if (!in_tree[i]) key[i] = std::min(key[i], inst.d(verts[u], verts[i]));
        }
    }
    return total;
}

// The branch-and-bound search works on penalized distances
//   pd(u, v) = S * d(u, v) + pi[u] + pi[v]
// with node penalties pi from a Held-Karp one-tree ascent at the root. A
// tour visits every vertex twice across its edges, so its penalized cost
// is S * length + 2 * sum(pi): bounds computed under pd translate back to
// valid bounds on the true length, independent of the penalty choice.
// Everything stays in exact integer arithmetic.
constexpr std::int64_t kPenaltyScale = 1024;

std::int64_t ceil_div(std::int64_t a, std::int64_t b) {
    return a >= 0 ? (a + b - 1) / b : -(-a / b);
}

std::int64_t round_up_to(std::int64_t v, std::int64_t granularity) {
    return granularity <= 1 ? v : ceil_div(v, granularity) * granularity;
}

struct BnbContext {
    const TspInstance* inst = nullptr;
    int n = 0;
    std::vector<std::int64_t> pdist;  // penalized, scaled
    std::int64_t pi_sum2 = 0;         // 2 * sum(pi)
    std::int64_t best_len = 0;        // original units
    std::int64_t global_lb = 0;       // certified root bound, original units
    std::int64_t granularity = 1;
    std::vector<int> best_tour;
    std::vector<int> path;
    std::vector<bool> visited;
    std::int64_t nodes = 0;
    Clock::time_point deadline;
    bool timed_out = false;
    bool proven = false;  // incumbent reached the certified root bound
    std::int64_t abandoned_lb = kInf;  // original units
    // scratch buffers for the bound computation
    std::vector<int> scratch_verts;
    std::vector<std::int64_t> scratch_key;
    std::vector<bool> scratch_in_tree;

    std::int64_t pd(int i, int j) const {
        return pdist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                     static_cast<std::size_t>(j)];
    }
};

// Lower bound (original units) for completing a partial path that starts
// at vertex 0, currently ends at `last`, and has penalized cost `pcost`:
// any completion is a Hamiltonian path on the unvisited vertices together
// with both loose ends, and every such path is a spanning tree of that
// vertex set.
std::int64_t bnb_bound(BnbContext& ctx, int last, std::int64_t pcost) {
    auto& verts = ctx.scratch_verts;
    verts.clear();
    verts.push_back(last);
    if (last != 0) verts.push_back(0);
    for (int v = 0; v < ctx.n; ++v) {
        if (!ctx.visited[static_cast<std::size_t>(v)]) verts.push_back(v);
    }
    std::int64_t tree = 0;
    if (verts.size() <= 2) {
        tree = last == 0 ? 0 : ctx.pd(last, 0);
    } else {
        const std::size_t n = verts.size();
        auto& key = ctx.scratch_key;
        auto& in_tree = ctx.scratch_in_tree;
        key.assign(n, kInf);
        in_tree.assign(n, false);
        key[0] = 0;
        for (std::size_t round = 0; round < n; ++round) {
            std::size_t u = n;
            for (std::size_t i = 0; i < n; ++i) {
                if (!in_tree[i] && (u == n || key[i] < key[u])) u = i;
            }
            in_tree[u] = true;
            tree += key[u];
            const int vu = verts[u];
            for (std::size_t i = 0; i < n; ++i) {
                if (!in_tree[i]) key[i] = std::min(key[i], ctx.pd(vu, verts[i]));
            }
        }
    }
    return round_up_to(ceil_div(pcost + tree - ctx.pi_sum2, kPenaltyScale), ctx.granularity);
}

void bnb_dfs(BnbContext& ctx, int last, std::int64_t cost, std::int64_t pcost, int remaining) {
    if (remaining == 0) {
        const std::int64_t total = cost + ctx.inst->d(last, 0);
        if (total < ctx.best_len) {
            ctx.best_len = total;
            ctx.best_tour = ctx.path;
            // nothing anywhere can beat the certified root bound
            if (ctx.best_len <= ctx.global_lb) ctx.proven = true;
        }
        return;
    }
    struct Child {
        std::int64_t bound;
        int v;
        std::int64_t cost;
        std::int64_t pcost;
    };
    std::vector<Child> children;
    children.reserve(static_cast<std::size_t>(remaining));
    for (int v = 0; v < ctx.n; ++v) {
        if (ctx.visited[static_cast<std::size_t>(v)]) continue;
        const std::int64_t c2 = cost + ctx.inst->d(last, v);
        const std::int64_t p2 = pcost + ctx.pd(last, v);
        ctx.visited[static_cast<std::size_t>(v)] = true;
        const std::int64_t b = bnb_bound(ctx, v, p2);
        ctx.visited[static_cast<std::size_t>(v)] = false;
        children.push_back({b, v, c2, p2});
    }
    std::sort(children.begin(), children.end(), [](const Child& a, const Child& b) {
        return a.bound != b.bound ? a.bound < b.bound : a.v < b.v;
    });
    for (std::size_t k = 0; k < children.size(); ++k) {
        const Child& ch = children[k];
        if (ctx.proven) return;
        ++ctx.nodes;
        if ((ctx.nodes & 1023) == 0 && Clock::now() >= ctx.deadline) ctx.timed_out = true;
        if (ch.bound >= ctx.best_len) break;  // children are sorted by bound
        if (ctx.timed_out) {
            ctx.abandoned_lb = std::min(ctx.abandoned_lb, ch.bound);
            continue;
        }
        ctx.visited[static_cast<std::size_t>(ch.v)] = true;
        ctx.path.push_back(ch.v);
        bnb_dfs(ctx, ch.v, ch.cost, ch.pcost, remaining - 1);
        ctx.path.pop_back();
        ctx.visited[static_cast<std::size_t>(ch.v)] = false;
    }
}

bool two_opt_pass(const TspInstance& inst, std::vector<int>& order);
bool or_opt_pass(const TspInstance& inst, std::vector<int>& order);

// Deterministic incumbent sharpening: nearest-neighbour tours from every
// start vertex, each polished with the same 2-opt and Or-opt passes.
void improve_incumbent(const TspInstance& inst, std::int64_t& best_len,
                       std::vector<int>& best_tour) {
    const int n = inst.size();
    for (int start = 0; start < n; ++start) {
        std::vector<int> order;
        order.reserve(static_cast<std::size_t>(n));
        std::vector<bool> used(static_cast<std::size_t>(n), false);
        int cur = start;
        used[static_cast<std::size_t>(cur)] = true;
        order.push_back(cur);
        for (int step = 1; step < n; ++step) {
            int next = -1;
            std::int64_t best_d = kInf;
            for (int v = 0; v < n; ++v) {
                if (!used[static_cast<std::size_t>(v)] && inst.d(cur, v) < best_d) {
                    best_d = inst.d(cur, v);
                    next = v;
                }
            }
            used[static_cast<std::size_t>(next)] = true;
            order.push_back(next);
            cur = next;
        }
        int passes = 0;
        bool changed = true;
        while (changed) {
            changed = false;
            while (passes < 64 && two_opt_pass(inst, order)) {
                ++passes;
                changed = true;
            }
            if (or_opt_pass(inst, order)) changed = true;
        }
        const std::int64_t len = tour_length(inst, order);
        if (len < best_len) {
            best_len = len;
            best_tour = std::move(order);
        }
    }
}

// Subgradient ascent on the one-tree relaxation: repeatedly build a
// minimum one-tree under the penalized distances, then push penalties
// along the degree surplus. Returns the best penalties found and the
// certified root bound in original units.
std::vector<std::int64_t> one_tree_ascent(const TspInstance& inst, std::int64_t upper_bound,
                                          std::int64_t& root_lb) {
    const int n = inst.size();
    std::vector<std::int64_t> pi(static_cast<std::size_t>(n), 0);
    std::vector<std::int64_t> best_pi = pi;
    std::int64_t best_l = std::numeric_limits<std::int64_t>::min();
    const std::int64_t ub_scaled = kPenaltyScale * upper_bound;
    std::vector<std::int64_t> key(static_cast<std::size_t>(n));
    std::vector<int> parent(static_cast<std::size_t>(n));
    std::vector<bool> in_tree(static_cast<std::size_t>(n));
    std::vector<int> degree(static_cast<std::size_t>(n));
    std::int64_t step_den = 1;
    for (int iter = 0; iter < 150; ++iter) {
        auto pd = [&](int i, int j) {
            return kPenaltyScale * inst.d(i, j) + pi[static_cast<std::size_t>(i)] +
                   pi[static_cast<std::size_t>(j)];
        };
        // MST over vertices 1..n-1
        std::fill(degree.begin(), degree.end(), 0);
        std::fill(in_tree.begin(), in_tree.end(), false);
        std::fill(key.begin(), key.end(), kInf);
        std::fill(parent.begin(), parent.end(), -1);
        key[1] = 0;
        std::int64_t tree = 0;
        for (int round = 1; round < n; ++round) {
            int u = -1;
            for (int i = 1; i < n; ++i) {
                if (!in_tree[static_cast<std::size_t>(i)] &&
                    (u < 0 || key[static_cast<std::size_t>(i)] < key[static_cast<std::size_t>(u)])) {
                    u = i;
                }
            }
            in_tree[static_cast<std::size_t>(u)] = true;
            tree += key[static_cast<std::size_t>(u)];
            if (parent[static_cast<std::size_t>(u)] >= 0) {
                ++degree[static_cast<std::size_t>(u)];
                ++degree[static_cast<std::size_t>(parent[static_cast<std::size_t>(u)])];
            }
            for (int i = 1; i < n; ++i) {
                if (!in_tree[static_cast<std::size_t>(i)] && pd(u, i) < key[static_cast<std::size_t>(i)]) {
                    key[static_cast<std::size_t>(i)] = pd(u, i);
                    parent[static_cast<std::size_t>(i)] = u;
                }
            }
        }
        // two cheapest penalized edges at vertex 0
        std::int64_t e1 = kInf, e2 = kInf;
        int v1 = -1, v2 = -1;
        for (int v = 1; v < n; ++v) {
            const std::int64_t c = pd(0, v);
            if (c < e1 || (c == e1 && v1 < 0)) {
                e2 = e1;
                v2 = v1;
                e1 = c;
                v1 = v;
            } else if (c < e2) {
                e2 = c;
                v2 = v;
            }
        }
        degree[0] += 2;
        ++degree[static_cast<std::size_t>(v1)];
        ++degree[static_cast<std::size_t>(v2)];
        std::int64_t pi_sum = 0;
        for (const std::int64_t p : pi) pi_sum += p;
        const std::int64_t l = tree + e1 + e2 - 2 * pi_sum;
        if (l > best_l) {
            best_l = l;
            best_pi = pi;
        }
        std::int64_t norm = 0;
        bool all_two = true;
        for (int v = 0; v < n; ++v) {
            const std::int64_t g = degree[static_cast<std::size_t>(v)] - 2;
            norm += g * g;
            if (g != 0) all_two = false;
        }
        if (all_two || best_l >= ub_scaled) break;
        if (iter > 0 && iter % 30 == 0) step_den *= 2;
        std::int64_t step = (ub_scaled - l) / (norm * step_den);
        if (step < 1) step = 1;
        for (int v = 0; v < n; ++v) {
            pi[static_cast<std::size_t>(v)] +=
                step * (degree[static_cast<std::size_t>(v)] - 2);
        }
    }
    root_lb = ceil_div(best_l, kPenaltyScale);
    return best_pi;
}

// One sweep of first-improvement segment reversals; true if anything moved.
bool two_opt_pass(const TspInstance& inst, std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    bool improved = false;
    for (int i = 1; i + 1 < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int a = order[static_cast<std::size_t>(i - 1)];
            const int b = order[static_cast<std::size_t>(i)];
            const int c = order[static_cast<std::size_t>(j)];
            const int e = order[static_cast<std::size_t>((j + 1) % n)];
            const std::int64_t delta = inst.d(a, c) + inst.d(b, e) - inst.d(a, b) - inst.d(c, e);
            if (delta < 0) {
                std::reverse(order.begin() + i, order.begin() + j + 1);
                improved = true;
            }
        }
    }
    return improved;
}

// Relocates segments of length 1..3; true if anything moved.
bool or_opt_pass(const TspInstance& inst, std::vector<int>& order) {
    const int n = static_cast<int>(order.size());
    for (int len = 1; len <= 3; ++len) {
        for (int i = 1; i + len <= n; ++i) {
            const int prev = order[static_cast<std::size_t>(i - 1)];
            const int first = order[static_cast<std::size_t>(i)];
            const int last = order[static_cast<std::size_t>(i + len - 1)];
            const int next = order[static_cast<std::size_t>((i + len) % n)];
            const std::int64_t removal =
                inst.d(prev, first) + inst.d(last, next) - inst.d(prev, next);
            for (int t = 0; t < n; ++t) {
                if (t >= i - 1 && t <= i + len - 1) continue;  // edge touches the segment
                const int u = order[static_cast<std::size_t>(t)];
                const int v = order[static_cast<std::size_t>((t + 1) % n)];
                if ((t + 1) % n == i) continue;
                const std::int64_t insertion = inst.d(u, first) + inst.d(last, v) - inst.d(u, v);
                if (insertion - removal < 0) {
                    std::vector<int> moved(order.begin() + i, order.begin() + i + len);
                    order.erase(order.begin() + i, order.begin() + i + len);
                    const auto pos = std::find(order.begin(), order.end(), u);
                    order.insert(pos + 1, moved.begin(), moved.end());
                    return true;
                }
            }
        }
    }
    return false;
}

}  // namespace

SolveResult solve_brute(const TspInstance& inst) {
    if (inst.size() > 10) throw std::invalid_argument("brute-force solver is capped at 10 vertices");
    const auto t0 = Clock::now();
    SolveResult res;
    const int n = inst.size();
    if (n == 0) {
        res.optimal = true;
        res.stats.elapsed = since(t0);
        return res;
    }
    std::vector<int> rest(static_cast<std::size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<int> tour(static_cast<std::size_t>(n));
    tour[0] = 0;
    std::vector<int> best;
    std::int64_t best_len = kInf;
    do {
        std::copy(rest.begin(), rest.end(), tour.begin() + 1);
        const std::int64_t len = tour_length(inst, tour);
        ++res.stats.nodes_expanded;
        if (len < best_len) {
            best_len = len;
            best = tour;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    res.tour.order = std::move(best);
    res.length = best_len;
    res.optimal = true;
    res.stats.lower_bound = best_len;
    res.stats.elapsed = since(t0);
    return res;
}

bool held_karp_accepts(const TspInstance& inst, const SolverConfig& cfg) {
    if (inst.size() > cfg.held_karp_cap) return false;
    if (inst.size() >= 2) {
        // Path costs must fit the 32-bit subset table.
        const std::int64_t worst =
            inst.max_distance() * static_cast<std::int64_t>(inst.size() + 1);
        if (worst >= std::numeric_limits<std::uint32_t>::max() / 2) return false;
    }
    return true;
}

SolveResult solve_held_karp(const TspInstance& inst, const SolverConfig& cfg) {
    if (!held_karp_accepts(inst, cfg)) {
        throw std::invalid_argument("instance exceeds held_karp limits");
    }
    const auto t0 = Clock::now();
    SolveResult res;
    const int n = inst.size();
    if (n == 0) {
        res.optimal = true;
        res.stats.elapsed = since(t0);
        return res;
    }
    if (n == 1) {
        res.tour.order = {0};
        res.optimal = true;
        res.stats.elapsed = since(t0);
        return res;
    }
    const int k = n - 1;  // vertices 1..n-1 as bits 0..k-1; tours start at vertex 0
    const std::uint32_t inf32 = std::numeric_limits<std::uint32_t>::max() / 2;
    const std::size_t mask_count = std::size_t{1} << k;
    std::vector<std::uint32_t> cost(mask_count * static_cast<std::size_t>(k), inf32);
    auto dist = [&](int i, int j) { return static_cast<std::uint32_t>(inst.d(i, j)); };
    auto cell = [&](std::size_t mask, int j) -> std::uint32_t& {
        return cost[mask * static_cast<std::size_t>(k) + static_cast<std::size_t>(j)];
    };
    for (int j = 0; j < k; ++j) cell(std::size_t{1} << j, j) = dist(0, j + 1);
    for (std::size_t mask = 1; mask < mask_count; ++mask) {
        if (std::popcount(mask) < 2) continue;
        for (std::size_t mb = mask; mb != 0; mb &= mb - 1) {
            const int j = std::countr_zero(mb);
            const std::size_t pm = mask ^ (std::size_t{1} << j);
            std::uint32_t best = inf32;
            for (std::size_t pb = pm; pb != 0; pb &= pb - 1) {
                const int p = std::countr_zero(pb);
                const std::uint32_t cand = cell(pm, p) + dist(p + 1, j + 1);
                if (cand < best) best = cand;
            }
            cell(mask, j) = best;
            ++res.stats.nodes_expanded;
        }
    }
    const std::size_t full = mask_count - 1;
    std::uint32_t best_len = inf32;
    int best_last = 0;
    for (int j = 0; j < k; ++j) {
        const std::uint32_t cand = cell(full, j) + dist(j + 1, 0);
        if (cand < best_len) {
            best_len = cand;
            best_last = j;
        }
    }
    // Backtrack by recomputation, preferring the smallest predecessor.
    std::vector<int> rev;
    std::size_t mask = full;
    int last = best_last;
    while (true) {
        rev.push_back(last + 1);
        const std::size_t pm = mask ^ (std::size_t{1} << last);
        if (pm == 0) break;
        for (std::size_t pb = pm; pb != 0; pb &= pb - 1) {
            const int p = std::countr_zero(pb);
            if (cell(pm, p) + dist(p + 1, last + 1) == cell(mask, last)) {
                mask = pm;
                last = p;
                break;
            }
        }
    }
    rev.push_back(0);
    std::reverse(rev.begin(), rev.end());
    res.tour.order = std::move(rev);
    res.length = best_len;
    res.optimal = true;
    res.stats.lower_bound = res.length;
    res.stats.elapsed = since(t0);
    return res;
}

SolveResult solve_heuristic(const TspInstance& inst, const SolverConfig& cfg) {
    const auto t0 = Clock::now();
    SolveResult res;
    const int n = inst.size();
    if (n == 0) {
        res.optimal = true;
        res.stats.elapsed = since(t0);
        return res;
    }
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    int cur = inst.sentinel();
    used[static_cast<std::size_t>(cur)] = true;
    order.push_back(cur);
    for (int step = 1; step < n; ++step) {
        int best = -1;
        std::int64_t best_d = kInf;
        for (int v = 0; v < n; ++v) {
            if (!used[static_cast<std::size_t>(v)] && inst.d(cur, v) < best_d) {
                best_d = inst.d(cur, v);
                best = v;
            }
        }
        used[static_cast<std::size_t>(best)] = true;
        order.push_back(best);
        cur = best;
    }
    int passes = 0;
    bool changed = true;
    while (changed) {
        changed = false;
        while (passes < cfg.two_opt_rounds && two_opt_pass(inst, order)) {
            ++passes;
            changed = true;
        }
        if (or_opt_pass(inst, order)) changed = true;
    }
    res.tour.order = std::move(order);
    res.length = tour_length(inst, res.tour.order);
    res.stats.lower_bound = mst_lower_bound(inst);
    res.optimal = res.length == res.stats.lower_bound;
    res.stats.nodes_expanded = passes;
    res.stats.elapsed = since(t0);
    return res;
}

SolveResult solve_branch_and_bound(const TspInstance& inst, const SolverConfig& cfg) {
    const auto t0 = Clock::now();
    SolveResult warm = solve_heuristic(inst, cfg);
    const int n = inst.size();
    if (n <= 3) {
        // All tours are cyclically equivalent at this size.
        warm.optimal = true;
        warm.stats.lower_bound = warm.length;
        warm.stats.elapsed = since(t0);
        return warm;
    }
    if (Clock::now() >= t0 + cfg.time_limit) {
        warm.optimal = false;
        warm.stats.lower_bound = std::min(warm.length, mst_lower_bound(inst));
        warm.stats.elapsed = since(t0);
        return warm;
    }
    std::int64_t incumbent_len = warm.length;
    std::vector<int> incumbent = warm.tour.order;
    improve_incumbent(inst, incumbent_len, incumbent);
    std::int64_t root_lb = 0;
    const std::vector<std::int64_t> pi = one_tree_ascent(inst, incumbent_len, root_lb);
    root_lb = round_up_to(root_lb, cfg.length_granularity);
    if (root_lb >= incumbent_len) {
        SolveResult res;
        res.tour.order = std::move(incumbent);
        res.length = incumbent_len;
        res.optimal = true;
        res.stats.lower_bound = incumbent_len;
        res.stats.elapsed = since(t0);
        return res;
    }
    BnbContext ctx;
    ctx.inst = &inst;
    ctx.n = n;
    ctx.pdist.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            ctx.pdist[static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                      static_cast<std::size_t>(j)] =
                kPenaltyScale * inst.d(i, j) + pi[static_cast<std::size_t>(i)] +
                pi[static_cast<std::size_t>(j)];
        }
    }
    for (const std::int64_t p : pi) ctx.pi_sum2 += 2 * p;
    ctx.best_len = incumbent_len;
    ctx.best_tour = std::move(incumbent);
    ctx.global_lb = root_lb;
    ctx.granularity = cfg.length_granularity;
    ctx.visited.assign(static_cast<std::size_t>(n), false);
    ctx.deadline = t0 + cfg.time_limit;
    ctx.path.push_back(0);
    ctx.visited[0] = true;
    bnb_dfs(ctx, 0, 0, 0, n - 1);
    SolveResult res;
    res.tour.order = std::move(ctx.best_tour);
    res.length = ctx.best_len;
    res.optimal = ctx.proven || !ctx.timed_out;
    if (!res.optimal) {
        res.stats.lower_bound = std::max(root_lb, std::min(res.length, ctx.abandoned_lb));
        // every abandoned subtree was already no better than the incumbent
        if (res.stats.lower_bound >= res.length) res.optimal = true;
    }
    if (res.optimal) res.stats.lower_bound = res.length;
    res.stats.nodes_expanded = ctx.nodes;
    res.stats.elapsed = since(t0);
    return res;
}

SolveResult solve(const TspInstance& inst, const SolverConfig& cfg) {
    switch (cfg.algorithm) {
        case Algorithm::brute:
            return solve_brute(inst);
        case Algorithm::held_karp:
            return solve_held_karp(inst, cfg);
        case Algorithm::branch_and_bound:
            return solve_branch_and_bound(inst, cfg);
        case Algorithm::heuristic:
            return solve_heuristic(inst, cfg);
        case Algorithm::auto_dispatch:
            break;
    }
    if (held_karp_accepts(inst, cfg)) return solve_held_karp(inst, cfg);
    return solve_branch_and_bound(inst, cfg);
}

std::int64_t mst_lower_bound(const TspInstance& inst) {
    std::vector<int> verts(static_cast<std::size_t>(inst.size()));
    std::iota(verts.begin(), verts.end(), 0);
    return mst_cost(inst, verts);
}

}  // namespace lindiag::tsp
