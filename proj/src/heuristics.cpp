#include "lindiag/heuristics.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>
#include <vector>

#include "lindiag/rng.hpp"

namespace lindiag {

namespace {

// Chain greedy: start at the heaviest column, then repeatedly attach the
// unplaced column most similar to either end of the chain, at that end.
// Ties go to the heavier column, then the smaller index, then the tail.
template <typename SimFn>
std::vector<int> greedy_chain(int n, const std::vector<std::int64_t>& weight, SimFn&& sim) {
    if (n == 0) return {};
    std::vector<bool> used(static_cast<std::size_t>(n), false);
    int start = 0;
    for (int j = 1; j < n; ++j) {
        if (weight[static_cast<std::size_t>(j)] > weight[static_cast<std::size_t>(start)]) start = j;
    }
    std::deque<int> chain{start};
    used[static_cast<std::size_t>(start)] = true;
    for (int step = 1; step < n; ++step) {
        int best = -1;
        double best_sim = 0;
        bool best_at_tail = true;
        for (int j = 0; j < n; ++j) {
            if (used[static_cast<std::size_t>(j)]) continue;
            const double tail_sim = sim(chain.back(), j);
            const double head_sim = sim(chain.front(), j);
            const double s = std::max(tail_sim, head_sim);
            if (best < 0 || s > best_sim ||
                (s == best_sim && weight[static_cast<std::size_t>(j)] > weight[static_cast<std::size_t>(best)])) {
                best = j;
                best_sim = s;
                best_at_tail = tail_sim >= head_sim;
            }
        }
        if (best_at_tail) {
            chain.push_back(best);
        } else {
            chain.push_front(best);
        }
        used[static_cast<std::size_t>(best)] = true;
    }
    return {chain.begin(), chain.end()};
}

std::vector<std::int64_t> column_weights(const PackedColumns& pc) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(pc.cols()));
    for (int j = 0; j < pc.cols(); ++j) w[static_cast<std::size_t>(j)] = pc.ones(j);
    return w;
}

}  // namespace

ColumnPermutation rodgers_order(const BinaryMatrix& a) {
    PackedColumns pc(a);
    const auto weight = column_weights(pc);
    auto order = greedy_chain(a.cols(), weight, [&](int i, int j) {
        return static_cast<double>(pc.intersection(i, j));
    });
    return ColumnPermutation(std::move(order));
}

ColumnPermutation multiseed_order(const BinaryMatrix& a, const HeuristicConfig& cfg) {
    if (cfg.seeds < 1) throw std::invalid_argument("multiseed needs at least one restart");
    const int n = a.cols();
    PackedColumns pc(a);
    const auto weight = column_weights(pc);
    std::vector<double> base(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const double s = static_cast<double>(pc.intersection(i, j));
            base[static_cast<std::size_t>(i) * n + j] = base[static_cast<std::size_t>(j) * n + i] = s;
        }
    }
    std::vector<int> best_order;
    std::int64_t best_score = std::numeric_limits<std::int64_t>::max();
    std::vector<double> noise(base.size(), 0.0);
    for (int restart = 0; restart < cfg.seeds; ++restart) {
        if (restart > 0) {
            Rng rng(cfg.seed, static_cast<std::uint64_t>(restart));
            for (int i = 0; i < n; ++i) {
                for (int j = 0; j < i; ++j) {
                    const double u = 0.5 * rng.next_unit();
                    noise[static_cast<std::size_t>(i) * n + j] =
                        noise[static_cast<std::size_t>(j) * n + i] = u;
                }
            }
        }
        auto order = greedy_chain(n, weight, [&](int i, int j) {
            const std::size_t k = static_cast<std::size_t>(i) * static_cast<std::size_t>(n) +
                                  static_cast<std::size_t>(j);
            return restart == 0 ? base[k] : base[k] + noise[k];
        });
        const std::int64_t score = cons1(apply_permutation(a, ColumnPermutation(order)));
        if (score < best_score) {
            best_score = score;
            best_order = std::move(order);
        }
    }
    ColumnPermutation result(std::move(best_order));
    if (cfg.polish) return polish_two_opt(a, result);
    return result;
}

ColumnPermutation polish_two_opt(const BinaryMatrix& a, const ColumnPermutation& p) {
    if (p.size() != a.cols()) {
        throw std::invalid_argument("permutation length does not match column count");
    }
    const int n = p.size();
    if (n < 2) return p;
    PackedColumns pc(a);
    // Index -1 stands for the zero column framing both ends, so boundary
    // blocks are priced like interior ones.
    auto dist = [&](int u, int v) -> std::int64_t {
        if (u < 0 && v < 0) return 0;
        if (u < 0) return pc.ones(v);
        if (v < 0) return pc.ones(u);
        return pc.hamming(u, v);
    };
    std::vector<int> order = p.mapping();
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n - 1 && !improved; ++i) {
            for (int j = i + 1; j < n && !improved; ++j) {
                const int before = i > 0 ? order[static_cast<std::size_t>(i - 1)] : -1;
                const int first = order[static_cast<std::size_t>(i)];
                const int last = order[static_cast<std::size_t>(j)];
                const int after = j + 1 < n ? order[static_cast<std::size_t>(j + 1)] : -1;
                const std::int64_t delta = dist(before, last) + dist(first, after) -
                                           dist(before, first) - dist(last, after);
                if (delta < 0) {
                    std::reverse(order.begin() + i, order.begin() + j + 1);
                    improved = true;
                }
            }
        }
    }
    return ColumnPermutation(std::move(order));
}

}  // namespace lindiag
