#pragma once

// Test-only oracles and generators. The value-computing oracles here stay
// independent of the reduction/solver path they are used to check: they
// work by direct entry scans and exhaustive enumeration only.

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "lindiag/matrix.hpp"
#include "lindiag/pqtree.hpp"
#include "lindiag/rng.hpp"

namespace oracle {

inline std::int64_t cons1_of_order(const lindiag::BinaryMatrix& a, const std::vector<int>& order) {
    std::int64_t blocks = 0;
    for (int i = 0; i < a.rows(); ++i) {
        bool prev = false;
        for (int j = 0; j < a.cols(); ++j) {
            const bool cur = a.get(i, order[static_cast<std::size_t>(j)]);
            if (cur && !prev) ++blocks;
            prev = cur;
        }
    }
    return blocks;
}

inline std::int64_t weighted_cons1_of_order(const lindiag::BinaryMatrix& a,
                                            const std::vector<std::int64_t>& weights,
                                            const std::vector<int>& order) {
    std::int64_t total = 0;
    for (int i = 0; i < a.rows(); ++i) {
        bool prev = false;
        std::int64_t blocks = 0;
        for (int j = 0; j < a.cols(); ++j) {
            const bool cur = a.get(i, order[static_cast<std::size_t>(j)]);
            if (cur && !prev) ++blocks;
            prev = cur;
        }
        total += weights[static_cast<std::size_t>(i)] * blocks;
    }
    return total;
}

/// Minimum cons1 over all n! column orders.
inline std::int64_t min_cons1(const lindiag::BinaryMatrix& a) {
    std::vector<int> order(static_cast<std::size_t>(a.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        best = std::min(best, cons1_of_order(a, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline std::int64_t min_weighted_cons1(const lindiag::BinaryMatrix& a,
                                       const std::vector<std::int64_t>& weights) {
    std::vector<int> order(static_cast<std::size_t>(a.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    do {
        best = std::min(best, weighted_cons1_of_order(a, weights, order));
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

inline bool group_consecutive_in(const std::vector<int>& order, const std::vector<int>& group) {
    std::vector<int> pos(order.size());
    for (std::size_t j = 0; j < order.size(); ++j) pos[static_cast<std::size_t>(order[j])] = static_cast<int>(j);
    int lo = static_cast<int>(order.size()), hi = -1;
    for (const int c : group) {
        lo = std::min(lo, pos[static_cast<std::size_t>(c)]);
        hi = std::max(hi, pos[static_cast<std::size_t>(c)]);
    }
    return hi - lo + 1 == static_cast<int>(group.size());
}

/// Minimum cons1 over orders keeping every group consecutive; -1 when no
/// order does.
inline std::int64_t min_cons1_constrained(const lindiag::BinaryMatrix& a,
                                          const std::vector<std::vector<int>>& groups) {
    std::vector<int> order(static_cast<std::size_t>(a.cols()));
    std::iota(order.begin(), order.end(), 0);
    std::int64_t best = -1;
    do {
        bool feasible = true;
        for (const auto& g : groups) {
            if (!group_consecutive_in(order, g)) {
                feasible = false;
                break;
            }
        }
        if (!feasible) continue;
        const std::int64_t v = cons1_of_order(a, order);
        if (best < 0 || v < best) best = v;
    } while (std::next_permutation(order.begin(), order.end()));
    return best;
}

/// Minimum cons1 over an explicit list of orders.
inline std::int64_t min_cons1_over(const lindiag::BinaryMatrix& a,
                                   const std::vector<std::vector<int>>& orders) {
    std::int64_t best = std::numeric_limits<std::int64_t>::max();
    for (const auto& order : orders) best = std::min(best, cons1_of_order(a, order));
    return best;
}

/// Random PQ-tree over the given leaf labels with bounded degree.
inline lindiag::PQNode random_pq_node(lindiag::Rng& rng, std::vector<int> labels, int max_degree) {
    if (labels.size() == 1) return lindiag::PQNode::leaf(labels.front());
    const int arity = rng.next_int(2, std::min<int>(max_degree, static_cast<int>(labels.size())));
    // split labels into `arity` non-empty contiguous chunks
    std::vector<int> sizes(static_cast<std::size_t>(arity), 1);
    int spare = static_cast<int>(labels.size()) - arity;
    while (spare > 0) {
        sizes[static_cast<std::size_t>(rng.next_int(0, arity - 1))] += 1;
        --spare;
    }
    std::vector<lindiag::PQNode> children;
    std::size_t at = 0;
    for (const int sz : sizes) {
        std::vector<int> part(labels.begin() + static_cast<std::ptrdiff_t>(at),
                              labels.begin() + static_cast<std::ptrdiff_t>(at + static_cast<std::size_t>(sz)));
        at += static_cast<std::size_t>(sz);
        children.push_back(random_pq_node(rng, std::move(part), max_degree));
    }
    return rng.next_bool(0.5) ? lindiag::PQNode::p(std::move(children))
                              : lindiag::PQNode::q(std::move(children));
}

inline lindiag::PQTree random_pq_tree(lindiag::Rng& rng, int leaves, int max_degree) {
    std::vector<int> labels = rng.permutation(leaves);
    return lindiag::PQTree(random_pq_node(rng, std::move(labels), max_degree));
}

}  // namespace oracle
