#include "lindiag/reduction.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace lindiag {

TspInstance::TspInstance(int size, std::vector<std::int64_t> dist, int sentinel)
    : size_(size), sentinel_(sentinel), dist_(std::move(dist)) {
    if (size < 0) throw std::invalid_argument("instance size must be non-negative");
    if (dist_.size() != static_cast<std::size_t>(size) * static_cast<std::size_t>(size)) {
        throw std::invalid_argument("distance matrix size mismatch");
    }
    if (size > 0 && (sentinel < 0 || sentinel >= size)) {
        throw std::invalid_argument("sentinel out of range");
    }
    for (int i = 0; i < size; ++i) {
        if (d(i, i) != 0) throw std::invalid_argument("distance matrix diagonal must be zero");
        for (int j = 0; j < i; ++j) {
            if (d(i, j) != d(j, i)) throw std::invalid_argument("distance matrix must be symmetric");
            if (d(i, j) < 0) throw std::invalid_argument("distances must be non-negative");
        }
    }
}

std::int64_t TspInstance::max_distance() const {
    std::int64_t m = 0;
    for (const std::int64_t v : dist_) m = std::max(m, v);
    return m;
}

std::int64_t tour_length(const TspInstance& inst, std::span<const int> order) {
    if (static_cast<int>(order.size()) != inst.size()) {
        throw std::invalid_argument("tour length mismatch");
    }
    if (order.empty()) return 0;
    std::int64_t total = 0;
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
        total += inst.d(order[k], order[k + 1]);
    }
    total += inst.d(order.back(), order.front());
    return total;
}

TspInstance build_plain(const BinaryMatrix& a) {
    const int n = a.cols();
    const int size = n + 1;
    PackedColumns pc(a);
    std::vector<std::int64_t> dist(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    auto at = [&](int i, int j) -> std::int64_t& {
        return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                    static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < n; ++i) {
        at(i, n) = at(n, i) = pc.ones(i);
        for (int j = 0; j < i; ++j) {
            at(i, j) = at(j, i) = pc.hamming(i, j);
        }
    }
    return TspInstance(size, std::move(dist), n);
}

ColumnGroups ColumnGroups::for_matrix(const BinaryMatrix& a, std::vector<std::vector<int>> groups) {
    for (const auto& g : groups) {
        if (g.empty()) throw std::invalid_argument("column group may not be empty");
        for (const int c : g) {
            if (c < 0 || c >= a.cols()) throw std::invalid_argument("column group index out of range");
        }
    }
    ColumnGroups out;
    out.groups = std::move(groups);
    out.penalty = 2 * a.ones() + 1;
    return out;
}

TspInstance build_grouped(const BinaryMatrix& a, const ColumnGroups& g) {
    const int n = a.cols();
    const int size = n + 1;
    // Membership indicator per group; the sentinel column belongs to none.
    std::vector<std::vector<char>> member(g.groups.size(), std::vector<char>(static_cast<std::size_t>(size), 0));
    for (std::size_t k = 0; k < g.groups.size(); ++k) {
        for (const int c : g.groups[k]) member[k][static_cast<std::size_t>(c)] = 1;
    }
    PackedColumns pc(a);
    std::vector<std::int64_t> dist(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    auto at = [&](int i, int j) -> std::int64_t& {
        return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                    static_cast<std::size_t>(j)];
    };
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < i; ++j) {
            std::int64_t base = (i == n) ? pc.ones(j) : ((j == n) ? pc.ones(i) : pc.hamming(i, j));
            std::int64_t crossings = 0;
            for (std::size_t k = 0; k < g.groups.size(); ++k) {
                crossings += member[k][static_cast<std::size_t>(i)] != member[k][static_cast<std::size_t>(j)] ? 1 : 0;
            }
            at(i, j) = at(j, i) = base + g.penalty * crossings;
        }
    }
    return TspInstance(size, std::move(dist), n);
}

ColumnGroups groups_from_two_rows(const BinaryMatrix& a, int row1, int row2) {
    if (row1 == row2) throw std::invalid_argument("row indices must differ");
    if (row1 < 0 || row1 >= a.rows() || row2 < 0 || row2 >= a.rows()) {
        throw std::invalid_argument("row index out of range");
    }
    std::vector<std::vector<int>> groups(2);
    for (int j = 0; j < a.cols(); ++j) {
        if (a.get(row1, j)) groups[0].push_back(j);
        if (a.get(row2, j)) groups[1].push_back(j);
    }
    if (groups[0].empty() || groups[1].empty()) {
        throw std::invalid_argument("an empty set cannot be drawn as a segment");
    }
    return ColumnGroups::for_matrix(a, std::move(groups));
}

bool groups_consecutive(const ColumnPermutation& p, const ColumnGroups& g) {
    std::vector<int> pos(static_cast<std::size_t>(p.size()), -1);
    for (int j = 0; j < p.size(); ++j) pos[static_cast<std::size_t>(p[j])] = j;
    for (const auto& group : g.groups) {
        int lo = p.size(), hi = -1;
        for (const int c : group) {
            const int q = pos[static_cast<std::size_t>(c)];
            lo = std::min(lo, q);
            hi = std::max(hi, q);
        }
        if (hi - lo + 1 != static_cast<int>(group.size())) return false;
    }
    return true;
}

RowWeights::RowWeights(std::vector<std::int64_t> w) : weights(std::move(w)) {
    for (const std::int64_t v : weights) {
        if (v < 1) throw std::invalid_argument("row weights must be positive");
    }
}

RowWeights RowWeights::uniform(int rows, std::int64_t w) {
    return RowWeights(std::vector<std::int64_t>(static_cast<std::size_t>(rows), w));
}

TspInstance build_weighted(const BinaryMatrix& a, const RowWeights& w) {
    if (w.size() != a.rows()) throw std::invalid_argument("weight count does not match row count");
    const int n = a.cols();
    const int size = n + 1;
    std::vector<std::int64_t> dist(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    auto at = [&](int i, int j) -> std::int64_t& {
        return dist[static_cast<std::size_t>(i) * static_cast<std::size_t>(size) +
                    static_cast<std::size_t>(j)];
    };
    auto cell = [&](int row, int col) -> bool { return col == n ? false : a.get(row, col); };
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < i; ++j) {
            std::int64_t sum = 0;
            for (int k = 0; k < a.rows(); ++k) {
                if (cell(k, i) != cell(k, j)) sum += w.weights[static_cast<std::size_t>(k)];
            }
            at(i, j) = at(j, i) = sum;
        }
    }
    return TspInstance(size, std::move(dist), n);
}

ColumnPermutation tour_to_permutation(std::span<const int> tour, const TspInstance& inst) {
    if (static_cast<int>(tour.size()) != inst.size()) {
        throw std::invalid_argument("tour does not visit every vertex exactly once");
    }
    std::vector<bool> seen(tour.size(), false);
    int sentinel_pos = -1;
    for (std::size_t k = 0; k < tour.size(); ++k) {
        const int v = tour[k];
        if (v < 0 || v >= inst.size() || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("tour does not visit every vertex exactly once");
        }
        seen[static_cast<std::size_t>(v)] = true;
        if (v == inst.sentinel()) sentinel_pos = static_cast<int>(k);
    }
    if (sentinel_pos < 0) throw std::invalid_argument("tour is missing the sentinel vertex");
    std::vector<int> order;
    order.reserve(tour.size() - 1);
    for (std::size_t step = 1; step < tour.size(); ++step) {
        const int v = tour[(static_cast<std::size_t>(sentinel_pos) + step) % tour.size()];
        order.push_back(v < inst.sentinel() ? v : v - 1);
    }
    return ColumnPermutation(std::move(order));
}

std::string export_tsplib(const TspInstance& inst, std::string_view name) {
    std::ostringstream out;
    out << "NAME: " << name << "\n";
    out << "TYPE: TSP\n";
    out << "COMMENT: column-order instance (sentinel vertex " << inst.sentinel() << ")\n";
    out << "DIMENSION: " << inst.size() << "\n";
    out << "EDGE_WEIGHT_TYPE: EXPLICIT\n";
    out << "EDGE_WEIGHT_FORMAT: FULL_MATRIX\n";
    out << "EDGE_WEIGHT_SECTION\n";
    for (int i = 0; i < inst.size(); ++i) {
        for (int j = 0; j < inst.size(); ++j) {
            if (j > 0) out << ' ';
            out << inst.d(i, j);
        }
        out << "\n";
    }
    out << "EOF\n";
    return std::move(out).str();
}

}  // namespace lindiag
