#include "lindiag/gen.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "lindiag/io.hpp"
#include "lindiag/rng.hpp"

namespace lindiag {

SimpleGraph::SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list)
    : n(vertex_count), edges(std::move(edge_list)) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& [u, v] : edges) {
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n || u == v) throw std::invalid_argument("invalid edge");
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end()) {
        throw std::invalid_argument("duplicate edge");
    }
}

int SimpleGraph::degree(int v) const {
    int d = 0;
    for (const auto& [a, b] : edges) d += (a == v || b == v) ? 1 : 0;
    return d;
}

BinaryMatrix random_matrix(int rows, int cols, double density, std::uint64_t seed) {
    if (density < 0.0 || density > 1.0) throw std::invalid_argument("density must be in [0, 1]");
    Rng rng(seed);
    BinaryMatrix a(rows, cols);
    for (int i = 0; i < rows; ++i) {
        for (int j = 0; j < cols; ++j) {
            if (rng.next_bool(density)) a.set(i, j, true);
        }
    }
    return a;
}

GadgetInstance hampath_gadget(const SimpleGraph& g) {
    if (g.n < 2) throw std::invalid_argument("gadget needs at least 2 vertices");
    const int m = static_cast<int>(g.edges.size());
    BinaryMatrix a(m, g.n);
    for (int e = 0; e < m; ++e) {
        a.set(e, g.edges[static_cast<std::size_t>(e)].first, true);
        a.set(e, g.edges[static_cast<std::size_t>(e)].second, true);
    }
    return {std::move(a), 2 * static_cast<std::int64_t>(m) - (g.n - 1)};
}

bool has_hamiltonian_path(const SimpleGraph& g) {
    if (g.n > 25) throw std::invalid_argument("path search is capped at 25 vertices");
    if (g.n <= 1) return true;
    std::vector<std::uint32_t> adj(static_cast<std::size_t>(g.n), 0);
    for (const auto& [u, v] : g.edges) {
        adj[static_cast<std::size_t>(u)] |= 1U << v;
        adj[static_cast<std::size_t>(v)] |= 1U << u;
    }
    const std::size_t masks = std::size_t{1} << g.n;
    // reachable[mask] = set of possible path endpoints covering exactly mask
    std::vector<std::uint32_t> reachable(masks, 0);
    for (int v = 0; v < g.n; ++v) reachable[std::size_t{1} << v] = 1U << v;
    for (std::size_t mask = 1; mask < masks; ++mask) {
        const std::uint32_t ends = reachable[mask];
        if (ends == 0) continue;
        if (mask == masks - 1) return true;
        for (std::uint32_t eb = ends; eb != 0; eb &= eb - 1) {
            const int v = std::countr_zero(eb);
            const std::uint32_t nexts = adj[static_cast<std::size_t>(v)] & ~static_cast<std::uint32_t>(mask);
            for (std::uint32_t nb = nexts; nb != 0; nb &= nb - 1) {
                const int w = std::countr_zero(nb);
                reachable[mask | (std::size_t{1} << w)] |= 1U << w;
            }
        }
    }
    return reachable[masks - 1] != 0;
}

namespace {

std::vector<std::pair<int, int>> vertex_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    }
    return pairs;
}

bool degree_ok(const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask, int n,
               int max_degree) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if (!((mask >> e) & 1)) continue;
        if (++deg[static_cast<std::size_t>(pairs[e].first)] > max_degree) return false;
        if (++deg[static_cast<std::size_t>(pairs[e].second)] > max_degree) return false;
    }
    return true;
}

SimpleGraph graph_from_mask(const std::vector<std::pair<int, int>>& pairs, std::uint32_t mask,
                            int n) {
    std::vector<std::pair<int, int>> edges;
    for (std::size_t e = 0; e < pairs.size(); ++e) {
        if ((mask >> e) & 1) edges.push_back(pairs[e]);
    }
    return SimpleGraph(n, std::move(edges));
}

}  // namespace

std::vector<SimpleGraph> enumerate_small_graphs(int n, int max_degree, int cap,
                                                std::uint64_t seed) {
    if (n < 0 || n > 7) throw std::invalid_argument("enumeration is limited to n <= 7");
    const auto pairs = vertex_pairs(n);
    const std::uint32_t mask_count = 1U << pairs.size();
    std::int64_t valid = 0;
    for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
        if (degree_ok(pairs, mask, n, max_degree)) ++valid;
    }
    std::vector<SimpleGraph> out;
    if (valid <= cap) {
        out.reserve(static_cast<std::size_t>(valid));
        for (std::uint32_t mask = 0; mask < mask_count; ++mask) {
            if (degree_ok(pairs, mask, n, max_degree)) out.push_back(graph_from_mask(pairs, mask, n));
        }
        return out;
    }
    Rng rng(seed);
    std::set<std::uint32_t> chosen;
    while (static_cast<int>(chosen.size()) < cap) {
        const std::uint32_t mask = static_cast<std::uint32_t>(rng.next_u64()) & (mask_count - 1);
        if (degree_ok(pairs, mask, n, max_degree)) chosen.insert(mask);
    }
    out.reserve(chosen.size());
    for (const std::uint32_t mask : chosen) out.push_back(graph_from_mask(pairs, mask, n));
    return out;
}

SimpleGraph parse_edge_list(std::string_view text) {
    std::vector<std::pair<int, int>> edges;
    int max_vertex = -1;
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::istringstream ls(line);
        long long u = -1, v = -1;
        if (!(ls >> u >> v)) {
            throw ParseError("line " + std::to_string(line_no) + ": expected \"u v\"");
        }
        std::string rest;
        if (ls >> rest) {
            throw ParseError("line " + std::to_string(line_no) + ": trailing input \"" + rest + "\"");
        }
        if (u < 0 || v < 0 || u == v) {
            throw ParseError("line " + std::to_string(line_no) + ": invalid edge");
        }
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_vertex = std::max({max_vertex, static_cast<int>(u), static_cast<int>(v)});
    }
    try {
        return SimpleGraph(max_vertex + 1, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

namespace {

// Duplication-heavy matrix: columns are drawn from a small pool of distinct
// patterns, so collapsing shrinks the instance to the pool size.
BinaryMatrix pooled_matrix(int rows, int cols, int pool, double density, Rng& rng) {
    pool = std::min(pool, cols);
    std::map<std::vector<char>, int> seen;
    std::vector<std::vector<char>> patterns;
    int attempts = 0;
    while (static_cast<int>(patterns.size()) < pool && attempts < 50 * pool + 100) {
        ++attempts;
        std::vector<char> pat(static_cast<std::size_t>(rows), 0);
        for (int i = 0; i < rows; ++i) pat[static_cast<std::size_t>(i)] = rng.next_bool(density) ? 1 : 0;
        if (seen.emplace(pat, static_cast<int>(patterns.size())).second) {
            patterns.push_back(std::move(pat));
        }
    }
    const int k = static_cast<int>(patterns.size());
    std::vector<int> assignment(static_cast<std::size_t>(cols));
    for (int j = 0; j < cols; ++j) {
        assignment[static_cast<std::size_t>(j)] = j < k ? j : rng.next_int(0, k - 1);
    }
    rng.shuffle(assignment);
    BinaryMatrix a(rows, cols);
    for (int j = 0; j < cols; ++j) {
        const auto& pat = patterns[static_cast<std::size_t>(assignment[static_cast<std::size_t>(j)])];
        for (int i = 0; i < rows; ++i) {
            if (pat[static_cast<std::size_t>(i)]) a.set(i, j, true);
        }
    }
    return a;
}

}  // namespace

BinaryMatrix t1_like_matrix(int cols, std::uint64_t seed) {
    if (cols < 1) throw std::invalid_argument("need at least one column");
    Rng rng(seed);
    const int rows = rng.next_int(5, 50);
    const int target = 6 + cols / 5;
    const int lo = std::max(4, target - 2);
    const int pool = std::min({cols, 21, rng.next_int(lo, target + 2)});
    const double density = 0.15 + 0.25 * rng.next_unit();
    return pooled_matrix(rows, cols, pool, density, rng);
}

BinaryMatrix t2_like_matrix(int rows, int cols, std::uint64_t seed) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("matrix must be non-empty");
    Rng rng(seed);
    const int pool = std::min(cols, rng.next_int(10, 24));
    const double density = 0.06 + 0.10 * rng.next_unit();
    return pooled_matrix(rows, cols, pool, density, rng);
}

}  // namespace lindiag
