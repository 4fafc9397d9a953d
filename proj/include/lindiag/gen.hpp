#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "lindiag/matrix.hpp"

namespace lindiag {

struct SimpleGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // u < v, sorted, no duplicates

    SimpleGraph() = default;
    SimpleGraph(int vertex_count, std::vector<std::pair<int, int>> edge_list);

    int degree(int v) const;
};

/// Hardness gadget: the incidence matrix of a graph (rows = edges,
/// columns = vertices) together with the threshold 2m - (n-1). The graph
/// has a Hamiltonian path iff some column order reaches at most the
/// threshold many blocks.
struct GadgetInstance {
    BinaryMatrix matrix;
    std::int64_t threshold = 0;
};

/// Independent Bernoulli entries; bit-identical across runs for the same
/// seed.
BinaryMatrix random_matrix(int rows, int cols, double density, std::uint64_t seed);

GadgetInstance hampath_gadget(const SimpleGraph& g);

/// Exhaustive path search over vertex subsets; independent of the
/// block-minimization machinery so it can serve as its oracle.
bool has_hamiltonian_path(const SimpleGraph& g);

/// All labeled simple graphs on n <= 7 vertices with bounded degree, or a
/// seeded sample of `cap` of them when there are more than that.
std::vector<SimpleGraph> enumerate_small_graphs(int n, int max_degree = 3, int cap = 300000,
                                                std::uint64_t seed = 0);

/// Edge-list text: one "u v" pair per line, zero-based.
SimpleGraph parse_edge_list(std::string_view text);

/// Synthetic stand-ins for the benchmark corpora: duplication-heavy
/// matrices whose distinct-column count stays within exact-solver reach.
BinaryMatrix t1_like_matrix(int cols, std::uint64_t seed);
BinaryMatrix t2_like_matrix(int rows, int cols, std::uint64_t seed);

}  // namespace lindiag
