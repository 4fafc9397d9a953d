#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lindiag/matrix.hpp"
#include "lindiag/tsp.hpp"

namespace lindiag {

/// Node of a PQ-tree: a leaf carries a column index; children of P-nodes
/// may be reordered freely while children of Q-nodes may only be
/// reversed. A Q-node with two children is the same constraint as a
/// P-node and is normalized to one on construction.
class PQNode {
public:
    enum class Kind { leaf, p_node, q_node };

    static PQNode leaf(int label);
    static PQNode p(std::vector<PQNode> children);
    static PQNode q(std::vector<PQNode> children);

    Kind kind() const { return kind_; }
    int label() const { return label_; }
    const std::vector<PQNode>& children() const { return children_; }

    bool operator==(const PQNode&) const = default;

private:
    PQNode() = default;

    Kind kind_ = Kind::leaf;
    int label_ = -1;
    std::vector<PQNode> children_;
};

class PQTree {
public:
    explicit PQTree(PQNode root);

    const PQNode& root() const { return root_; }
    /// Leaf labels in tree order.
    const std::vector<int>& leaves() const { return leaves_; }
    int leaf_count() const { return static_cast<int>(leaves_.size()); }
    int max_degree() const { return max_degree_; }

    bool operator==(const PQTree&) const = default;

private:
    PQNode root_;
    std::vector<int> leaves_;
    int max_degree_ = 0;
};

/// Every leaf order the tree admits, sorted lexicographically. Throws
/// std::length_error when the count exceeds cap.
std::vector<std::vector<int>> permutations(const PQTree& t, std::int64_t cap = 1000000);

/// Membership in the admitted set, decided recursively without
/// enumeration. The leaf set of the tree must equal the values of perm.
bool contains(const PQTree& t, std::span<const int> perm);

struct ConstrainedResult {
    ColumnPermutation order;
    std::int64_t value = 0;  // cons1 of the matrix under that order
};

/// Minimum-cons1 column order among those the tree admits. Appends the
/// sentinel column, roots a fresh P-node over {sentinel leaf, tree}, runs
/// a per-node entry/exit-pair shortest-path DP on column Hamming
/// distances, and rotates the optimal tour at the sentinel.
ConstrainedResult constrained_min_cons1(const BinaryMatrix& a, const PQTree& t,
                                        const tsp::SolverConfig& cfg = {});

/// Text form: P-nodes as "(...)", Q-nodes as "[...]", leaves as
/// zero-based integers, whitespace-separated. Example: "( [0 1 2] (3 4) )".
PQTree parse_pqtree(std::string_view text);
std::string to_text(const PQTree& t);

}  // namespace lindiag
