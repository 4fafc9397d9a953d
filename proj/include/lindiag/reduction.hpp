#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lindiag/matrix.hpp"

namespace lindiag {

/// Complete graph on the columns of a matrix plus one appended all-zero
/// sentinel column. A tour through it, rotated at the sentinel, is a
/// column order; edges carry (possibly weighted or penalized) column
/// Hamming distances.
class TspInstance {
public:
    TspInstance() = default;
    TspInstance(int size, std::vector<std::int64_t> dist, int sentinel);

    int size() const { return size_; }
    int sentinel() const { return sentinel_; }
    std::int64_t d(int i, int j) const {
        return dist_[static_cast<std::size_t>(i) * static_cast<std::size_t>(size_) +
                     static_cast<std::size_t>(j)];
    }
    std::int64_t max_distance() const;

private:
    int size_ = 0;
    int sentinel_ = 0;
    std::vector<std::int64_t> dist_;
};

/// Cyclic length of a vertex sequence visiting every vertex once.
std::int64_t tour_length(const TspInstance& inst, std::span<const int> order);

/// Plain reduction: dist = column Hamming distance on the matrix with the
/// sentinel zero column appended. Any tour has length 2 * cons1 of the
/// column order it induces.
TspInstance build_plain(const BinaryMatrix& a);

/// Column sets that must stay consecutive, with the boundary-crossing
/// penalty 2p + 1 (p = total 1-entries of the matrix).
struct ColumnGroups {
    std::vector<std::vector<int>> groups;
    std::int64_t penalty = 1;

    static ColumnGroups for_matrix(const BinaryMatrix& a, std::vector<std::vector<int>> groups);
    int group_count() const { return static_cast<int>(groups.size()); }
};

/// Group-constrained reduction: inflates edges that cross a group boundary
/// by the penalty, so any minimal tour keeps every group contiguous when
/// that is at all possible.
TspInstance build_grouped(const BinaryMatrix& a, const ColumnGroups& g);

/// Groups from the supports of two rows; forcing both rows to be drawn as
/// single segments is always feasible (two rows admit a consecutive-ones
/// order).
ColumnGroups groups_from_two_rows(const BinaryMatrix& a, int row1, int row2);

/// True when every group occupies a contiguous range of positions in p.
bool groups_consecutive(const ColumnPermutation& p, const ColumnGroups& g);

struct RowWeights {
    std::vector<std::int64_t> weights;

    static RowWeights uniform(int rows, std::int64_t w = 1);
    explicit RowWeights(std::vector<std::int64_t> w);
    RowWeights() = default;
    int size() const { return static_cast<int>(weights.size()); }
};

/// Weighted reduction: dist = row-weighted Hamming distance. Tour length
/// is twice the weighted block count of the induced order.
TspInstance build_weighted(const BinaryMatrix& a, const RowWeights& w);

/// Rotates a tour at the sentinel and strips it, giving the column order
/// the tour encodes. Vertices above the sentinel index shift down by one.
ColumnPermutation tour_to_permutation(std::span<const int> tour, const TspInstance& inst);

/// TSPLIB95 document (EXPLICIT / FULL_MATRIX) for use with external
/// solvers.
std::string export_tsplib(const TspInstance& inst, std::string_view name = "lindiag");

}  // namespace lindiag
