#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace lindiag {

/// m x n matrix over {0,1}. Row bits are packed into 64-bit words (LSB
/// first) so block counting and bulk column comparison run word-parallel.
/// Matrices are treated as immutable once built and can be shared freely
/// between threads.
class BinaryMatrix {
public:
    BinaryMatrix() = default;
    BinaryMatrix(int rows, int cols);

    /// Rows given as strings of '0'/'1', all the same length.
    static BinaryMatrix from_rows(const std::vector<std::string>& rows);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int row, int col) const;
    void set(int row, int col, bool value);

    std::span<const std::uint64_t> row_words(int row) const;
    int words_per_row() const { return words_per_row_; }

    std::int64_t ones() const;
    std::int64_t ones_in_row(int row) const;
    std::int64_t ones_in_col(int col) const;
    bool row_has_one(int row) const { return ones_in_row(row) > 0; }
    int nonzero_rows() const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    void check_cell(int row, int col) const;

    int rows_ = 0;
    int cols_ = 0;
    int words_per_row_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Number of maximal blocks of consecutive ones in a row.
std::int64_t cons1_row(const BinaryMatrix& a, int row);

/// Total number of blocks over all rows; equals the number of line
/// segments the diagram needs under the current column order.
std::int64_t cons1(const BinaryMatrix& a);

/// Per row: cons1_row - 1 if the row contains a 1-entry, else 0; summed.
std::int64_t splits(const BinaryMatrix& a);

/// Number of rows in which columns i and j differ.
std::int64_t hamming(const BinaryMatrix& a, int col_i, int col_j);

/// Column order: position j of the reordered matrix shows column
/// mapping[j] of the original.
class ColumnPermutation {
public:
    ColumnPermutation() = default;
    explicit ColumnPermutation(std::vector<int> mapping);
    static ColumnPermutation identity(int n);

    int size() const { return static_cast<int>(map_.size()); }
    int operator[](int j) const { return map_[static_cast<std::size_t>(j)]; }
    const std::vector<int>& mapping() const { return map_; }
    ColumnPermutation reversed() const;

    bool operator==(const ColumnPermutation&) const = default;

private:
    std::vector<int> map_;
};

BinaryMatrix apply_permutation(const BinaryMatrix& a, const ColumnPermutation& p);

/// Duplicate-column groups in first-occurrence order. Each group lists the
/// original column indices (ascending); the representative is the first.
struct CollapseMap {
    std::vector<std::vector<int>> groups;

    int group_count() const { return static_cast<int>(groups.size()); }
    int original_cols() const;
};

/// Merges identical columns. The collapsed matrix keeps one column per
/// group, in first-occurrence order.
std::pair<BinaryMatrix, CollapseMap> collapse_duplicates(const BinaryMatrix& a);

/// Rewrites a permutation of collapse groups into a permutation of the
/// original columns; group members stay adjacent, ascending.
ColumnPermutation expand_permutation(const ColumnPermutation& p, const CollapseMap& m);

/// Column-major repacking of a matrix. Pairwise column Hamming distances
/// become XOR+popcount over words; used to build distance matrices and
/// column similarities in bulk.
class PackedColumns {
public:
    explicit PackedColumns(const BinaryMatrix& a);

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    std::int64_t hamming(int i, int j) const;
    /// Number of rows where both columns are 1.
    std::int64_t intersection(int i, int j) const;
    std::int64_t ones(int col) const;

private:
    const std::uint64_t* col_ptr(int col) const;

    int rows_ = 0;
    int cols_ = 0;
    int words_per_col_ = 0;
    std::vector<std::uint64_t> bits_;
};

}  // namespace lindiag
