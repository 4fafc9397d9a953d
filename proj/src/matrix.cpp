#include "lindiag/matrix.hpp"

#include <bit>
#include <map>
#include <stdexcept>

namespace lindiag {

namespace {

constexpr int kWordBits = 64;

int words_for(int bits) { return (bits + kWordBits - 1) / kWordBits; }

}  // namespace

BinaryMatrix::BinaryMatrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_per_row_(words_for(cols)) {
    if (rows < 0 || cols < 0) {
        throw std::invalid_argument("matrix dimensions must be non-negative");
    }
    bits_.assign(static_cast<std::size_t>(rows_) * static_cast<std::size_t>(words_per_row_), 0);
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::string>& rows) {
    const int m = static_cast<int>(rows.size());
    const int n = m == 0 ? 0 : static_cast<int>(rows.front().size());
    BinaryMatrix a(m, n);
    for (int i = 0; i < m; ++i) {
        if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != n) {
            throw std::invalid_argument("all rows must have the same length");
        }
        for (int j = 0; j < n; ++j) {
            const char c = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (c != '0' && c != '1') {
                throw std::invalid_argument("rows may only contain '0' and '1'");
            }
            if (c == '1') a.set(i, j, true);
        }
    }
    return a;
}

void BinaryMatrix::check_cell(int row, int col) const {
    if (row < 0 || row >= rows_ || col < 0 || col >= cols_) {
        throw std::out_of_range("matrix index out of range");
    }
}

bool BinaryMatrix::get(int row, int col) const {
    check_cell(row, col);
    const std::size_t word =
        static_cast<std::size_t>(row) * static_cast<std::size_t>(words_per_row_) +
        static_cast<std::size_t>(col / kWordBits);
    return (bits_[word] >> (col % kWordBits)) & 1ULL;
}

void BinaryMatrix::set(int row, int col, bool value) {
    check_cell(row, col);
    const std::size_t word =
        static_cast<std::size_t>(row) * static_cast<std::size_t>(words_per_row_) +
        static_cast<std::size_t>(col / kWordBits);
    const std::uint64_t mask = 1ULL << (col % kWordBits);
    if (value) {
        bits_[word] |= mask;
    } else {
        bits_[word] &= ~mask;
    }
}

std::span<const std::uint64_t> BinaryMatrix::row_words(int row) const {
    if (row < 0 || row >= rows_) throw std::out_of_range("row index out of range");
    return {bits_.data() + static_cast<std::size_t>(row) * static_cast<std::size_t>(words_per_row_),
            static_cast<std::size_t>(words_per_row_)};
}

std::int64_t BinaryMatrix::ones() const {
    std::int64_t total = 0;
    for (const std::uint64_t w : bits_) total += std::popcount(w);
    return total;
}

std::int64_t BinaryMatrix::ones_in_row(int row) const {
    std::int64_t total = 0;
    for (const std::uint64_t w : row_words(row)) total += std::popcount(w);
    return total;
}

std::int64_t BinaryMatrix::ones_in_col(int col) const {
    if (col < 0 || col >= cols_) throw std::out_of_range("column index out of range");
    std::int64_t total = 0;
    for (int i = 0; i < rows_; ++i) total += get(i, col) ? 1 : 0;
    return total;
}

int BinaryMatrix::nonzero_rows() const {
    int count = 0;
    for (int i = 0; i < rows_; ++i) count += row_has_one(i) ? 1 : 0;
    return count;
}

std::int64_t cons1_row(const BinaryMatrix& a, int row) {
    const auto words = a.row_words(row);
    std::int64_t runs = 0;
    for (std::size_t k = 0; k < words.size(); ++k) {
        const std::uint64_t x = words[k];
        const std::uint64_t next_lsb = (k + 1 < words.size()) ? (words[k + 1] & 1ULL) : 0ULL;
        // A run ends at bit i when bit i is set and bit i+1 (possibly in the
        // next word) is clear; padding bits past the last column are zero.
        const std::uint64_t shifted = (x >> 1) | (next_lsb << 63);
        runs += std::popcount(x & ~shifted);
    }
    return runs;
}

std::int64_t cons1(const BinaryMatrix& a) {
    std::int64_t total = 0;
    for (int i = 0; i < a.rows(); ++i) total += cons1_row(a, i);
    return total;
}

std::int64_t splits(const BinaryMatrix& a) {
    std::int64_t total = 0;
    for (int i = 0; i < a.rows(); ++i) {
        if (a.row_has_one(i)) total += cons1_row(a, i) - 1;
    }
    return total;
}

std::int64_t hamming(const BinaryMatrix& a, int col_i, int col_j) {
    if (col_i < 0 || col_i >= a.cols() || col_j < 0 || col_j >= a.cols()) {
        throw std::out_of_range("column index out of range");
    }
    std::int64_t diff = 0;
    for (int k = 0; k < a.rows(); ++k) {
        diff += a.get(k, col_i) != a.get(k, col_j) ? 1 : 0;
    }
    return diff;
}

ColumnPermutation::ColumnPermutation(std::vector<int> mapping) : map_(std::move(mapping)) {
    std::vector<bool> seen(map_.size(), false);
    for (const int v : map_) {
        if (v < 0 || v >= static_cast<int>(map_.size()) || seen[static_cast<std::size_t>(v)]) {
            throw std::invalid_argument("mapping is not a permutation");
        }
        seen[static_cast<std::size_t>(v)] = true;
    }
}

ColumnPermutation ColumnPermutation::identity(int n) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) m[static_cast<std::size_t>(i)] = i;
    return ColumnPermutation(std::move(m));
}

ColumnPermutation ColumnPermutation::reversed() const {
    std::vector<int> m(map_.rbegin(), map_.rend());
    return ColumnPermutation(std::move(m));
}

BinaryMatrix apply_permutation(const BinaryMatrix& a, const ColumnPermutation& p) {
    if (p.size() != a.cols()) {
        throw std::invalid_argument("permutation length does not match column count");
    }
    BinaryMatrix out(a.rows(), a.cols());
    for (int i = 0; i < a.rows(); ++i) {
        for (int j = 0; j < a.cols(); ++j) {
            if (a.get(i, p[j])) out.set(i, j, true);
        }
    }
    return out;
}

int CollapseMap::original_cols() const {
    int total = 0;
    for (const auto& g : groups) total += static_cast<int>(g.size());
    return total;
}

std::pair<BinaryMatrix, CollapseMap> collapse_duplicates(const BinaryMatrix& a) {
    const int wpc = (a.rows() + kWordBits - 1) / kWordBits;
    std::map<std::vector<std::uint64_t>, int> group_of;
    CollapseMap cmap;
    for (int j = 0; j < a.cols(); ++j) {
        std::vector<std::uint64_t> key(static_cast<std::size_t>(wpc), 0);
        for (int i = 0; i < a.rows(); ++i) {
            if (a.get(i, j)) key[static_cast<std::size_t>(i / kWordBits)] |= 1ULL << (i % kWordBits);
        }
        auto [it, inserted] = group_of.try_emplace(std::move(key), cmap.group_count());
        if (inserted) {
            cmap.groups.push_back({j});
        } else {
            cmap.groups[static_cast<std::size_t>(it->second)].push_back(j);
        }
    }
    BinaryMatrix collapsed(a.rows(), cmap.group_count());
    for (int g = 0; g < cmap.group_count(); ++g) {
        const int rep = cmap.groups[static_cast<std::size_t>(g)].front();
        for (int i = 0; i < a.rows(); ++i) {
            if (a.get(i, rep)) collapsed.set(i, g, true);
        }
    }
    return {std::move(collapsed), std::move(cmap)};
}

ColumnPermutation expand_permutation(const ColumnPermutation& p, const CollapseMap& m) {
    if (p.size() != m.group_count()) {
        throw std::invalid_argument("permutation length does not match group count");
    }
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(m.original_cols()));
    for (int k = 0; k < p.size(); ++k) {
        const auto& group = m.groups[static_cast<std::size_t>(p[k])];
        out.insert(out.end(), group.begin(), group.end());
    }
    return ColumnPermutation(std::move(out));
}

PackedColumns::PackedColumns(const BinaryMatrix& a)
    : rows_(a.rows()), cols_(a.cols()), words_per_col_(words_for(a.rows())) {
    bits_.assign(static_cast<std::size_t>(cols_) * static_cast<std::size_t>(words_per_col_), 0);
    for (int j = 0; j < cols_; ++j) {
        std::uint64_t* col = bits_.data() + static_cast<std::size_t>(j) * static_cast<std::size_t>(words_per_col_);
        for (int i = 0; i < rows_; ++i) {
            if (a.get(i, j)) col[i / kWordBits] |= 1ULL << (i % kWordBits);
        }
    }
}

const std::uint64_t* PackedColumns::col_ptr(int col) const {
    if (col < 0 || col >= cols_) throw std::out_of_range("column index out of range");
    return bits_.data() + static_cast<std::size_t>(col) * static_cast<std::size_t>(words_per_col_);
}

std::int64_t PackedColumns::hamming(int i, int j) const {
    const std::uint64_t* x = col_ptr(i);
    const std::uint64_t* y = col_ptr(j);
    std::int64_t diff = 0;
    for (int k = 0; k < words_per_col_; ++k) diff += std::popcount(x[k] ^ y[k]);
    return diff;
}

std::int64_t PackedColumns::intersection(int i, int j) const {
    const std::uint64_t* x = col_ptr(i);
    const std::uint64_t* y = col_ptr(j);
    std::int64_t both = 0;
    for (int k = 0; k < words_per_col_; ++k) both += std::popcount(x[k] & y[k]);
    return both;
}

std::int64_t PackedColumns::ones(int col) const {
    const std::uint64_t* x = col_ptr(col);
    std::int64_t total = 0;
    for (int k = 0; k < words_per_col_; ++k) total += std::popcount(x[k]);
    return total;
}

}  // namespace lindiag
