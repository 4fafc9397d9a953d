#include "doctest.h"

#include "lindiag/gen.hpp"
#include "lindiag/matrix.hpp"
#include "lindiag/rng.hpp"
#include "oracles.hpp"

using namespace lindiag;

namespace {

std::int64_t naive_cons1_row(const BinaryMatrix& a, int row) {
    std::int64_t runs = 0;
    bool prev = false;
    for (int j = 0; j < a.cols(); ++j) {
        const bool cur = a.get(row, j);
        if (cur && !prev) ++runs;
        prev = cur;
    }
    return runs;
}

}  // namespace

TEST_SUITE_BEGIN("matrix");

TEST_CASE("cons1_row on small rows") {
    const auto a = BinaryMatrix::from_rows({"10110", "00000", "11111"});
    CHECK(cons1_row(a, 0) == 2);
    CHECK(cons1_row(a, 1) == 0);
    CHECK(cons1_row(a, 2) == 1);
}

TEST_CASE("cons1 sums rows") {
    CHECK(cons1(BinaryMatrix::from_rows({"101", "110"})) == 3);
    CHECK(cons1(BinaryMatrix::from_rows({"100", "010", "001"})) == 3);
    CHECK(cons1(BinaryMatrix(4, 5)) == 0);
    CHECK(cons1(BinaryMatrix(0, 3)) == 0);
    CHECK(cons1(BinaryMatrix(3, 0)) == 0);
}

TEST_CASE("splits") {
    CHECK(splits(BinaryMatrix::from_rows({"101"})) == 1);
    CHECK(splits(BinaryMatrix::from_rows({"00"})) == 0);
}

TEST_CASE("splits identity against cons1") {
    Rng rng(1001);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_matrix(rng.next_int(0, 8), rng.next_int(0, 90), rng.next_unit(),
                                     rng.next_u64());
        CHECK(splits(a) == cons1(a) - a.nonzero_rows());
    }
}

TEST_CASE("word-parallel cons1_row matches the naive scan across word boundaries") {
    Rng rng(1002);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.next_int(1, 200);
        const auto a = random_matrix(3, n, rng.next_unit(), rng.next_u64());
        for (int i = 0; i < a.rows(); ++i) CHECK(cons1_row(a, i) == naive_cons1_row(a, i));
    }
}

TEST_CASE("hamming basics") {
    const auto a = BinaryMatrix::from_rows({"10", "00", "11"});
    CHECK(hamming(a, 0, 1) == 1);
    CHECK(hamming(a, 0, 0) == 0);
    CHECK_THROWS_AS(hamming(a, 0, 2), std::out_of_range);
}

TEST_CASE("hamming is a metric and matches PackedColumns") {
    Rng rng(1003);
    for (int trial = 0; trial < 30; ++trial) {
        const int m = rng.next_int(1, 70);
        const int n = rng.next_int(2, 8);
        const auto a = random_matrix(m, n, rng.next_unit(), rng.next_u64());
        const PackedColumns pc(a);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                const auto d = hamming(a, i, j);
                CHECK(d == hamming(a, j, i));
                CHECK(d == pc.hamming(i, j));
                CHECK(d >= 0);
                CHECK(d <= m);
                for (int k = 0; k < n; ++k) {
                    CHECK(d <= hamming(a, i, k) + hamming(a, k, j));
                }
            }
        }
    }
}

TEST_CASE("apply_permutation") {
    const auto a = BinaryMatrix::from_rows({"10"});
    CHECK(apply_permutation(a, ColumnPermutation::identity(2)) == a);
    CHECK(apply_permutation(a, ColumnPermutation({1, 0})) == BinaryMatrix::from_rows({"01"}));
    CHECK_THROWS_AS(apply_permutation(a, ColumnPermutation({0})), std::invalid_argument);
}

TEST_CASE("cons1 is invariant under reversing the order") {
    Rng rng(1004);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.next_int(1, 9);
        const auto a = random_matrix(rng.next_int(1, 8), n, rng.next_unit(), rng.next_u64());
        const ColumnPermutation p(rng.permutation(n));
        CHECK(cons1(apply_permutation(a, p)) == cons1(apply_permutation(a, p.reversed())));
    }
}

TEST_CASE("permutation validation") {
    CHECK_THROWS_AS(ColumnPermutation({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ColumnPermutation({1, 2}), std::invalid_argument);
}

TEST_CASE("collapse_duplicates") {
    const auto a = BinaryMatrix::from_rows({"110", "001"});
    const auto [collapsed, cmap] = collapse_duplicates(a);
    CHECK(collapsed == BinaryMatrix::from_rows({"10", "01"}));
    REQUIRE(cmap.groups.size() == 2);
    CHECK(cmap.groups[0] == std::vector<int>{0, 1});
    CHECK(cmap.groups[1] == std::vector<int>{2});
}

TEST_CASE("collapse keeps distinct columns as singletons") {
    const auto a = BinaryMatrix::from_rows({"10", "01"});
    const auto [collapsed, cmap] = collapse_duplicates(a);
    CHECK(collapsed == a);
    CHECK(cmap.groups == std::vector<std::vector<int>>{{0}, {1}});
}

TEST_CASE("expand_permutation") {
    CollapseMap m;
    m.groups = {{0, 2}, {1}};
    CHECK(expand_permutation(ColumnPermutation({1, 0}), m) == ColumnPermutation({1, 0, 2}));
    CollapseMap singles;
    singles.groups = {{0}, {1}, {2}};
    CHECK(expand_permutation(ColumnPermutation({2, 0, 1}), singles) ==
          ColumnPermutation({2, 0, 1}));
    CHECK_THROWS_AS(expand_permutation(ColumnPermutation({0}), m), std::invalid_argument);
}

TEST_CASE("expanded permutations are always bijections") {
    Rng rng(1005);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = rng.next_int(1, 10);
        const auto a = random_matrix(rng.next_int(1, 4), n, 0.5, rng.next_u64());
        const auto [collapsed, cmap] = collapse_duplicates(a);
        const ColumnPermutation p(rng.permutation(collapsed.cols()));
        const ColumnPermutation expanded = expand_permutation(p, cmap);
        CHECK(expanded.size() == n);  // the constructor enforces bijectivity
    }
}

TEST_CASE("expanding any group order preserves the block count") {
    Rng rng(1006);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.next_int(1, 7);
        const auto a = random_matrix(rng.next_int(1, 5), n, 0.5, rng.next_u64());
        const auto [collapsed, cmap] = collapse_duplicates(a);
        const ColumnPermutation p(rng.permutation(collapsed.cols()));
        CHECK(cons1(apply_permutation(a, expand_permutation(p, cmap))) ==
              cons1(apply_permutation(collapsed, p)));
    }
}

TEST_CASE("from_rows validation") {
    CHECK_THROWS_AS(BinaryMatrix::from_rows({"10", "1"}), std::invalid_argument);
    CHECK_THROWS_AS(BinaryMatrix::from_rows({"1x"}), std::invalid_argument);
}

TEST_SUITE_END();
