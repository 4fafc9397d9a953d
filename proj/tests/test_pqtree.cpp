#include "doctest.h"

#include <algorithm>
#include <set>

#include "lindiag/gen.hpp"
#include "lindiag/io.hpp"
#include "lindiag/pqtree.hpp"
#include "lindiag/rng.hpp"
#include "oracles.hpp"

using namespace lindiag;

namespace {

PQTree p_over(std::vector<int> labels) {
    std::vector<PQNode> children;
    for (const int l : labels) children.push_back(PQNode::leaf(l));
    return PQTree(PQNode::p(std::move(children)));
}

PQTree q_over(std::vector<int> labels) {
    std::vector<PQNode> children;
    for (const int l : labels) children.push_back(PQNode::leaf(l));
    return PQTree(PQNode::q(std::move(children)));
}

}  // namespace

TEST_SUITE_BEGIN("pqtree");

TEST_CASE("construction and normalization") {
    CHECK(q_over({1, 2}).root().kind() == PQNode::Kind::p_node);
    CHECK(q_over({1, 2, 3}).root().kind() == PQNode::Kind::q_node);
    CHECK_THROWS_AS(PQNode::p({PQNode::leaf(0)}), std::invalid_argument);
    CHECK_THROWS_AS(PQTree(PQNode::p({PQNode::leaf(0), PQNode::leaf(0)})), std::invalid_argument);
    const PQTree single(PQNode::leaf(4));
    CHECK(single.leaf_count() == 1);
    CHECK(single.max_degree() == 0);
}

TEST_CASE("P-node permutations") {
    const auto perms = permutations(p_over({1, 2, 3}));
    CHECK(perms.size() == 6);
}

TEST_CASE("Q-node permutations") {
    const auto perms = permutations(q_over({1, 2, 3}));
    CHECK(perms == std::vector<std::vector<int>>{{1, 2, 3}, {3, 2, 1}});
}

TEST_CASE("Q-node over a P-child and a leaf") {
    const PQTree t(PQNode::q({PQNode::p({PQNode::leaf(1), PQNode::leaf(2)}), PQNode::leaf(3)}));
    const auto perms = permutations(t);
    CHECK(perms == std::vector<std::vector<int>>{{1, 2, 3}, {2, 1, 3}, {3, 1, 2}, {3, 2, 1}});
}

TEST_CASE("enumeration cap") {
    CHECK_THROWS_AS(permutations(p_over({0, 1, 2, 3, 4, 5, 6}), 100), std::length_error);
}

TEST_CASE("contains base cases") {
    const PQTree single(PQNode::leaf(7));
    CHECK(contains(single, std::vector<int>{7}));
    CHECK(!contains(q_over({1, 2, 3}), std::vector<int>{2, 1, 3}));
    CHECK(contains(q_over({1, 2, 3}), std::vector<int>{3, 2, 1}));
    CHECK_THROWS_AS(contains(q_over({1, 2, 3}), std::vector<int>{1, 2, 4}),
                    std::invalid_argument);
    CHECK_THROWS_AS(contains(q_over({1, 2, 3}), std::vector<int>{1, 2}), std::invalid_argument);
}

TEST_CASE("contains agrees with enumeration, exhaustively over all orders") {
    Rng rng(6001);
    for (int trial = 0; trial < 30; ++trial) {
        const int leaves = rng.next_int(2, 7);
        const PQTree t = oracle::random_pq_tree(rng, leaves, 4);
        const auto admitted = permutations(t);
        const std::set<std::vector<int>> admitted_set(admitted.begin(), admitted.end());
        std::vector<int> labels = t.leaves();
        std::sort(labels.begin(), labels.end());
        do {
            CHECK(contains(t, labels) == (admitted_set.count(labels) > 0));
        } while (std::next_permutation(labels.begin(), labels.end()));
    }
}

TEST_CASE("the admitted set is closed under reversal") {
    Rng rng(6007);
    for (int trial = 0; trial < 25; ++trial) {
        const PQTree t = oracle::random_pq_tree(rng, rng.next_int(2, 7), 4);
        const auto admitted = permutations(t);
        const std::set<std::vector<int>> admitted_set(admitted.begin(), admitted.end());
        for (const auto& perm : admitted) {
            std::vector<int> rev(perm.rbegin(), perm.rend());
            CHECK(admitted_set.count(rev) == 1);
        }
    }
}

TEST_CASE("every enumerated permutation is contained") {
    Rng rng(6002);
    for (int trial = 0; trial < 20; ++trial) {
        const PQTree t = oracle::random_pq_tree(rng, rng.next_int(2, 8), 4);
        for (const auto& perm : permutations(t)) CHECK(contains(t, perm));
    }
}

TEST_CASE("constrained minimization under a vacuous P-root equals the unconstrained optimum") {
    Rng rng(6003);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = rng.next_int(2, 7);
        const auto a = random_matrix(rng.next_int(1, 6), n, 0.5, rng.next_u64());
        std::vector<int> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 0);
        const auto res = constrained_min_cons1(a, p_over(labels));
        CHECK(res.value == oracle::min_cons1(a));
    }
}

TEST_CASE("Q-node chain fixture") {
    const auto a = BinaryMatrix::from_rows({"101"});
    const auto res = constrained_min_cons1(a, q_over({0, 1, 2}));
    CHECK(res.value == 2);
    const bool forward = res.order == ColumnPermutation({0, 1, 2});
    const bool backward = res.order == ColumnPermutation({2, 1, 0});
    CHECK((forward || backward));
}

TEST_CASE("constrained result equals the enumeration oracle and is admissible") {
    Rng rng(6004);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.next_int(1, 8);
        const auto a = random_matrix(rng.next_int(1, 6), n, 0.2 + 0.6 * rng.next_unit(),
                                     rng.next_u64());
        const PQTree t = oracle::random_pq_tree(rng, n, 4);
        const auto res = constrained_min_cons1(a, t);
        CHECK(res.value == oracle::min_cons1_over(a, permutations(t)));
        CHECK(contains(t, res.order.mapping()));
        CHECK(res.value == cons1(apply_permutation(a, res.order)));
    }
}

TEST_CASE("constrained result equals the contains-filtered brute force") {
    // alternate oracle route: minimize over all n! orders accepted by
    // contains(), without touching the enumeration
    Rng rng(6006);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.next_int(2, 7);
        const auto a = random_matrix(rng.next_int(1, 5), n, 0.5, rng.next_u64());
        const PQTree t = oracle::random_pq_tree(rng, n, 4);
        std::vector<int> order(static_cast<std::size_t>(n));
        std::iota(order.begin(), order.end(), 0);
        std::int64_t best = -1;
        do {
            if (!contains(t, order)) continue;
            const auto v = oracle::cons1_of_order(a, order);
            if (best < 0 || v < best) best = v;
        } while (std::next_permutation(order.begin(), order.end()));
        REQUIRE(best >= 0);
        CHECK(constrained_min_cons1(a, t).value == best);
    }
}

TEST_CASE("replacing a P-node by a Q-node never decreases the optimum") {
    Rng rng(6005);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = rng.next_int(3, 7);
        const auto a = random_matrix(rng.next_int(1, 5), n, 0.5, rng.next_u64());
        std::vector<int> labels(static_cast<std::size_t>(n));
        std::iota(labels.begin(), labels.end(), 0);
        Rng shuffle_rng(rng.next_u64());
        shuffle_rng.shuffle(labels);
        const auto p_val = constrained_min_cons1(a, p_over(labels)).value;
        const auto q_val = constrained_min_cons1(a, q_over(labels)).value;
        CHECK(q_val >= p_val);
    }
}

TEST_CASE("constrained minimization validates its inputs") {
    const auto a = BinaryMatrix::from_rows({"101"});
    CHECK_THROWS_AS(constrained_min_cons1(a, q_over({0, 1, 3})), std::invalid_argument);
    CHECK_THROWS_AS(constrained_min_cons1(a, PQTree(PQNode::leaf(0))), std::invalid_argument);
    tsp::SolverConfig cfg;
    cfg.pq_degree_cap = 2;
    CHECK_THROWS_AS(constrained_min_cons1(a, p_over({0, 1, 2}), cfg), std::invalid_argument);
}

TEST_CASE("single-column matrix") {
    const auto a = BinaryMatrix::from_rows({"1", "0"});
    const auto res = constrained_min_cons1(a, PQTree(PQNode::leaf(0)));
    CHECK(res.value == 1);
    CHECK(res.order == ColumnPermutation({0}));
}

TEST_CASE("deeply nested chain of alternating node kinds") {
    // ((((0 1) 2) [3 (4 5) 6]) 7), built programmatically a few levels deep
    Rng rng(6008);
    for (int trial = 0; trial < 15; ++trial) {
        const int n = rng.next_int(4, 8);
        PQNode node = PQNode::p({PQNode::leaf(0), PQNode::leaf(1)});
        for (int next = 2; next < n; ++next) {
            std::vector<PQNode> children;
            children.push_back(std::move(node));
            children.push_back(PQNode::leaf(next));
            node = rng.next_bool(0.5) ? PQNode::p(std::move(children))
                                      : PQNode::q(std::move(children));
        }
        const PQTree t(std::move(node));
        const auto a = random_matrix(rng.next_int(1, 5), n, 0.5, rng.next_u64());
        const auto res = constrained_min_cons1(a, t);
        CHECK(res.value == oracle::min_cons1_over(a, permutations(t)));
        CHECK(contains(t, res.order.mapping()));
    }
}

TEST_CASE("constrained solve on a rowless matrix") {
    const BinaryMatrix a(0, 3);
    const auto res = constrained_min_cons1(a, q_over({0, 1, 2}));
    CHECK(res.value == 0);
    CHECK(res.order.size() == 3);
    CHECK(contains(q_over({0, 1, 2}), res.order.mapping()));
}

TEST_CASE("parser round trips") {
    const PQTree t = parse_pqtree("( [0 1 2] (3 4) )");
    CHECK(t.leaf_count() == 5);
    CHECK(t.root().kind() == PQNode::Kind::p_node);
    CHECK(t.root().children()[0].kind() == PQNode::Kind::q_node);
    CHECK(parse_pqtree(to_text(t)) == t);
    CHECK(to_text(parse_pqtree("5")) == "5");
    // a two-child Q-node reads back as the equivalent P-node
    CHECK(parse_pqtree("[0 1]").root().kind() == PQNode::Kind::p_node);
}

TEST_CASE("parser reports positions") {
    CHECK_THROWS_WITH_AS(parse_pqtree("(0 1"), doctest::Contains("position 1"), ParseError);
    CHECK_THROWS_WITH_AS(parse_pqtree("(0 1] "), doctest::Contains("position 5"), ParseError);
    CHECK_THROWS_WITH_AS(parse_pqtree("(0)"), doctest::Contains("at least 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_pqtree("(0 0)"), doctest::Contains("duplicate leaf 0"), ParseError);
    CHECK_THROWS_WITH_AS(parse_pqtree("(0 x)"), doctest::Contains("unexpected character"),
                         ParseError);
    CHECK_THROWS_WITH_AS(parse_pqtree("(0 1) 2"), doctest::Contains("trailing"), ParseError);
    CHECK_THROWS_WITH_AS(parse_pqtree("   "), doctest::Contains("unexpected end"), ParseError);
}

TEST_SUITE_END();
