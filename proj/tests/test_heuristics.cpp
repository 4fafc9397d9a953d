#include "doctest.h"

#include "lindiag/gen.hpp"
#include "lindiag/heuristics.hpp"
#include "lindiag/rng.hpp"
#include "oracles.hpp"

using namespace lindiag;

TEST_SUITE_BEGIN("heuristics");

TEST_CASE("rodgers reaches the optimum on the chain fixture") {
    const auto a = BinaryMatrix::from_rows({"110", "011"});
    const auto order = rodgers_order(a);
    CHECK(cons1(apply_permutation(a, order)) == 2);
}

TEST_CASE("rodgers on a single column") {
    CHECK(rodgers_order(BinaryMatrix::from_rows({"1"})) == ColumnPermutation({0}));
}

TEST_CASE("rodgers is deterministic and always a valid permutation") {
    Rng rng(7001);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_matrix(rng.next_int(1, 10), rng.next_int(1, 12), rng.next_unit(),
                                     rng.next_u64());
        const auto o1 = rodgers_order(a);
        const auto o2 = rodgers_order(a);
        CHECK(o1 == o2);
        CHECK(o1.size() == a.cols());
    }
}

TEST_CASE("heuristics never beat the exact optimum") {
    Rng rng(7002);
    for (int trial = 0; trial < 40; ++trial) {
        const auto a = random_matrix(rng.next_int(1, 8), rng.next_int(1, 7), 0.5, rng.next_u64());
        const auto best = oracle::min_cons1(a);
        CHECK(cons1(apply_permutation(a, rodgers_order(a))) >= best);
        HeuristicConfig cfg;
        cfg.seeds = 5;
        cfg.seed = rng.next_u64();
        CHECK(cons1(apply_permutation(a, multiseed_order(a, cfg))) >= best);
    }
}

TEST_CASE("one restart with no noise is exactly the rodgers order") {
    Rng rng(7003);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_matrix(rng.next_int(1, 8), rng.next_int(1, 10), 0.4, rng.next_u64());
        HeuristicConfig cfg;
        cfg.seeds = 1;
        cfg.seed = rng.next_u64();
        CHECK(multiseed_order(a, cfg) == rodgers_order(a));
    }
}

TEST_CASE("multiseed is never worse than its first restart") {
    Rng rng(7004);
    for (int trial = 0; trial < 30; ++trial) {
        const auto a = random_matrix(15, 10, 0.35, rng.next_u64());
        HeuristicConfig cfg;
        cfg.seeds = 20;
        cfg.seed = rng.next_u64();
        const auto multi = cons1(apply_permutation(a, multiseed_order(a, cfg)));
        const auto first = cons1(apply_permutation(a, rodgers_order(a)));
        CHECK(multi <= first);
    }
}

TEST_CASE("multiseed is deterministic in its config") {
    Rng rng(7005);
    const auto a = random_matrix(12, 10, 0.4, rng.next_u64());
    HeuristicConfig cfg;
    cfg.seeds = 25;
    cfg.seed = 99;
    CHECK(multiseed_order(a, cfg) == multiseed_order(a, cfg));
    HeuristicConfig zero;
    zero.seeds = 0;
    CHECK_THROWS_AS(multiseed_order(a, zero), std::invalid_argument);
}

TEST_CASE("polish improves the identity order on the split fixture") {
    const auto a = BinaryMatrix::from_rows({"101"});
    const auto polished = polish_two_opt(a, ColumnPermutation::identity(3));
    CHECK(cons1(apply_permutation(a, polished)) == 1);
    CHECK(oracle::min_cons1(a) == 1);
}

TEST_CASE("polish never increases the block count") {
    Rng rng(7006);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = rng.next_int(1, 12);
        const auto a = random_matrix(rng.next_int(1, 8), n, 0.5, rng.next_u64());
        const ColumnPermutation p(rng.permutation(n));
        const auto before = cons1(apply_permutation(a, p));
        const auto polished = polish_two_opt(a, p);
        const auto after = cons1(apply_permutation(a, polished));
        CHECK(after <= before);
        // a second pass finds nothing further
        CHECK(cons1(apply_permutation(a, polish_two_opt(a, polished))) == after);
    }
}

TEST_CASE("polish keeps an already optimal value") {
    Rng rng(7007);
    for (int trial = 0; trial < 20; ++trial) {
        const auto a = random_matrix(rng.next_int(1, 6), rng.next_int(1, 6), 0.5, rng.next_u64());
        const auto best = oracle::min_cons1(a);
        // feed it a random order; the result can never go below the optimum
        const ColumnPermutation p(rng.permutation(a.cols()));
        CHECK(cons1(apply_permutation(a, polish_two_opt(a, p))) >= best);
    }
}

TEST_SUITE_END();
