#include "doctest.h"

#include <numeric>

#include "lindiag/gen.hpp"
#include "lindiag/rng.hpp"
#include "lindiag/tsp.hpp"
#include "oracles.hpp"

using namespace lindiag;

namespace {

TspInstance random_instance(Rng& rng, int size, int max_d = 20) {
    std::vector<std::int64_t> dist(static_cast<std::size_t>(size) * static_cast<std::size_t>(size), 0);
    for (int i = 0; i < size; ++i) {
        for (int j = 0; j < i; ++j) {
            const std::int64_t d = rng.next_int(0, max_d);
            dist[static_cast<std::size_t>(i) * size + j] = d;
            dist[static_cast<std::size_t>(j) * size + i] = d;
        }
    }
    return TspInstance(size, std::move(dist), size - 1);
}

bool is_tour(const tsp::Tour& t, int size) {
    if (static_cast<int>(t.order.size()) != size) return false;
    std::vector<bool> seen(static_cast<std::size_t>(size), false);
    for (const int v : t.order) {
        if (v < 0 || v >= size || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    return true;
}

}  // namespace

TEST_SUITE_BEGIN("tsp");

TEST_CASE("brute force on 3 vertices sums all edges") {
    Rng rng(5001);
    const auto inst = random_instance(rng, 3);
    const auto res = tsp::solve_brute(inst);
    CHECK(res.length == inst.d(0, 1) + inst.d(1, 2) + inst.d(2, 0));
    CHECK(res.optimal);
}

TEST_CASE("brute force on all-zero distances") {
    const auto res = tsp::solve_brute(TspInstance(4, std::vector<std::int64_t>(16, 0), 3));
    CHECK(res.length == 0);
}

TEST_CASE("brute force size cap") {
    CHECK_THROWS_AS(tsp::solve_brute(TspInstance(11, std::vector<std::int64_t>(121, 0), 0)),
                    std::invalid_argument);
}

TEST_CASE("held-karp on the unit square") {
    // sides 1, diagonals 2
    std::vector<std::int64_t> d{0, 1, 2, 1, 1, 0, 1, 2, 2, 1, 0, 1, 1, 2, 1, 0};
    const auto res = tsp::solve_held_karp(TspInstance(4, std::move(d), 3));
    CHECK(res.length == 4);
    CHECK(res.optimal);
}

TEST_CASE("held-karp degenerate sizes") {
    const auto res1 = tsp::solve_held_karp(TspInstance(1, {0}, 0));
    CHECK(res1.tour.order == std::vector<int>{0});
    CHECK(res1.length == 0);
    CHECK(res1.optimal);
    const auto res2 = tsp::solve_held_karp(TspInstance(2, {0, 3, 3, 0}, 1));
    CHECK(res2.length == 6);
}

TEST_CASE("held-karp cap") {
    tsp::SolverConfig cfg;
    cfg.held_karp_cap = 4;
    CHECK_THROWS_AS(tsp::solve_held_karp(TspInstance(5, std::vector<std::int64_t>(25, 0), 0), cfg),
                    std::invalid_argument);
    CHECK(!tsp::held_karp_accepts(TspInstance(5, std::vector<std::int64_t>(25, 0), 0), cfg));
}

TEST_CASE("held-karp and branch-and-bound agree with brute force") {
    Rng rng(5002);
    for (int trial = 0; trial < 200; ++trial) {
        const int size = rng.next_int(1, 9);
        const auto inst = random_instance(rng, size);
        const auto brute = tsp::solve_brute(inst);
        const auto hk = tsp::solve_held_karp(inst);
        const auto bnb = tsp::solve_branch_and_bound(inst);
        CHECK(hk.length == brute.length);
        CHECK(bnb.length == brute.length);
        CHECK(hk.optimal);
        CHECK(bnb.optimal);
        CHECK(is_tour(hk.tour, size));
        CHECK(is_tour(bnb.tour, size));
        CHECK(tour_length(inst, hk.tour.order) == hk.length);
        CHECK(tour_length(inst, bnb.tour.order) == bnb.length);
    }
}

TEST_CASE("branch-and-bound matches held-karp on mid-size instances") {
    Rng rng(5003);
    for (int trial = 0; trial < 30; ++trial) {
        const int size = rng.next_int(10, 13);
        const auto inst = random_instance(rng, size);
        const auto hk = tsp::solve_held_karp(inst);
        const auto bnb = tsp::solve_branch_and_bound(inst);
        CHECK(bnb.optimal);
        CHECK(bnb.length == hk.length);
    }
}

TEST_CASE("zero time limit degrades to the heuristic answer, flagged") {
    Rng rng(5004);
    const auto inst = random_instance(rng, 12);
    tsp::SolverConfig cfg;
    cfg.time_limit = std::chrono::milliseconds(0);
    const auto bnb = tsp::solve_branch_and_bound(inst, cfg);
    const auto heur = tsp::solve_heuristic(inst, cfg);
    CHECK(!bnb.optimal);
    CHECK(bnb.length == heur.length);
    CHECK(bnb.stats.lower_bound <= bnb.length);
}

TEST_CASE("reported lower bound never exceeds the returned length") {
    Rng rng(5005);
    for (int trial = 0; trial < 40; ++trial) {
        const auto inst = random_instance(rng, rng.next_int(4, 12));
        tsp::SolverConfig cfg;
        cfg.time_limit = std::chrono::milliseconds(rng.next_bool(0.5) ? 0 : 60000);
        const auto res = tsp::solve_branch_and_bound(inst, cfg);
        CHECK(res.stats.lower_bound <= res.length);
        if (res.optimal) CHECK(res.stats.lower_bound == res.length);
    }
}

TEST_CASE("heuristic reaches the optimum on a C1P instance") {
    const auto inst = build_plain(BinaryMatrix::from_rows({"110", "011"}));
    const auto res = tsp::solve_heuristic(inst);
    CHECK(res.length == 4);  // 2 * optimal block count
}

TEST_CASE("heuristic on a single vertex") {
    const auto res = tsp::solve_heuristic(TspInstance(1, {0}, 0));
    CHECK(res.tour.order == std::vector<int>{0});
    CHECK(res.optimal);
}

TEST_CASE("heuristic is valid, never better than optimal, and 2-opt stable") {
    Rng rng(5006);
    for (int trial = 0; trial < 100; ++trial) {
        const int size = rng.next_int(2, 9);
        const auto inst = random_instance(rng, size);
        const auto heur = tsp::solve_heuristic(inst);
        const auto brute = tsp::solve_brute(inst);
        CHECK(is_tour(heur.tour, size));
        CHECK(tour_length(inst, heur.tour.order) == heur.length);
        CHECK(heur.length >= brute.length);
        // no single segment reversal may improve the returned tour
        const auto& t = heur.tour.order;
        for (int i = 1; i + 1 < size; ++i) {
            for (int j = i + 1; j < size; ++j) {
                const int a = t[static_cast<std::size_t>(i - 1)];
                const int b = t[static_cast<std::size_t>(i)];
                const int c = t[static_cast<std::size_t>(j)];
                const int e = t[static_cast<std::size_t>((j + 1) % size)];
                CHECK(inst.d(a, c) + inst.d(b, e) >= inst.d(a, b) + inst.d(c, e));
            }
        }
    }
}

TEST_CASE("MST lower bound never exceeds the optimum") {
    Rng rng(5007);
    for (int trial = 0; trial < 100; ++trial) {
        const auto inst = random_instance(rng, rng.next_int(2, 9));
        CHECK(tsp::mst_lower_bound(inst) <= tsp::solve_brute(inst).length);
    }
}

TEST_CASE("auto dispatch picks held-karp under the cap") {
    Rng rng(5008);
    const auto inst = random_instance(rng, 15);
    const auto res = tsp::solve(inst);
    CHECK(res.optimal);
    CHECK(res.length == tsp::solve_branch_and_bound(inst).length);
    CHECK(tsp::held_karp_accepts(inst, tsp::SolverConfig{}));
    CHECK(!tsp::held_karp_accepts(random_instance(rng, 23), tsp::SolverConfig{}));
}

TEST_CASE("auto result is never worse than the heuristic") {
    Rng rng(5009);
    for (int trial = 0; trial < 30; ++trial) {
        const auto inst = random_instance(rng, rng.next_int(2, 12));
        CHECK(tsp::solve(inst).length <= tsp::solve_heuristic(inst).length);
    }
}

TEST_SUITE_END();
