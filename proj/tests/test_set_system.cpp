#include "doctest.h"

#include <stdexcept>

#include "lindiag/gen.hpp"
#include "lindiag/rng.hpp"
#include "lindiag/set_system.hpp"

using namespace lindiag;

TEST_SUITE_BEGIN("set_system");

TEST_CASE("membership matrix") {
    const SetSystem s({"a", "b", "c"}, {{"S1", {0, 2}}, {"S2", {1}}});
    CHECK(from_set_system(s) == BinaryMatrix::from_rows({"101", "010"}));
}

TEST_CASE("empty set list over 3 elements") {
    const SetSystem s({"a", "b", "c"}, {});
    const auto m = from_set_system(s);
    CHECK(m.rows() == 0);
    CHECK(m.cols() == 3);
}

TEST_CASE("round trip reconstructs membership exactly") {
    Rng rng(2001);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.next_int(1, 10);
        const int m = rng.next_int(0, 8);
        std::vector<std::string> elements;
        for (int j = 0; j < n; ++j) elements.push_back("elem" + std::to_string(j));
        std::vector<SetEntry> sets;
        for (int i = 0; i < m; ++i) {
            SetEntry e;
            e.name = "set" + std::to_string(i);
            for (int j = 0; j < n; ++j) {
                if (rng.next_bool(0.4)) e.members.push_back(j);
            }
            sets.push_back(std::move(e));
        }
        const SetSystem s(elements, sets);
        std::vector<std::string> set_names;
        for (const auto& e : s.sets()) set_names.push_back(e.name);
        CHECK(to_set_system(from_set_system(s), s.elements(), set_names) == s);
    }
}

TEST_CASE("default names") {
    const auto s = to_set_system(BinaryMatrix::from_rows({"10"}));
    CHECK(s.elements() == std::vector<std::string>{"e0", "e1"});
    CHECK(s.sets().front().name == "S0");
    CHECK(s.sets().front().members == std::vector<int>{0});
}

TEST_CASE("validation") {
    CHECK_THROWS_AS(SetSystem({"a", "a"}, {}), std::invalid_argument);
    CHECK_THROWS_AS(SetSystem({"a"}, {{"S", {0}}, {"S", {}}}), std::invalid_argument);
    CHECK_THROWS_AS(SetSystem({"a"}, {{"S", {1}}}), std::invalid_argument);
    CHECK_THROWS_AS(SetSystem({"a"}, {{"S", {0, 0}}}), std::invalid_argument);
}

TEST_SUITE_END();
