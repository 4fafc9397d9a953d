#include "doctest.h"

#include <string>

#include "lindiag/gen.hpp"
#include "lindiag/io.hpp"
#include "lindiag/rng.hpp"

using namespace lindiag;

TEST_SUITE_BEGIN("io");

TEST_CASE("minimal set-system JSON") {
    const auto s = parse_set_system_json(
        R"({"elements":["a"],"sets":[{"name":"S","members":["a"]}]})");
    CHECK(from_set_system(s) == BinaryMatrix::from_rows({"1"}));
}

TEST_CASE("JSON rejects unknown keys and bad references") {
    CHECK_THROWS_WITH_AS(parse_set_system_json(R"({"elements":[],"sets":[],"extra":1})"),
                         doctest::Contains("unknown key"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_set_system_json(R"({"elements":["a"],"sets":[{"name":"S","members":["b"]}]})"),
        doctest::Contains("unknown element"), ParseError);
    CHECK_THROWS_WITH_AS(parse_set_system_json(R"({"elements":["a","a"],"sets":[]})"),
                         doctest::Contains("duplicate element"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_set_system_json(
            R"({"elements":["a"],"sets":[{"name":"S","members":[]},{"name":"S","members":[]}]})"),
        doctest::Contains("duplicate set"), ParseError);
    CHECK_THROWS_WITH_AS(
        parse_set_system_json(
            R"({"elements":["a"],"sets":[{"name":"S","members":["a","a"]}]})"),
        doctest::Contains("listed twice"), ParseError);
    CHECK_THROWS_AS(parse_set_system_json("{"), ParseError);
    CHECK_THROWS_AS(parse_set_system_json("[1,2]"), ParseError);
}

TEST_CASE("set-system JSON round trip") {
    Rng rng(3001);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = rng.next_int(1, 8);
        const int m = rng.next_int(0, 6);
        std::vector<std::string> elements;
        for (int j = 0; j < n; ++j) elements.push_back("e" + std::to_string(j));
        std::vector<SetEntry> sets;
        for (int i = 0; i < m; ++i) {
            SetEntry e;
            e.name = "S" + std::to_string(i);
            for (int j = 0; j < n; ++j) {
                if (rng.next_bool(0.5)) e.members.push_back(j);
            }
            sets.push_back(std::move(e));
        }
        const SetSystem s(elements, sets);
        const std::string text = serialize_set_system_json(s);
        CHECK(parse_set_system_json(text) == s);
        CHECK(serialize_set_system_json(parse_set_system_json(text)) == text);
    }
}

TEST_CASE("matrix text parsing") {
    CHECK(parse_matrix_text("101\n110\n") == BinaryMatrix::from_rows({"101", "110"}));
    CHECK(parse_matrix_text("101\n110") == BinaryMatrix::from_rows({"101", "110"}));
    const auto empty = parse_matrix_text("");
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 0);
}

TEST_CASE("matrix text errors carry line context") {
    CHECK_THROWS_WITH_AS(parse_matrix_text("101\n11\n"), doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_WITH_AS(parse_matrix_text("10x\n"), doctest::Contains("column 3"), ParseError);
}

TEST_CASE("matrix text round trip") {
    Rng rng(3002);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a =
            random_matrix(rng.next_int(1, 8), rng.next_int(1, 80), rng.next_unit(), rng.next_u64());
        CHECK(parse_matrix_text(serialize_matrix_text(a)) == a);
    }
}

TEST_SUITE_END();
