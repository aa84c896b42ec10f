#include <doctest.h>

#include <set>

#include "dpf/tableaux.hpp"

using dpf::TwoRowSYT;

TEST_CASE("validate_syt") {
    CHECK(dpf::validate_syt({{1, 3}, {2, 4}}));
    CHECK(dpf::validate_syt({{1, 2}, {3, 4}}));
    CHECK_FALSE(dpf::validate_syt({{2, 3}, {1, 4}}));    // 1 must sit in row 1
    CHECK_FALSE(dpf::validate_syt({{1, 2}, {2, 4}}));    // repeated entry
    CHECK_FALSE(dpf::validate_syt({{1, 4}, {2, 3}}));    // column violation
    CHECK_FALSE(dpf::validate_syt({{1}, {2, 3}}));       // a < b
    CHECK_FALSE(dpf::validate_syt({{1, 2}, {5}}));       // entry out of range
    CHECK(dpf::validate_syt({{1, 2, 3}, {}}));
    CHECK(dpf::validate_syt({{}, {}}));
}

TEST_CASE("enumerate_syt small shapes") {
    auto one = dpf::enumerate_syt(1, 1);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == TwoRowSYT{{1}, {2}});

    CHECK(dpf::enumerate_syt(2, 2).size() == 2);
    CHECK(dpf::enumerate_syt(5, 1).size() == 5);
    CHECK(dpf::enumerate_syt(3, 0).size() == 1);
    CHECK_THROWS_AS(dpf::enumerate_syt(1, 2), std::invalid_argument);
}

TEST_CASE("enumerate_syt is ordered by row2 and valid") {
    auto all = dpf::enumerate_syt(4, 3);
    std::set<TwoRowSYT> seen;
    std::vector<int> prev_row2;
    for (const auto& t : all) {
        CHECK(dpf::validate_syt(t));
        CHECK(seen.insert(t).second);
        if (!prev_row2.empty()) CHECK(prev_row2 < t.row2);
        prev_row2 = t.row2;
    }
}

TEST_CASE("count_syt agrees with enumeration") {
    for (int a = 0; a <= 10; ++a)
        for (int b = 0; b <= a && a + b <= 14; ++b)
            CHECK(dpf::count_syt(a, b) ==
                  static_cast<dpf::Int>(dpf::enumerate_syt(a, b).size()));
}

TEST_CASE("count_syt reference values") {
    CHECK(dpf::count_syt(3, 3) == 5);  // Catalan C_3
    CHECK(dpf::count_syt(7, 0) == 1);
    CHECK(dpf::count_syt(5, 1) == 5);
    // ballot identity: count(a,b) = binom(a+b,a) - binom(a+b,a+1)
    for (int a = 0; a <= 12; ++a)
        for (int b = 0; b <= a; ++b)
            CHECK(dpf::count_syt(a, b) ==
                  dpf::binomial(a + b, a) - dpf::binomial(a + b, a + 1));
}
