#include <doctest.h>

#include <algorithm>
#include <set>

#include "dpf/enumeration.hpp"
#include "dpf/parking.hpp"

using dpf::PreferenceList;

TEST_CASE("preference list validation") {
    CHECK_THROWS_AS(PreferenceList(0, {1}), std::invalid_argument);
    CHECK_THROWS_AS(PreferenceList(3, {}), std::invalid_argument);
    CHECK_THROWS_AS(PreferenceList(3, {0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(PreferenceList(3, {5}), std::invalid_argument);  // > n+1
    CHECK_NOTHROW(PreferenceList(3, {4}));                           // n+1 allowed
}

TEST_CASE("simulate reference outcomes") {
    auto out = dpf::simulate(PreferenceList(9, {3, 5, 5, 6, 9, 9, 10}));
    CHECK(out.positions == std::vector<int>{3, 5, 6, 7, 9, 10, 11});
    CHECK(out.defect == 2);

    out = dpf::simulate(PreferenceList(3, {1, 1, 1}));
    CHECK(out.positions == std::vector<int>{1, 2, 3});
    CHECK(out.defect == 0);

    out = dpf::simulate(PreferenceList(1, {2}));
    CHECK(out.positions == std::vector<int>{2});
    CHECK(out.defect == 1);
}

TEST_CASE("defect closed form") {
    CHECK(dpf::defect(PreferenceList(9, {9, 3, 5, 6, 10, 9, 5})) == 2);
    PreferenceList identity(4, {1, 2, 3, 4});
    CHECK(dpf::defect(identity) == 0);
    PreferenceList seven(5, {1, 1, 2, 3, 5, 5, 6});
    CHECK(dpf::defect(seven) == 2);
    CHECK(dpf::defect(seven) == dpf::simulate(seven).defect);
}

TEST_CASE("defect profile") {
    auto p = dpf::defect_profile(PreferenceList(9, {3, 5, 5, 6, 9, 9, 10}));
    CHECK(p.defect_seq == std::vector<int>{0, 1, 0, 0, 2, 1, 1});
    CHECK(p.defect == 2);

    p = dpf::defect_profile(PreferenceList(6, {1, 1, 3, 6, 6, 6}));
    CHECK(p.defect_seq == std::vector<int>{0, -1, 0, 2, 1, 0});

    p = dpf::defect_profile(PreferenceList(1, {1}));
    CHECK(p.predefect_seq == std::vector<int>{0});
    CHECK(p.defect_seq == std::vector<int>{0});
    CHECK(p.defect == 0);

    // sorts a copy: same profile in any order
    auto q = dpf::defect_profile(PreferenceList(9, {9, 3, 5, 6, 10, 9, 5}));
    CHECK(q.defect_seq == std::vector<int>{0, 1, 0, 0, 2, 1, 1});
}

TEST_CASE("is_parking_function") {
    CHECK(dpf::is_parking_function(PreferenceList(5, {1, 1, 2, 3, 5})));
    CHECK_FALSE(dpf::is_parking_function(PreferenceList(1, {2})));
    CHECK_FALSE(dpf::is_parking_function(PreferenceList(3, {3, 3, 3})));
}

TEST_CASE("decrement and fixed sets") {
    CHECK(dpf::decrement_set(PreferenceList(6, {1, 1, 3, 6, 6, 6})) ==
          std::vector<int>{1, 3, 4});
    CHECK(dpf::decrement_set(PreferenceList(3, {1, 4, 4})) == std::vector<int>{1, 2});
    CHECK(dpf::decrement_set(PreferenceList(4, {1, 2, 3, 4})) ==
          std::vector<int>{1, 2, 3, 4});
    CHECK_THROWS_AS(dpf::decrement_set(PreferenceList(3, {2, 1, 1})),
                    std::invalid_argument);
    CHECK_THROWS_AS(dpf::decrement_set(PreferenceList(4, {1, 2, 3})),
                    std::invalid_argument);

    CHECK(dpf::fixed_set(PreferenceList(5, {1, 1, 2, 3, 5})) == std::vector<int>{1, 5});
    CHECK(dpf::fixed_set(PreferenceList(3, {1, 2, 3})) == std::vector<int>{1, 2, 3});
    CHECK(dpf::fixed_set(PreferenceList(3, {1, 1, 1})) == std::vector<int>{1});
    CHECK_THROWS_AS(dpf::fixed_set(PreferenceList(3, {1, 4, 4})), std::invalid_argument);
}

TEST_CASE("decrement set equals fixed set at defect zero") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& pl : dpf::enumerate_dpf_nondecreasing(n, n, 0))
            CHECK(dpf::decrement_set(pl) == dpf::fixed_set(pl));
}

TEST_CASE("orbit size") {
    CHECK(dpf::orbit_size(PreferenceList(3, {1, 4, 4})) == 3);
    CHECK(dpf::orbit_size(PreferenceList(3, {1, 2, 3})) == 6);
    CHECK(dpf::orbit_size(PreferenceList(3, {1, 1, 1})) == 1);
}

TEST_CASE("orbit size equals direct rearrangement count") {
    for (int m = 1; m <= 6; ++m) {
        dpf::detail::for_each_nondecreasing_tuple(m, 4, [&](const std::vector<int>& t) {
            std::vector<int> perm = t;
            long direct = 0;
            do {
                ++direct;
            } while (std::next_permutation(perm.begin(), perm.end()));
            CHECK(dpf::orbit_size(PreferenceList(3, t)) == direct);
        });
    }
}

TEST_CASE("catalan word") {
    CHECK(dpf::to_catalan_word(PreferenceList(5, {1, 1, 2, 3, 5})) ==
          std::vector<int>{0, 1, 1, 1, 0});
    CHECK(dpf::to_catalan_word(PreferenceList(4, {1, 2, 3, 4})) ==
          std::vector<int>{0, 0, 0, 0});
    CHECK(dpf::to_catalan_word(PreferenceList(3, {1, 1, 1})) == std::vector<int>{0, 1, 2});
    CHECK_THROWS_AS(dpf::to_catalan_word(PreferenceList(3, {1, 4, 4})),
                    std::invalid_argument);
}

TEST_CASE("catalan word property over all parking functions") {
    for (int n = 1; n <= 6; ++n) {
        for (const auto& pl : dpf::enumerate_dpf_nondecreasing(n, n, 0)) {
            auto w = dpf::to_catalan_word(pl);
            CHECK(w.front() == 0);
            for (std::size_t i = 0; i < w.size(); ++i) {
                CHECK(w[i] >= 0);
                if (i > 0) CHECK(w[i] - w[i - 1] <= 1);
            }
        }
    }
}

TEST_CASE("oracle equivalence and bounds, small exhaustive") {
    for (int m = 1; m <= 4; ++m) {
        for (int n = 1; n <= 4; ++n) {
            dpf::detail::for_each_tuple(m, n + 1, [&](const std::vector<int>& t) {
                PreferenceList pl(n, t);
                int closed = dpf::defect(pl);
                CHECK(closed == dpf::simulate(pl).defect);
                CHECK(closed >= std::max(m - n, 0));
                CHECK(closed <= m);
                bool all_overflow = std::all_of(t.begin(), t.end(),
                                                [&](int v) { return v == n + 1; });
                CHECK((closed == m) == all_overflow);
            });
        }
    }
}
