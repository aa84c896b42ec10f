#include <doctest.h>

#include <map>

#include "dpf/enumeration.hpp"
#include "dpf/kreweras.hpp"
#include "dpf/lattice_path.hpp"
#include "dpf/parking.hpp"

using dpf::Int;
using dpf::Partition;

namespace {

Int catalan(int n) { return dpf::binomial(2 * n, n) / (n + 1); }

// Independent route: count content-lam tuples with the given statistic by
// filtering the full nondecreasing enumeration.
Int brute_kreweras(int d, int n, const Partition& lam) {
    Int count = 0;
    dpf::detail::for_each_nondecreasing_tuple(lam.sum(), n + 1, [&](const std::vector<int>& t) {
        std::vector<int> mult(n + 2, 0);
        for (int v : t) ++mult[v];
        std::vector<int> content;
        for (int v = 1; v <= n + 1; ++v)
            if (mult[v]) content.push_back(mult[v]);
        std::sort(content.begin(), content.end(), std::greater<>());
        if (Partition(content) != lam) return;
        if (std::max(dpf::detail::predefect_sorted(t), 0) == d) ++count;
    });
    return count;
}

}  // namespace

TEST_CASE("partitions_of") {
    auto p3 = dpf::partitions_of(3);
    REQUIRE(p3.size() == 3);
    CHECK(p3[0].parts() == std::vector<int>{3});
    CHECK(p3[1].parts() == std::vector<int>{2, 1});
    CHECK(p3[2].parts() == std::vector<int>{1, 1, 1});

    CHECK(dpf::partitions_of(0).size() == 1);
    CHECK(dpf::partitions_of(0)[0].length() == 0);
    CHECK(dpf::partitions_of(6).size() == 11);

    // reverse-lexicographic order
    auto p6 = dpf::partitions_of(6);
    for (std::size_t i = 1; i < p6.size(); ++i) CHECK(p6[i - 1].parts() > p6[i].parts());
}

TEST_CASE("weak compositions") {
    long count = 0;
    dpf::for_each_weak_composition(3, 4, [&](const std::vector<int>& alpha) {
        ++count;
        int sum = 0;
        for (int a : alpha) sum += a;
        CHECK(sum == 3);
        CHECK(alpha.size() == 4);
    });
    CHECK(count == dpf::count_weak_compositions(3, 4));
    CHECK(dpf::count_weak_compositions(3, 4) == 20);
}

TEST_CASE("classical Kreweras numbers") {
    CHECK(dpf::classical_kreweras(Partition({2, 1})) == 3);
    CHECK(dpf::classical_kreweras(Partition({1, 1, 1})) == 1);  // forced (1,2,3)
    for (int m = 1; m <= 8; ++m) {
        CHECK(dpf::classical_kreweras(Partition({m})) == 1);
        Int total = 0;
        for (const Partition& lam : dpf::partitions_of(m))
            total = dpf::checked_add(total, dpf::classical_kreweras(lam));
        CHECK(total == catalan(m));
    }
}

TEST_CASE("defective Kreweras reference values") {
    Partition lam({2, 1});
    CHECK(dpf::defective_kreweras(0, 3, lam) == 3);
    CHECK(dpf::defective_kreweras(1, 3, lam) == 5);
    CHECK(dpf::defective_kreweras(2, 3, lam) == 4);
    CHECK(dpf::defective_kreweras(3, 3, lam) == 0);
    // longer than n+1 parts: no room
    CHECK(dpf::defective_kreweras(0, 1, Partition({1, 1, 1})) == 0);
}

TEST_CASE("defective Kreweras agrees with direct filtering") {
    for (int m = 1; m <= 5; ++m)
        for (const Partition& lam : dpf::partitions_of(m))
            for (int n = 1; n <= 5; ++n)
                for (int d = 0; d <= n; ++d)
                    CHECK(dpf::defective_kreweras(d, n, lam) == brute_kreweras(d, n, lam));
}

TEST_CASE("classical specialization at d = 0, n = m") {
    for (int m = 1; m <= 8; ++m)
        for (const Partition& lam : dpf::partitions_of(m))
            CHECK(dpf::defective_kreweras(0, m, lam) == dpf::classical_kreweras(lam));
}

TEST_CASE("path route matches the content route") {
    Partition fig({2, 1, 1, 1});
    CHECK(dpf::defective_kreweras_via_paths(2, 7, fig) ==
          dpf::defective_kreweras(2, 7, fig));
    // the reference path has dip 2 and runs (2,1,1,1)
    dpf::LatticePath w("ENEENNENENEE");
    CHECK(dpf::dip(w) == 2);
    CHECK(dpf::runs(w) == fig);

    for (int m = 1; m <= 5; ++m)
        for (const Partition& lam : dpf::partitions_of(m))
            for (int n = 1; n <= 5; ++n)
                for (int d = 0; d <= n; ++d)
                    CHECK(dpf::defective_kreweras(d, n, lam) ==
                          dpf::defective_kreweras_via_paths(d, n, lam));
}

TEST_CASE("frobenius_char smallest case") {
    dpf::GradedFrobenius ch = dpf::frobenius_char(1, 1);
    REQUIRE(ch.terms.size() == 1);
    CHECK(ch.coefficient(Partition({1})) == dpf::Poly{1, 1});  // 1 + t
}

TEST_CASE("frobenius assembly equivalence") {
    for (int m = 1; m <= 5; ++m)
        for (int n = 1; n <= 5; ++n)
            CHECK(dpf::frobenius_char(m, n) == dpf::frobenius_from_kreweras(m, n));
}

TEST_CASE("frobenius specializations") {
    for (int m = 1; m <= 5; ++m) {
        for (int n = 1; n <= 5; ++n) {
            dpf::GradedFrobenius ch = dpf::frobenius_char(m, n);
            Int compositions = 0;
            Int weighted = 0;
            Int t0_weighted = 0;
            for (const auto& [lam, poly] : ch.terms) {
                Int orbit = dpf::factorial(m);
                for (int part : lam.parts()) orbit /= dpf::factorial(part);
                compositions = dpf::checked_add(compositions, dpf::poly_eval_at_one(poly));
                weighted = dpf::checked_add(weighted,
                                            dpf::checked_mul(dpf::poly_eval_at_one(poly), orbit));
                if (!poly.empty())
                    t0_weighted = dpf::checked_add(t0_weighted,
                                                   dpf::checked_mul(poly[0], orbit));
            }
            CHECK(compositions == dpf::binomial(m + n, n));
            CHECK(weighted == dpf::ipow(n + 1, m));
            if (m <= n) CHECK(t0_weighted == dpf::count_pf(m, n));
        }
    }
}

TEST_CASE("polynomial degree bound") {
    for (int m = 1; m <= 6; ++m)
        for (int n = 1; n <= 6; ++n) {
            dpf::GradedFrobenius ch = dpf::frobenius_char(m, n);
            for (const auto& [lam, poly] : ch.terms) {
                int bound = m - lam.length() + 1 + std::max(m - n, 0);
                CHECK(static_cast<int>(poly.size()) - 1 <= bound);
            }
        }
}

TEST_CASE("vanishing checks") {
    CHECK(dpf::check_vanishing(Partition({1, 1, 1}), 1).pass);
    CHECK(dpf::check_vanishing(Partition({2, 1}), 3).pass);
    CHECK(dpf::defective_kreweras(3, 3, Partition({2, 1})) == 0);
    CHECK(dpf::defective_kreweras(2, 3, Partition({2, 1})) == 4);  // bound is tight

    for (int m = 1; m <= 6; ++m)
        for (const Partition& lam : dpf::partitions_of(m))
            for (int n = 1; n <= 6; ++n)
                CHECK(dpf::check_vanishing(lam, n).pass);
}

TEST_CASE("conjecture formula") {
    // d = 0 reduces to the classical Kreweras number
    for (int m = 1; m <= 6; ++m)
        for (const Partition& lam : dpf::partitions_of(m))
            CHECK(dpf::conjecture_formula(0, m, lam) == dpf::classical_kreweras(lam));

    // d = 1, lambda = (1): hand value 1, for any n >= 1
    CHECK(dpf::conjecture_formula(1, 1, Partition({1})) == 1);
    CHECK(dpf::defective_kreweras(1, 1, Partition({1})) == 1);

    CHECK(dpf::conjecture_formula(2, 5, Partition({2, 1})) ==
          dpf::defective_kreweras(2, 5, Partition({2, 1})));

    CHECK_THROWS_AS(dpf::conjecture_formula(2, 2, Partition({2, 1})),
                    std::invalid_argument);  // n below d + m - 1
}

TEST_CASE("conjecture sweep completes clean at desk scale") {
    dpf::ConjectureReport report = dpf::check_conjecture(3, 2, 1);
    CHECK(report.cases_checked > 0);
    CHECK(report.clean());

    dpf::ConjectureReport empty = dpf::check_conjecture(1, 0, 0);
    CHECK(empty.cases_checked <= 1);

    // sharded run returns identical results
    dpf::ConjectureReport sharded = dpf::check_conjecture(3, 2, 1, 4);
    CHECK(sharded.cases_checked == report.cases_checked);
    CHECK(sharded.mismatches.size() == report.mismatches.size());
}
