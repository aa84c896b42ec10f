#include "dpf/verification.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "dpf/bijections.hpp"
#include "dpf/enumeration.hpp"
#include "dpf/kreweras.hpp"
#include "dpf/lattice_path.hpp"
#include "dpf/parking.hpp"
#include "dpf/partition.hpp"
#include "dpf/tableaux.hpp"

namespace dpf {

namespace {

Int catalan(int n) { return binomial(2 * n, n) / (n + 1); }

std::vector<PreferenceList> filter_last_at_most(std::vector<PreferenceList> lists, int k) {
    std::erase_if(lists, [&](const PreferenceList& pl) { return pl.prefs().back() > k; });
    return lists;
}

// Collects failures; a criterion passes when none were recorded.
class Check {
public:
    void fail(const std::string& what) {
        ++failures_;
        if (first_.empty()) first_ = what;
    }
    void expect(bool cond, const std::string& what) {
        if (!cond) fail(what);
    }
    bool ok() const { return failures_ == 0; }
    std::string summary(const std::string& on_pass) const {
        if (ok()) return on_pass;
        std::ostringstream out;
        out << failures_ << " failure(s); first: " << first_;
        return out.str();
    }

private:
    long failures_ = 0;
    std::string first_;
};

std::string plural(long n, const char* noun) {
    return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

// --- criterion bodies ------------------------------------------------------

CriterionResult criterion_oracle_equivalence(int max_mn) {
    Check c;
    long checked = 0;
    for (int m = 1; m <= max_mn; ++m)
        for (int n = 1; n <= max_mn; ++n)
            detail::for_each_tuple(m, n + 1, [&](const std::vector<int>& t) {
                ++checked;
                PreferenceList pl(n, t);
                if (defect(pl) != simulate(pl).defect)
                    c.fail("defect mismatch at n=" + std::to_string(n) + " prefs=" +
                           std::to_string(t[0]) + "...");
            });
    return {1, "oracle-equivalence", c.ok(),
            c.summary("closed form == simulation on " + plural(checked, "list")), 0};
}

CriterionResult criterion_sm_invariance(int max_mn) {
    Check c;
    long checked = 0;
    std::mt19937 rng(20250808);
    for (int m = 1; m <= max_mn; ++m) {
        for (int n = 1; n <= max_mn; ++n) {
            if (m <= 4) {
                // full orbits
                detail::for_each_nondecreasing_tuple(m, n + 1, [&](const std::vector<int>& t) {
                    int expected = simulate(PreferenceList(n, t)).defect;
                    std::vector<int> perm = t;
                    do {
                        ++checked;
                        if (simulate(PreferenceList(n, perm)).defect != expected)
                            c.fail("orbit defect varies, n=" + std::to_string(n));
                    } while (std::next_permutation(perm.begin(), perm.end()));
                });
            } else {
                // sorted representatives times sampled permutations
                detail::for_each_nondecreasing_tuple(m, n + 1, [&](const std::vector<int>& t) {
                    int expected = simulate(PreferenceList(n, t)).defect;
                    std::vector<int> perm = t;
                    for (int s = 0; s < 20; ++s) {
                        std::shuffle(perm.begin(), perm.end(), rng);
                        ++checked;
                        if (simulate(PreferenceList(n, perm)).defect != expected)
                            c.fail("sampled defect varies, n=" + std::to_string(n));
                    }
                });
            }
        }
    }
    return {2, "symmetric-group-invariance", c.ok(),
            c.summary("defect constant on " + plural(checked, "rearrangement")), 0};
}

CriterionResult criterion_paper_values() {
    Check c;
    PreferenceList running(9, {3, 5, 5, 6, 9, 9, 10});
    c.expect(defect(running) == 2, "defect((3,5,5,6,9,9,10), n=9) != 2");
    c.expect(defect_profile(running).defect_seq == std::vector<int>({0, 1, 0, 0, 2, 1, 1}),
             "delta of (3,5,5,6,9,9,10) wrong");
    c.expect(decrement_set(PreferenceList(6, {1, 1, 3, 6, 6, 6})) ==
                 std::vector<int>({1, 3, 4}),
             "D((1,1,3,6,6,6)) != {1,3,4}");
    c.expect(fixed_set(PreferenceList(5, {1, 1, 2, 3, 5})) == std::vector<int>({1, 5}),
             "F((1,1,2,3,5)) != {1,5}");
    return {3, "paper-values", c.ok(), c.summary("reference statistics reproduced"), 0};
}

CriterionResult criterion_tables() {
    Check c;
    // Defect-2 lists on three cars and spots, with their delta and D.
    const std::vector<std::vector<int>> lists = {
        {1, 4, 4}, {2, 4, 4}, {3, 3, 3}, {3, 3, 4}, {3, 4, 4}};
    const std::vector<std::vector<int>> deltas = {
        {0, 2, 1}, {1, 2, 1}, {2, 1, 0}, {2, 1, 1}, {2, 2, 1}};
    const std::vector<std::vector<int>> dsets = {{1, 2}, {1}, {1}, {1}, {1}};
    const std::vector<std::pair<std::vector<int>, int>> phi_images = {
        {{1, 3, 3}, 2}, {{1, 3, 3}, 1}, {{2, 2, 2}, 1}, {{2, 2, 3}, 1}, {{2, 3, 3}, 1}};

    auto enumerated = enumerate_dpf_nondecreasing(3, 3, 2);
    c.expect(enumerated.size() == lists.size(), "defect-2 table size wrong");
    for (std::size_t i = 0; i < lists.size() && i < enumerated.size(); ++i) {
        c.expect(enumerated[i].prefs() == lists[i], "table list order differs");
        PreferenceList pl(3, lists[i]);
        c.expect(defect_profile(pl).defect_seq == deltas[i], "table delta differs");
        c.expect(decrement_set(pl) == dsets[i], "table decrement set differs");
        DecrementPair img = phi(pl);
        c.expect(img.list.prefs() == phi_images[i].first && img.index == phi_images[i].second,
                 "phi table image differs");
    }

    // psi on the nine nondecreasing parking functions of length 4 with
    // last entry at most 3.
    const std::vector<std::pair<std::vector<int>, std::pair<std::vector<int>, int>>> psi_rows = {
        {{1, 1, 1, 1}, {{1, 1, 1}, 1}}, {{1, 1, 1, 2}, {{1, 1, 2}, 1}},
        {{1, 1, 1, 3}, {{1, 1, 3}, 1}}, {{1, 1, 2, 2}, {{1, 2, 2}, 1}},
        {{1, 1, 2, 3}, {{1, 2, 3}, 1}}, {{1, 1, 3, 3}, {{1, 1, 3}, 3}},
        {{1, 2, 2, 2}, {{1, 2, 2}, 2}}, {{1, 2, 2, 3}, {{1, 2, 3}, 2}},
        {{1, 2, 3, 3}, {{1, 2, 3}, 3}}};
    auto domain = filter_last_at_most(enumerate_dpf_nondecreasing(4, 4, 0), 3);
    c.expect(domain.size() == psi_rows.size(), "psi table domain size wrong");
    for (std::size_t i = 0; i < psi_rows.size() && i < domain.size(); ++i) {
        c.expect(domain[i].prefs() == psi_rows[i].first, "psi table row order differs");
        FixedPair img = psi(domain[i]);
        c.expect(img.list.prefs() == psi_rows[i].second.first &&
                     img.index == psi_rows[i].second.second,
                 "psi table image differs");
    }
    return {4, "table-reproduction", c.ok(), c.summary("all three tables reproduced"), 0};
}

CriterionResult criterion_rho_chain() {
    Check c;
    RhoTrace trace = rho_trace(PreferenceList(6, {1, 1, 3, 5, 7, 7}), 7);
    c.expect(trace.indices == std::vector<int>({4, 5}), "phi indices are not (4, 5)");
    c.expect(trace.phi_stages.size() == 2 &&
                 trace.phi_stages[0].prefs() == std::vector<int>({1, 1, 3, 4, 6, 6}) &&
                 trace.phi_stages[1].prefs() == std::vector<int>({1, 1, 3, 4, 5, 5}),
             "phi stages differ from the diagram");
    c.expect(trace.psi_stages.size() == 2 &&
                 trace.psi_stages[0].prefs() == std::vector<int>({1, 1, 3, 4, 5, 5, 5}) &&
                 trace.psi_stages[1].prefs() == std::vector<int>({1, 1, 3, 4, 4, 5, 5, 5}),
             "psi stages differ from the diagram");
    return {5, "rho-chain", c.ok(), c.summary("chain (i=4, i=5) reproduced exactly"), 0};
}

CriterionResult criterion_bijection_suite(int max_n) {
    Check c;
    long maps = 0;

    // phi: DPF_up(n,n,d)(x_n <= k) <-> N_{n,d-1}(x_n <= k-1)
    for (int n = 1; n <= max_n; ++n) {
        for (int d = 1; d <= std::min(3, n); ++d) {
            auto all_domain = enumerate_dpf_nondecreasing(n, n, d);
            auto all_image = enumerate_dpf_nondecreasing(n, n, d - 1);
            for (int k = 1; k <= n + 1; ++k) {
                std::set<DecrementPair> images;
                for (const auto& pl : filter_last_at_most(all_domain, k)) {
                    ++maps;
                    DecrementPair p = phi(pl);
                    c.expect(defect(p.list) == d - 1, "phi image defect wrong");
                    c.expect(p.list.prefs().back() <= k - 1, "phi image exceeds k-1");
                    auto dec = decrement_set(p.list);
                    c.expect(std::count(dec.begin(), dec.end(), p.index) == 1,
                             "phi index outside decrement set");
                    c.expect(phi_inv(p) == pl, "phi_inv(phi(x)) != x");
                    // decrement-set transport
                    std::vector<int> expected;
                    for (int j : dec)
                        if (j <= p.index) expected.push_back(j);
                    c.expect(decrement_set(pl) == expected, "phi decrement transport fails");
                    images.insert(p);
                }
                std::size_t codomain = 0;
                for (const auto& pl : filter_last_at_most(all_image, k - 1)) {
                    for (int i : decrement_set(pl)) {
                        ++codomain;
                        DecrementPair pair{pl, i};
                        c.expect(phi(phi_inv(pair)) == pair, "phi(phi_inv(p)) != p");
                    }
                }
                c.expect(images.size() == codomain, "phi not onto its codomain");
            }
        }
    }

    // psi: PF_up(N,N)(x_N <= k) <-> M_{N-1}(x_{N-1} <= k)
    for (int N = 2; N <= max_n + 1; ++N) {
        auto domain_all = enumerate_dpf_nondecreasing(N, N, 0);
        auto image_all = enumerate_dpf_nondecreasing(N - 1, N - 1, 0);
        for (int k = 1; k <= N - 1; ++k) {
            std::set<FixedPair> images;
            for (const auto& pl : filter_last_at_most(domain_all, k)) {
                ++maps;
                FixedPair p = psi(pl);
                c.expect(p.list.prefs().back() <= k, "psi image exceeds k");
                auto fixed = fixed_set(p.list);
                c.expect(std::count(fixed.begin(), fixed.end(), p.index) == 1,
                         "psi index outside fixed set");
                c.expect(psi_inv(p) == pl, "psi_inv(psi(x)) != x");
                std::vector<int> expected;
                for (int j : fixed)
                    if (j <= p.index) expected.push_back(j);
                c.expect(fixed_set(pl) == expected, "psi fixed transport fails");
                images.insert(p);
            }
            std::size_t codomain = 0;
            for (const auto& pl : filter_last_at_most(image_all, k)) {
                for (int i : fixed_set(pl)) {
                    ++codomain;
                    FixedPair pair{pl, i};
                    c.expect(psi(psi_inv(pair)) == pair, "psi(psi_inv(p)) != p");
                }
            }
            c.expect(images.size() == codomain, "psi not onto its codomain");
        }
    }

    // rho: DPF_up(n,n,d)(x_n <= k) <-> PF_up(n+d,n+d)(x_{n+d} <= k-d)
    for (int n = 1; n <= max_n; ++n) {
        for (int d = 0; d <= std::min(3, n); ++d) {
            auto domain_all = enumerate_dpf_nondecreasing(n, n, d);
            auto codomain_all = enumerate_dpf_nondecreasing(n + d, n + d, 0);
            for (int k = 1; k <= n + 1; ++k) {
                std::set<PreferenceList> images;
                auto domain = filter_last_at_most(domain_all, k);
                for (const auto& pl : domain) {
                    ++maps;
                    PreferenceList y = rho(pl, k);
                    c.expect(y.cars() == n + d && defect(y) == 0, "rho image not a PF");
                    c.expect(y.prefs().back() <= k - d, "rho image exceeds k-d");
                    c.expect(decrement_set(pl) == fixed_set(y), "D(x) != F(rho(x))");
                    c.expect(rho_inv(y, n, d, k) == pl, "rho_inv(rho(x)) != x");
                    images.insert(y);
                }
                std::size_t codomain = filter_last_at_most(codomain_all, k - d).size();
                c.expect(images.size() == domain.size(), "rho not injective");
                c.expect(images.size() == codomain, "rho not onto its codomain");
            }
        }
    }
    return {6, "bijection-suite", c.ok(),
            c.summary("phi/psi/rho bijective with transport on " + plural(maps, "map")), 0};
}

CriterionResult criterion_conjugation(int max_mn) {
    Check c;
    long checked = 0;
    for (int m = 1; m <= max_mn; ++m)
        for (int n = 1; n <= max_mn; ++n)
            detail::for_each_nondecreasing_tuple(m, n + 1, [&](const std::vector<int>& t) {
                ++checked;
                PreferenceList pl(n, t);
                PreferenceList bar = conjugate_prefs(pl);
                c.expect(bar.cars() == n && bar.spots() == m, "conjugate frame wrong");
                c.expect(defect(bar) == defect(pl) + (n - m), "conjugate defect shift wrong");
                c.expect(conjugate_prefs(bar) == pl, "conjugation not an involution");
            });
    c.expect(conjugate_prefs(PreferenceList(5, {1, 1, 2, 3, 5, 5, 6})).prefs() ==
                 std::vector<int>({2, 4, 4, 5, 6}),
             "reference conjugate of (1,1,2,3,5,5,6) wrong");
    return {7, "conjugation", c.ok(),
            c.summary("involution and defect shift on " + plural(checked, "list")), 0};
}

CriterionResult criterion_tableau_cardinality(int max_count_mn, int max_bij_mn) {
    Check c;
    long shapes = 0;
    for (int m = 1; m <= max_count_mn; ++m) {
        for (int n = 1; n <= max_count_mn; ++n) {
            for (int d = std::max(m - n, 0); d <= m; ++d) {
                ++shapes;
                Int count = static_cast<Int>(enumerate_dpf_nondecreasing(m, n, d).size());
                c.expect(count == count_syt(n + d, m - d), "enumeration != hook count");
                c.expect(count == count_nondecreasing(m, n, d).formula_value,
                         "enumeration != closed form");
            }
        }
    }
    long mapped = 0;
    for (int m = 1; m <= max_bij_mn; ++m) {
        for (int n = 1; n <= max_bij_mn; ++n) {
            for (int d = std::max(m - n, 0); d <= m; ++d) {
                std::set<TwoRowSYT> images;
                for (const auto& pl : enumerate_dpf_nondecreasing(m, n, d)) {
                    ++mapped;
                    TwoRowSYT t = to_tableau(pl);
                    c.expect(validate_syt(t), "to_tableau image invalid");
                    c.expect(static_cast<int>(t.row1.size()) == n + d &&
                                 static_cast<int>(t.row2.size()) == m - d,
                             "to_tableau image shape wrong");
                    c.expect(from_tableau(t, m, n) == pl, "from_tableau round trip fails");
                    images.insert(t);
                }
                c.expect(static_cast<Int>(images.size()) == count_syt(n + d, m - d),
                         "to_tableau not bijective onto SYT(n+d, m-d)");
            }
        }
    }
    return {8, "tableau-cardinality", c.ok(),
            c.summary(plural(shapes, "shape") + " counted, " + plural(mapped, "list") +
                      " mapped bijectively"),
            0};
}

CriterionResult criterion_catalan() {
    Check c;
    for (int n = 1; n <= 10; ++n)
        c.expect(count_nondecreasing(n, n, 0).formula_value == catalan(n),
                 "count(n,n,0) != Catalan at n=" + std::to_string(n));
    return {9, "catalan-specialization", c.ok(), c.summary("C_1..C_10 reproduced"), 0};
}

CriterionResult criterion_kreweras_values(int max_m) {
    Check c;
    Partition two_one({2, 1});
    c.expect(defective_kreweras(0, 3, two_one) == 3, "Krew_{0,3}(2,1) != 3");
    c.expect(defective_kreweras(1, 3, two_one) == 5, "Krew_{1,3}(2,1) != 5");
    c.expect(defective_kreweras(2, 3, two_one) == 4, "Krew_{2,3}(2,1) != 4");
    for (int m = 1; m <= max_m; ++m) {
        Int total = 0;
        for (const Partition& lam : partitions_of(m)) {
            Int kr = defective_kreweras(0, m, lam);
            c.expect(kr == classical_kreweras(lam), "Krew_{0,m} != classical");
            total = checked_add(total, kr);
        }
        c.expect(total == catalan(m), "sum of Kreweras numbers != Catalan");
    }
    return {10, "kreweras-values", c.ok(),
            c.summary("reference values and classical specialization hold"), 0};
}

CriterionResult criterion_kreweras_dual(int max_mn) {
    Check c;
    long compared = 0;
    for (int m = 1; m <= max_mn; ++m) {
        auto lambdas = partitions_of(m);
        for (int n = 1; n <= max_mn; ++n) {
            // One sweep over all (n,m)-paths classifies them by (dip, runs).
            std::map<std::pair<int, Partition>, Int> via_paths;
            std::vector<int> north_pos(m);
            for (int j = 0; j < m; ++j) north_pos[j] = j;
            const int total = m + n;
            for (;;) {
                std::string word(total, 'E');
                for (int p : north_pos) word[p] = 'N';
                LatticePath path(word);
                ++via_paths[{dip(path), runs(path)}];
                int j = m - 1;
                while (j >= 0 && north_pos[j] == total - (m - j)) --j;
                if (j < 0) break;
                ++north_pos[j];
                for (int l = j + 1; l < m; ++l) north_pos[l] = north_pos[l - 1] + 1;
            }
            for (const Partition& lam : lambdas) {
                for (int d = 0; d <= n; ++d) {
                    ++compared;
                    auto it = via_paths.find({d, lam});
                    Int path_count = it == via_paths.end() ? 0 : it->second;
                    c.expect(defective_kreweras(d, n, lam) == path_count,
                             "content count != path count");
                }
            }
        }
    }
    return {11, "kreweras-dual-method", c.ok(),
            c.summary("two routes agree on " + plural(compared, "case")), 0};
}

CriterionResult criterion_frobenius(int max_mn) {
    Check c;
    for (int m = 1; m <= max_mn; ++m) {
        for (int n = 1; n <= max_mn; ++n) {
            GradedFrobenius direct = frobenius_char(m, n);
            GradedFrobenius assembled = frobenius_from_kreweras(m, n);
            c.expect(direct == assembled, "frobenius_char != frobenius_from_kreweras");

            Int t1_terms = 0;
            Int t1_weighted = 0;
            Int t0_weighted = 0;
            for (const auto& [lam, poly] : direct.terms) {
                Int orbit = factorial(m);
                for (int part : lam.parts()) orbit /= factorial(part);
                t1_terms = checked_add(t1_terms, poly_eval_at_one(poly));
                t1_weighted = checked_add(t1_weighted,
                                          checked_mul(poly_eval_at_one(poly), orbit));
                if (!poly.empty())
                    t0_weighted = checked_add(t0_weighted, checked_mul(poly[0], orbit));
            }
            c.expect(t1_terms == binomial(m + n, n), "t=1 composition count wrong");
            c.expect(t1_weighted == ipow(n + 1, m), "t=1 orbit-weighted total wrong");
            if (m <= n)
                c.expect(t0_weighted == count_pf(m, n), "t=0 layer != parking-function count");
        }
    }
    return {12, "frobenius-consistency", c.ok(),
            c.summary("dual assembly and t=0/t=1 specializations hold"), 0};
}

CriterionResult criterion_vanishing(int max_mn) {
    Check c;
    long reports = 0;
    for (int m = 1; m <= max_mn; ++m)
        for (const Partition& lam : partitions_of(m))
            for (int n = 1; n <= max_mn; ++n) {
                ++reports;
                c.expect(check_vanishing(lam, n).pass, "vanishing bound violated");
            }
    return {13, "vanishing", c.ok(), c.summary(plural(reports, "report") + " all pass"), 0};
}

CriterionResult criterion_conjecture(int max_m, int max_d, int n_extra) {
    ConjectureReport report = check_conjecture(max_m, max_d, n_extra);
    std::string detail = std::to_string(report.cases_checked) + " cases, " +
                         std::to_string(report.mismatches.size()) + " mismatches";
    if (!report.clean())
        detail += " (counterexample certificate available via check-conjecture)";
    // Completion with a machine-readable report is the requirement; a
    // mismatch would be reportable evidence, not a failure of this build.
    return {14, "conjecture-evidence", true, detail, 0};
}

CriterionResult criterion_orbit_sum(int max_mn) {
    Check c;
    for (int m = 1; m <= max_mn; ++m) {
        for (int n = 1; n <= max_mn; ++n) {
            Int across_defects = 0;
            for (int d = 0; d <= m; ++d) {
                CountReport report = count_dpf_orbit_sum(m, n, d, true);
                c.expect(report.consistent(), "orbit-sum != brute-force count");
                across_defects = checked_add(across_defects, report.formula_value);
            }
            c.expect(across_defects == ipow(n + 1, m), "defect totals != (n+1)^m");
        }
    }
    return {15, "orbit-sum-count", c.ok(),
            c.summary("multiset-permutation counts match brute force"), 0};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(VerifyScale scale) {
    const bool full = scale == VerifyScale::kFull;
    using Clock = std::chrono::steady_clock;
    std::vector<CriterionResult> results;
    auto run = [&](auto&& fn) {
        auto start = Clock::now();
        CriterionResult r = fn();
        r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
        results.push_back(std::move(r));
    };
    run([&] { return criterion_oracle_equivalence(full ? 5 : 4); });
    run([&] { return criterion_sm_invariance(full ? 5 : 4); });
    run([&] { return criterion_paper_values(); });
    run([&] { return criterion_tables(); });
    run([&] { return criterion_rho_chain(); });
    run([&] { return criterion_bijection_suite(full ? 5 : 4); });
    run([&] { return criterion_conjugation(full ? 6 : 4); });
    run([&] { return criterion_tableau_cardinality(full ? 7 : 5, full ? 6 : 4); });
    run([&] { return criterion_catalan(); });
    run([&] { return criterion_kreweras_values(full ? 8 : 6); });
    run([&] { return criterion_kreweras_dual(full ? 7 : 5); });
    run([&] { return criterion_frobenius(full ? 6 : 4); });
    run([&] { return criterion_vanishing(full ? 7 : 5); });
    run([&] {
        return full ? criterion_conjecture(6, 3, 2) : criterion_conjecture(4, 2, 1);
    });
    run([&] { return criterion_orbit_sum(full ? 5 : 4); });
    return results;
}

std::string format_criterion_line(const CriterionResult& r, bool with_seconds) {
    std::ostringstream out;
    out << "[" << (r.id < 10 ? " " : "") << r.id << "] "
        << (r.pass ? "PASS" : "FAIL") << "  " << r.name << ": " << r.detail;
    if (with_seconds) {
        char buf[32];
        std::snprintf(buf, sizeof(buf), " (%.2fs)", r.seconds);
        out << buf;
    }
    return out.str();
}

}  // namespace dpf
