// dpf: command-line surface over the defective parking function library.
// Exit codes: 0 success, 1 invalid input, 2 internal invariant violation,
// 3 check-conjecture found a mismatch.

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dpf/io.hpp"
#include "dpf/verification.hpp"

namespace {

using dpf::Int;
using dpf::json;

struct ConjectureMismatchFound {};

std::string g_format = "text";

bool json_mode() { return g_format == "json"; }

void emit(const json& j, const std::string& text) {
    if (json_mode())
        std::cout << j.dump() << "\n";
    else
        std::cout << text << "\n";
}

Int max_cells() {
    const char* env = std::getenv("DPF_MAX_CELLS");
    if (!env) return 100'000'000;
    try {
        return std::stoll(env);
    } catch (const std::exception&) {
        throw std::invalid_argument("DPF_MAX_CELLS is not an integer");
    }
}

// Guards exhaustive sweeps; an estimate that itself overflows is over any cap.
void require_cells(const std::function<Int()>& estimate) {
    Int cap = max_cells();
    Int cells;
    try {
        cells = estimate();
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("enumeration space exceeds DPF_MAX_CELLS");
    }
    if (cells > cap)
        throw std::invalid_argument("enumeration space of " + std::to_string(cells) +
                                    " states exceeds DPF_MAX_CELLS (" +
                                    std::to_string(cap) + ")");
}

dpf::PreferenceList read_prefs(int spots, const std::string& list) {
    return dpf::PreferenceList(spots, dpf::parse_int_list(list));
}

std::string prefs_text(const dpf::PreferenceList& pl) {
    return "n: " + std::to_string(pl.spots()) + "\nprefs: " + dpf::format_prefs(pl);
}

// Exact size of the content-assignment sweep for one lambda: value sets
// times distinct arrangements of the parts.
Int assignment_cells(int n, const dpf::Partition& lam) {
    int k = lam.length();
    if (k > n + 1) return 0;
    std::vector<Int> mults;
    for (int i = 1; i <= lam.sum(); ++i)
        if (lam.mult(i)) mults.push_back(lam.mult(i));
    return dpf::checked_mul(dpf::binomial(n + 1, k), dpf::multinomial(k, mults));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"defective parking functions: statistics, bijections, counts"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", g_format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();

    int n = 0, m = 0, d = 0, k = 0, jobs = 1;
    int max_m = 3, max_d = 2, n_extra = 1;
    std::string list, word, partition_text, row1_text, row2_text, scale = "full";
    bool flag_nondecreasing = false, flag_verify = false, flag_orbit_sum = false,
         flag_via_paths = false;

    // --- parking-core -------------------------------------------------------
    auto* defect_cmd = app.add_subcommand("defect", "defect of a preference list");
    defect_cmd->add_option("-n", n, "number of spots")->required();
    defect_cmd->add_option("list", list, "comma-separated preferences")->required();
    defect_cmd->callback([&] {
        int value = dpf::defect(read_prefs(n, list));
        emit(json{{"defect", value}}, std::to_string(value));
    });

    auto* simulate_cmd = app.add_subcommand("simulate", "run the parking scheme");
    simulate_cmd->add_option("-n", n, "number of spots")->required();
    simulate_cmd->add_option("list", list, "comma-separated preferences")->required();
    simulate_cmd->callback([&] {
        dpf::ParkingOutcome out = dpf::simulate(read_prefs(n, list));
        emit(json{{"positions", out.positions}, {"defect", out.defect}},
             "positions: " + dpf::join_ints(out.positions) +
                 "\ndefect: " + std::to_string(out.defect));
    });

    auto* profile_cmd = app.add_subcommand("profile", "predefect/defect sequences");
    profile_cmd->add_option("-n", n, "number of spots")->required();
    profile_cmd->add_option("list", list, "comma-separated preferences")->required();
    profile_cmd->callback([&] {
        dpf::DefectProfile p = dpf::defect_profile(read_prefs(n, list));
        emit(json{{"gamma", p.predefect_seq},
                  {"delta", p.defect_seq},
                  {"predefect", p.predefect},
                  {"defect", p.defect}},
             "gamma: " + dpf::join_ints(p.predefect_seq) +
                 "\ndelta: " + dpf::join_ints(p.defect_seq) +
                 "\npredefect: " + std::to_string(p.predefect) +
                 "\ndefect: " + std::to_string(p.defect));
    });

    auto* orbit_cmd = app.add_subcommand("orbit-size", "distinct rearrangements");
    orbit_cmd->add_option("-n", n, "number of spots")->required();
    orbit_cmd->add_option("list", list, "comma-separated preferences")->required();
    orbit_cmd->callback([&] {
        Int value = dpf::orbit_size(read_prefs(n, list));
        emit(json{{"value", std::to_string(value)}}, std::to_string(value));
    });

    auto* catalan_cmd = app.add_subcommand("catalan-word", "Catalan word of a parking function");
    catalan_cmd->add_option("-n", n, "number of spots")->required();
    catalan_cmd->add_option("list", list, "comma-separated preferences")->required();
    catalan_cmd->callback([&] {
        auto cw = dpf::to_catalan_word(read_prefs(n, list));
        emit(json{{"word", cw}}, dpf::join_ints(cw));
    });

    // --- lattice paths ------------------------------------------------------
    auto* path_cmd = app.add_subcommand("path", "lattice path of a nondecreasing list");
    path_cmd->add_option("-n", n, "number of spots")->required();
    path_cmd->add_option("list", list, "comma-separated preferences")->required();
    path_cmd->callback([&] {
        dpf::LatticePath w = dpf::path_from_prefs(read_prefs(n, list));
        emit(json{{"word", w.word()}}, w.word());
    });

    auto* dip_cmd = app.add_subcommand("dip", "dip statistic of a path word");
    dip_cmd->add_option("word", word, "word over {N,E}")->required();
    dip_cmd->callback([&] {
        int value = dpf::dip(dpf::LatticePath(word));
        emit(json{{"dip", value}}, std::to_string(value));
    });

    auto* runs_cmd = app.add_subcommand("runs", "north-run partition of a path word");
    runs_cmd->add_option("word", word, "word over {N,E}")->required();
    runs_cmd->callback([&] {
        dpf::Partition r = dpf::runs(dpf::LatticePath(word));
        emit(json{{"runs", r.parts()}}, dpf::format_partition(r));
    });

    auto* conj_cmd = app.add_subcommand("conjugate", "conjugate a path word or list");
    conj_cmd->add_option("word", word, "word over {N,E}, or preferences with -n")
        ->required();
    conj_cmd->add_option("-n", n, "treat the argument as preferences on n spots");
    conj_cmd->callback([&] {
        if (conj_cmd->count("-n")) {
            dpf::PreferenceList out = dpf::conjugate_prefs(read_prefs(n, word));
            emit(dpf::prefs_to_json(out), prefs_text(out));
            return;
        }
        dpf::LatticePath out = dpf::conjugate(dpf::LatticePath(word));
        emit(json{{"word", out.word()}}, out.word());
    });

    auto* lpath_cmd = app.add_subcommand("labeled-path", "labeled path of any-order list");
    lpath_cmd->add_option("-n", n, "number of spots")->required();
    lpath_cmd->add_option("list", list, "comma-separated preferences")->required();
    lpath_cmd->callback([&] {
        dpf::LabeledLatticePath lp = dpf::labeled_path_from_prefs(read_prefs(n, list));
        emit(dpf::labeled_path_to_json(lp),
             "word: " + lp.path.word() + "\nlabels: " + dpf::join_ints(lp.labels));
    });

    // --- bijections ---------------------------------------------------------
    auto add_square_list = [&](CLI::App* cmd) {
        cmd->add_option("list", list, "comma-separated preferences (m = n)")->required();
    };

    auto* phi_cmd = app.add_subcommand("phi", "defect decrement bijection");
    add_square_list(phi_cmd);
    phi_cmd->callback([&] {
        auto pl = read_prefs(static_cast<int>(dpf::parse_int_list(list).size()), list);
        dpf::DecrementPair p = dpf::phi(pl);
        emit(dpf::pair_to_json(p.list, p.index),
             "list: " + dpf::format_prefs(p.list) + "\nindex: " + std::to_string(p.index));
    });

    auto* psi_cmd = app.add_subcommand("psi", "fixed-point deletion bijection");
    add_square_list(psi_cmd);
    psi_cmd->callback([&] {
        auto pl = read_prefs(static_cast<int>(dpf::parse_int_list(list).size()), list);
        dpf::FixedPair p = dpf::psi(pl);
        emit(dpf::pair_to_json(p.list, p.index),
             "list: " + dpf::format_prefs(p.list) + "\nindex: " + std::to_string(p.index));
    });

    auto* rho_cmd = app.add_subcommand("rho", "main bijection to a parking function");
    add_square_list(rho_cmd);
    rho_cmd->add_option("--k", k, "last-entry bound (default n+1)");
    rho_cmd->callback([&] {
        auto prefs = dpf::parse_int_list(list);
        auto pl = dpf::PreferenceList(static_cast<int>(prefs.size()), prefs);
        int bound = rho_cmd->count("--k") ? k : pl.spots() + 1;
        dpf::PreferenceList out = dpf::rho(pl, bound);
        emit(dpf::prefs_to_json(out), prefs_text(out));
    });

    auto* theta_cmd = app.add_subcommand("theta", "more-cars-than-spots bijection");
    theta_cmd->add_option("-n", n, "number of spots (below the car count)")->required();
    theta_cmd->add_option("list", list, "comma-separated preferences")->required();
    theta_cmd->callback([&] {
        dpf::PreferenceList out = dpf::theta(read_prefs(n, list));
        emit(dpf::prefs_to_json(out), prefs_text(out));
    });

    auto* syt_cmd = app.add_subcommand("syt", "standard Young tableau of a list");
    syt_cmd->add_option("-n", n, "number of spots")->required();
    syt_cmd->add_option("list", list, "comma-separated preferences")->required();
    syt_cmd->callback([&] {
        dpf::TwoRowSYT t = dpf::to_tableau(read_prefs(n, list));
        emit(dpf::tableau_to_json(t), "row1: " + dpf::join_ints(t.row1) +
                                          "\nrow2: " + dpf::join_ints(t.row2));
    });

    auto* fromsyt_cmd = app.add_subcommand("from-syt", "list of a standard Young tableau");
    fromsyt_cmd->add_option("-m", m, "number of cars")->required();
    fromsyt_cmd->add_option("-n", n, "number of spots")->required();
    fromsyt_cmd->add_option("--row1", row1_text, "comma-separated first row")->required();
    fromsyt_cmd->add_option("--row2", row2_text, "comma-separated second row (may be empty)");
    fromsyt_cmd->callback([&] {
        dpf::TwoRowSYT t;
        t.row1 = dpf::parse_int_list(row1_text);
        if (!row2_text.empty()) t.row2 = dpf::parse_int_list(row2_text);
        dpf::PreferenceList out = dpf::from_tableau(t, m, n);
        emit(dpf::prefs_to_json(out), prefs_text(out));
    });

    // --- enumeration and counting -------------------------------------------
    auto* enum_cmd = app.add_subcommand("enumerate", "stream defect-d lists");
    enum_cmd->add_option("-m", m, "number of cars")->required();
    enum_cmd->add_option("-n", n, "number of spots")->required();
    enum_cmd->add_option("-d", d, "defect")->required();
    enum_cmd->add_flag("--nondecreasing", flag_nondecreasing, "orbit representatives only");
    enum_cmd->callback([&] {
        require_cells([&] {
            return flag_nondecreasing ? dpf::binomial(m + n, m) : dpf::ipow(n + 1, m);
        });
        auto lists = flag_nondecreasing ? dpf::enumerate_dpf_nondecreasing(m, n, d)
                                        : dpf::enumerate_dpf(m, n, d);
        for (const auto& pl : lists) {
            if (json_mode())
                std::cout << dpf::prefs_to_json(pl).dump() << "\n";
            else
                std::cout << dpf::format_prefs(pl) << "\n";
        }
    });

    auto* count_cmd = app.add_subcommand("count", "count defect-d lists");
    count_cmd->add_option("-m", m, "number of cars")->required();
    count_cmd->add_option("-n", n, "number of spots")->required();
    count_cmd->add_option("-d", d, "defect")->required();
    count_cmd->add_flag("--verify", flag_verify, "cross-check by enumeration");
    count_cmd->add_flag("--orbit-sum", flag_orbit_sum,
                        "count all lists as multiset permutations of representatives");
    count_cmd->add_option("--jobs", jobs, "worker threads for --verify")
        ->check(CLI::PositiveNumber);
    count_cmd->callback([&] {
        if (flag_verify)
            require_cells([&] {
                return flag_orbit_sum ? dpf::ipow(n + 1, m) : dpf::binomial(m + n, m);
            });
        if (flag_orbit_sum) require_cells([&] { return dpf::binomial(m + n, m); });
        dpf::CountReport report =
            flag_orbit_sum ? dpf::count_dpf_orbit_sum(m, n, d, flag_verify, jobs)
                           : dpf::count_nondecreasing(m, n, d, flag_verify, jobs);
        if (!report.consistent())
            throw std::logic_error("count: formula and enumeration disagree");
        std::string formula = flag_orbit_sum
                                  ? "sum over representatives of m!/prod(mult_v!)"
                                  : "(n-m+2d+1)/(n+d+1)*binom(m+n,n+d)";
        std::string text = "formula: " + std::to_string(report.formula_value) +
                           "\nenumerated: " +
                           (report.enumerated_value
                                ? std::to_string(*report.enumerated_value)
                                : std::string("(skipped)"));
        emit(dpf::count_report_to_json(report, formula), text);
    });

    auto* countpf_cmd = app.add_subcommand("count-pf", "parking-function count");
    countpf_cmd->add_option("-m", m, "number of cars")->required();
    countpf_cmd->add_option("-n", n, "number of spots")->required();
    countpf_cmd->callback([&] {
        Int value = dpf::count_pf(m, n);
        emit(json{{"value", std::to_string(value)}}, std::to_string(value));
    });

    // --- Kreweras and the graded characteristic ------------------------------
    auto* krew_cmd = app.add_subcommand("kreweras", "defective Kreweras number");
    krew_cmd->add_option("-d", d, "predefect grade")->required();
    krew_cmd->add_option("-n", n, "number of spots")->required();
    krew_cmd->add_option("-p", partition_text, "content partition, e.g. 2,1")->required();
    krew_cmd->add_flag("--via-paths", flag_via_paths, "count lattice paths instead");
    krew_cmd->callback([&] {
        dpf::Partition lam = dpf::parse_partition(partition_text);
        require_cells([&] {
            return flag_via_paths ? dpf::binomial(lam.sum() + n, n)
                                  : assignment_cells(n, lam);
        });
        Int value = flag_via_paths ? dpf::defective_kreweras_via_paths(d, n, lam)
                                   : dpf::defective_kreweras(d, n, lam);
        emit(json{{"d", d}, {"n", n}, {"lambda", lam.parts()}, {"value", std::to_string(value)}},
             std::to_string(value));
    });

    auto* frob_cmd = app.add_subcommand("frobenius", "graded Frobenius characteristic");
    frob_cmd->add_option("-m", m, "number of cars")->required();
    frob_cmd->add_option("-n", n, "number of spots")->required();
    frob_cmd->callback([&] {
        require_cells([&] { return dpf::binomial(m + n, n); });
        dpf::GradedFrobenius ch = dpf::frobenius_char(m, n);
        if (json_mode()) {
            std::cout << dpf::frobenius_to_json(ch).dump() << "\n";
            return;
        }
        for (const dpf::Partition& lam : dpf::partitions_of(m)) {
            auto it = ch.terms.find(lam);
            if (it == ch.terms.end() || it->second.empty()) continue;
            std::cout << dpf::format_partition(lam) << ": " << dpf::format_poly(it->second)
                      << "\n";
        }
    });

    auto* vanish_cmd = app.add_subcommand("check-vanishing", "verify vanishing bounds");
    vanish_cmd->add_option("-n", n, "number of spots")->required();
    vanish_cmd->add_option("-p", partition_text, "content partition")->required();
    vanish_cmd->callback([&] {
        dpf::Partition lam = dpf::parse_partition(partition_text);
        require_cells([&] { return assignment_cells(n, lam); });
        dpf::VanishingReport report = dpf::check_vanishing(lam, n);
        std::string text = report.pass ? "pass" : "fail";
        for (const auto& v : report.violations)
            text += "\n" + v.grading + " grade " + std::to_string(v.d) +
                    " has count " + std::to_string(v.count);
        emit(dpf::vanishing_report_to_json(report), text);
        if (!report.pass) throw std::logic_error("vanishing bound violated");
    });

    auto* conjecture_cmd =
        app.add_subcommand("check-conjecture", "sweep the closed-form conjecture");
    conjecture_cmd->add_option("--max-m", max_m, "largest partition size")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    conjecture_cmd->add_option("--max-d", max_d, "largest grade")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    conjecture_cmd->add_option("--n-extra", n_extra, "extra spots beyond the threshold")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    conjecture_cmd->add_option("--jobs", jobs, "worker threads")
        ->check(CLI::PositiveNumber);
    conjecture_cmd->callback([&] {
        require_cells([&] {
            Int total = 0;
            for (int mm = 1; mm <= max_m; ++mm)
                for (const dpf::Partition& lam : dpf::partitions_of(mm))
                    for (int dd = 0; dd <= max_d; ++dd)
                        for (int nn = std::max(1, dd + mm - 1);
                             nn <= dd + mm - 1 + n_extra; ++nn)
                            total = dpf::checked_add(total, assignment_cells(nn, lam));
            return total;
        });
        dpf::ConjectureReport report = dpf::check_conjecture(max_m, max_d, n_extra, jobs);
        std::string text = "cases checked: " + std::to_string(report.cases_checked) +
                           "\nmismatches: " + std::to_string(report.mismatches.size());
        for (const auto& mm : report.mismatches)
            text += "\nm=" + std::to_string(mm.m) + " n=" + std::to_string(mm.n) +
                    " d=" + std::to_string(mm.d) + " lambda=" +
                    dpf::format_partition(mm.lambda) + " expected=" + mm.expected +
                    " actual=" + mm.actual;
        emit(dpf::conjecture_report_to_json(report), text);
        if (!report.clean()) throw ConjectureMismatchFound{};
    });

    // --- verification --------------------------------------------------------
    auto* verify_cmd = app.add_subcommand("verify-all", "run the acceptance suite");
    verify_cmd->add_option("--scale", scale, "small or full")
        ->check(CLI::IsMember({"small", "full"}))
        ->capture_default_str();
    verify_cmd->callback([&] {
        auto results = dpf::run_acceptance(scale == "full" ? dpf::VerifyScale::kFull
                                                           : dpf::VerifyScale::kSmall);
        bool all_pass = true;
        json arr = json::array();
        for (const auto& r : results) {
            all_pass = all_pass && r.pass;
            if (json_mode())
                arr.push_back(json{{"id", r.id},
                                   {"name", r.name},
                                   {"pass", r.pass},
                                   {"detail", r.detail}});
            else
                std::cout << dpf::format_criterion_line(r, /*with_seconds=*/false) << "\n";
        }
        if (json_mode()) std::cout << arr.dump() << "\n";
        if (!all_pass) throw std::logic_error("acceptance criteria failed");
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    } catch (const ConjectureMismatchFound&) {
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::logic_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
