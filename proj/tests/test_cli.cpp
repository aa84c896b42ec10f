// Drives the installed dpf binary end to end: spec'd invocations, exit
// codes, JSON schema round trips, determinism.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

struct RunResult {
    int status = -1;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    RunResult r;
    std::string cmd = std::string(DPF_CLI_BIN) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
    int rc = pclose(pipe);
    r.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    return r;
}

std::string strip(std::string s) {
    while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
    return s;
}

}  // namespace

TEST_CASE("defect example") {
    auto r = run_cli("defect -n 9 3,5,5,6,9,9,10");
    CHECK(r.status == 0);
    CHECK(strip(r.out) == "2");
}

TEST_CASE("kreweras example") {
    auto r = run_cli("kreweras -d 1 -n 3 -p 2,1");
    CHECK(r.status == 0);
    CHECK(strip(r.out) == "5");

    auto via = run_cli("kreweras -d 1 -n 3 -p 2,1 --via-paths");
    CHECK(via.status == 0);
    CHECK(strip(via.out) == "5");
}

TEST_CASE("count verify example") {
    auto r = run_cli("count -m 3 -n 3 -d 2 --verify");
    CHECK(r.status == 0);
    CHECK(r.out == "formula: 5\nenumerated: 5\n");

    auto j = json::parse(run_cli("count -m 3 -n 3 -d 2 --verify --format json").out);
    CHECK(j["value"] == "5");
    CHECK(j["enumerated"] == "5");
}

TEST_CASE("invalid input exits 1") {
    CHECK(run_cli("defect -n 9 3,5,99").status == 1);
    CHECK(run_cli("defect -n 9").status == 1);
    CHECK(run_cli("nonsense").status == 1);
    CHECK(run_cli("count-pf -m 4 -n 3").status == 1);
}

TEST_CASE("simulate and profile") {
    auto r = run_cli("simulate -n 9 3,5,5,6,9,9,10");
    CHECK(r.status == 0);
    CHECK(r.out == "positions: 3,5,6,7,9,10,11\ndefect: 2\n");

    auto j = json::parse(run_cli("profile -n 9 3,5,5,6,9,9,10 --format json").out);
    CHECK(j["delta"] == json::array({0, 1, 0, 0, 2, 1, 1}));
    CHECK(j["defect"] == 2);
}

TEST_CASE("path statistics commands") {
    CHECK(strip(run_cli("path -n 5 1,1,2,3,5,5,6").out) == "NNENENEENNEN");
    CHECK(strip(run_cli("dip ENEENNENENEE").out) == "2");
    CHECK(strip(run_cli("runs ENEENNENENEE").out) == "2,1,1,1");
    CHECK(strip(run_cli("conjugate NNENENEENNEN").out) == "ENEENNENENEE");
    CHECK(run_cli("conjugate -n 5 1,1,2,3,5,5,6").out == "n: 7\nprefs: 2,4,4,5,6\n");

    auto j = json::parse(run_cli("labeled-path -n 9 9,3,5,6,10,9,5 --format json").out);
    CHECK(j["labels"] == json::array({2, 3, 7, 4, 1, 6, 5}));
}

TEST_CASE("bijection commands") {
    auto j = json::parse(run_cli("phi 1,4,4 --format json").out);
    CHECK(j == json{{"list", {1, 3, 3}}, {"index", 2}});

    j = json::parse(run_cli("psi 1,1,3,3 --format json").out);
    CHECK(j == json{{"list", {1, 1, 3}}, {"index", 3}});

    auto r = run_cli("rho --k 7 1,1,3,5,7,7");
    CHECK(r.status == 0);
    CHECK(r.out == "n: 8\nprefs: 1,1,3,4,4,5,5,5\n");

    // default bound is n + 1
    CHECK(run_cli("rho 1,4,4").out == "n: 5\nprefs: 1,2,2,2,2\n");

    r = run_cli("theta -n 1 1,1");
    CHECK(r.status == 0);
    CHECK(r.out == "n: 2\nprefs: 1,1\n");

    j = json::parse(run_cli("syt -n 3 1,4,4 --format json").out);
    CHECK(j["row1"].size() == 5);
    CHECK(j["row2"].size() == 1);

    std::string row1 = j["row1"].dump();  // e.g. [1,3,4,5,6]
    row1 = row1.substr(1, row1.size() - 2);
    std::string row2 = std::to_string(j["row2"][0].get<int>());
    auto back = run_cli("from-syt -m 3 -n 3 --row1 " + row1 + " --row2 " + row2);
    CHECK(back.status == 0);
    CHECK(back.out == "n: 3\nprefs: 1,4,4\n");
}

TEST_CASE("syt round trips on rectangular frames") {
    struct Frame {
        std::string n;
        std::string list;
    };
    for (const Frame& f : {Frame{"9", "3,5,5,6,9,9,10"},   // m < n
                           Frame{"2", "1,1,2,3,3"}}) {     // m > n
        auto j = json::parse(run_cli("syt -n " + f.n + " " + f.list + " --format json").out);
        std::string row1 = j["row1"].dump();
        row1 = row1.substr(1, row1.size() - 2);
        std::string row2 = j["row2"].dump();
        row2 = row2.substr(1, row2.size() - 2);
        std::string m = std::to_string(std::count(f.list.begin(), f.list.end(), ',') + 1);
        auto back = run_cli("from-syt -m " + m + " -n " + f.n + " --row1 " + row1 +
                            " --row2 " + row2 + " --format json");
        CHECK(back.status == 0);
        CHECK(json::parse(back.out)["prefs"].dump() == "[" + f.list + "]");
    }
}

TEST_CASE("verify-all small scale") {
    auto r = run_cli("verify-all --scale small");
    CHECK(r.status == 0);
    CHECK(r.out.find("RESULT") == std::string::npos);  // per-line output only
    CHECK(r.out.find("[15] PASS") != std::string::npos);
}

TEST_CASE("enumerate outputs one list per line") {
    auto r = run_cli("enumerate -m 3 -n 3 -d 2 --nondecreasing");
    CHECK(r.status == 0);
    CHECK(r.out == "1,4,4\n2,4,4\n3,3,3\n3,3,4\n3,4,4\n");

    auto lines = run_cli("enumerate -m 3 -n 3 -d 2 --nondecreasing --format json");
    std::size_t count = 0, pos = 0;
    while ((pos = lines.out.find('\n', pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    CHECK(count == 5);
    json first = json::parse(lines.out.substr(0, lines.out.find('\n')));
    CHECK(first == json{{"n", 3}, {"prefs", {1, 4, 4}}});
}

TEST_CASE("orbit-sum count command") {
    auto r = run_cli("count -m 3 -n 3 -d 2 --orbit-sum --verify");
    CHECK(r.status == 0);
    CHECK(r.out == "formula: 13\nenumerated: 13\n");
}

TEST_CASE("frobenius json schema") {
    auto j = json::parse(run_cli("frobenius -m 3 -n 3 --format json").out);
    CHECK(j["terms"].is_array());
    // lambda = (2,1) carries 3 + 5t + 4t^2
    bool found = false;
    for (const auto& term : j["terms"]) {
        if (term["lambda"] == json::array({2, 1})) {
            found = true;
            CHECK(term["poly"] == json::array({"3", "5", "4"}));
        }
    }
    CHECK(found);
}

TEST_CASE("check-vanishing and check-conjecture") {
    CHECK(run_cli("check-vanishing -n 3 -p 2,1").status == 0);

    auto r = run_cli("check-conjecture --max-m 3 --max-d 2 --n-extra 1");
    CHECK(r.status == 0);

    auto j = json::parse(
        run_cli("check-conjecture --max-m 3 --max-d 2 --n-extra 1 --jobs 2 --format json")
            .out);
    CHECK(j["mismatches"].empty());
    CHECK(j["cases_checked"].is_string());
}

TEST_CASE("enumeration cap") {
    auto r = run_cli("enumerate -m 12 -n 12 -d 0");
    CHECK(r.status == 1);
}

TEST_CASE("byte determinism") {
    auto a = run_cli("frobenius -m 4 -n 3 --format json");
    auto b = run_cli("frobenius -m 4 -n 3 --format json");
    CHECK(a.out == b.out);
    CHECK(!a.out.empty());

    auto v1 = run_cli("verify-all --scale small");
    auto v2 = run_cli("verify-all --scale small");
    CHECK(v1.out == v2.out);
}
