#include "dpf/io.hpp"

#include <sstream>
#include <stdexcept>

namespace dpf {

std::string join_ints(const std::vector<int>& v, char sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out.push_back(sep);
        out += std::to_string(v[i]);
    }
    return out;
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        std::size_t used = 0;
        int value = std::stoi(token, &used);
        if (used != token.size())
            throw std::invalid_argument("trailing characters in integer list: " + token);
        out.push_back(value);
    }
    if (out.empty()) throw std::invalid_argument("empty integer list");
    return out;
}

std::string format_prefs(const PreferenceList& pl) { return join_ints(pl.prefs()); }

json prefs_to_json(const PreferenceList& pl) {
    return json{{"n", pl.spots()}, {"prefs", pl.prefs()}};
}

PreferenceList prefs_from_json(const json& j) {
    return PreferenceList(j.at("n").get<int>(), j.at("prefs").get<std::vector<int>>());
}

Partition parse_partition(const std::string& text) {
    if (text.empty()) return Partition{};
    return Partition(parse_int_list(text));
}

std::string format_partition(const Partition& lam) { return join_ints(lam.parts()); }

json labeled_path_to_json(const LabeledLatticePath& lp) {
    return json{{"word", lp.path.word()}, {"labels", lp.labels}};
}

LabeledLatticePath labeled_path_from_json(const json& j) {
    return LabeledLatticePath{LatticePath(j.at("word").get<std::string>()),
                              j.at("labels").get<std::vector<int>>()};
}

json tableau_to_json(const TwoRowSYT& t) {
    return json{{"row1", t.row1}, {"row2", t.row2}};
}

TwoRowSYT tableau_from_json(const json& j) {
    return TwoRowSYT{j.at("row1").get<std::vector<int>>(),
                     j.at("row2").get<std::vector<int>>()};
}

json pair_to_json(const PreferenceList& list, int index) {
    return json{{"list", list.prefs()}, {"index", index}};
}

json count_report_to_json(const CountReport& report, const std::string& formula) {
    json j{{"formula", formula}, {"value", std::to_string(report.formula_value)}};
    if (report.enumerated_value)
        j["enumerated"] = std::to_string(*report.enumerated_value);
    else
        j["enumerated"] = nullptr;
    return j;
}

json frobenius_to_json(const GradedFrobenius& ch) {
    json terms = json::array();
    // Reverse-lexicographic partition order keeps the output reproducible.
    for (const Partition& lam : partitions_of(ch.m)) {
        auto it = ch.terms.find(lam);
        if (it == ch.terms.end() || it->second.empty()) continue;
        json poly = json::array();
        for (Int c : it->second) poly.push_back(std::to_string(c));
        terms.push_back(json{{"lambda", lam.parts()}, {"poly", poly}});
    }
    return json{{"m", ch.m}, {"n", ch.n}, {"terms", terms}};
}

json vanishing_report_to_json(const VanishingReport& report) {
    json violations = json::array();
    for (const auto& v : report.violations)
        violations.push_back(json{{"grading", v.grading},
                                  {"d", v.d},
                                  {"count", std::to_string(v.count)}});
    return json{{"lambda", report.lambda.parts()},
                {"n", report.n},
                {"pass", report.pass},
                {"violations", violations}};
}

json conjecture_report_to_json(const ConjectureReport& report) {
    json mismatches = json::array();
    for (const auto& mm : report.mismatches)
        mismatches.push_back(json{{"m", mm.m},
                                  {"n", mm.n},
                                  {"d", mm.d},
                                  {"lambda", mm.lambda.parts()},
                                  {"expected", mm.expected},
                                  {"actual", mm.actual}});
    return json{{"cases_checked", std::to_string(report.cases_checked)},
                {"mismatches", mismatches}};
}

std::string format_poly(const Poly& p) {
    std::string out;
    for (std::size_t d = 0; d < p.size(); ++d) {
        if (p[d] == 0) continue;
        if (!out.empty()) out += " + ";
        if (d == 0) {
            out += std::to_string(p[d]);
        } else {
            if (p[d] != 1) out += std::to_string(p[d]);
            out += "t";
            if (d > 1) out += "^" + std::to_string(d);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace dpf
