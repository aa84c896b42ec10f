#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "dpf/bijections.hpp"
#include "dpf/enumeration.hpp"
#include "dpf/kreweras.hpp"
#include "dpf/lattice_path.hpp"
#include "dpf/parking.hpp"
#include "dpf/partition.hpp"
#include "dpf/tableaux.hpp"

// Text and JSON forms of the domain types. Counts are emitted as decimal
// strings in JSON so 64-bit-challenged consumers survive.

namespace dpf {

using json = nlohmann::json;

std::string join_ints(const std::vector<int>& v, char sep = ',');

/// Parses "3,5,5,6,9,9,10" (must be nonempty).
std::vector<int> parse_int_list(const std::string& text);

/// Preference list <-> "3,5,5,6,9,9,10" plus {"n": ..., "prefs": [...]}.
std::string format_prefs(const PreferenceList& pl);
json prefs_to_json(const PreferenceList& pl);
PreferenceList prefs_from_json(const json& j);

/// Partition <-> "2,1"; the empty string is the empty partition.
Partition parse_partition(const std::string& text);
std::string format_partition(const Partition& lam);

json labeled_path_to_json(const LabeledLatticePath& lp);
LabeledLatticePath labeled_path_from_json(const json& j);

json tableau_to_json(const TwoRowSYT& t);
TwoRowSYT tableau_from_json(const json& j);

json pair_to_json(const PreferenceList& list, int index);

json count_report_to_json(const CountReport& report, const std::string& formula);

json frobenius_to_json(const GradedFrobenius& ch);
json vanishing_report_to_json(const VanishingReport& report);
json conjecture_report_to_json(const ConjectureReport& report);

/// "3 + 5t + 4t^2" (or "0").
std::string format_poly(const Poly& p);

}  // namespace dpf
