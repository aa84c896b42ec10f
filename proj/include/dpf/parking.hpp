#pragma once

#include <compare>
#include <span>
#include <vector>

#include "dpf/exact.hpp"

namespace dpf {

/// A preference list: m cars on a street with n numbered spots, car i
/// preferring spot prefs[i-1]. Entries live in [1, n+1]; preferring n+1
/// means the car wants none of the real spots.
class PreferenceList {
public:
    PreferenceList(int spots, std::vector<int> prefs);  // throws std::invalid_argument

    int spots() const noexcept { return spots_; }  // n
    int cars() const noexcept { return static_cast<int>(prefs_.size()); }  // m
    const std::vector<int>& prefs() const noexcept { return prefs_; }

    bool nondecreasing() const noexcept;
    PreferenceList sorted() const;

    /// Same preferences reinterpreted on a street with `new_spots` spots.
    PreferenceList with_spots(int new_spots) const;

    auto operator<=>(const PreferenceList&) const = default;

private:
    int spots_;
    std::vector<int> prefs_;
};

/// Result of running the classical parking scheme on an unbounded street.
struct ParkingOutcome {
    std::vector<int> positions;  // positions[i-1] = spot where car i parks
    int defect = 0;              // cars parked beyond spot n
};

/// The entrywise defect statistics of the sorted rearrangement.
struct DefectProfile {
    std::vector<int> predefect_seq;  // gamma: x'_i - i
    std::vector<int> defect_seq;     // delta: gamma_i + (m - n)
    int predefect = 0;               // max(gamma)
    int defect = 0;                  // max(predefect + (m - n), 0)
};

/// Runs the classical parking scheme: cars in index order, each parking at
/// the first free spot >= its preference. Total on valid input.
ParkingOutcome simulate(const PreferenceList& pl);

/// Closed-form defect: max_j(x'_j - j + (m - n), 0) over the sorted
/// rearrangement. Agrees with simulate(pl).defect.
int defect(const PreferenceList& pl);

DefectProfile defect_profile(const PreferenceList& pl);

/// True iff no car parks beyond spot n (defect zero).
bool is_parking_function(const PreferenceList& pl);

/// Decrement set D(x): indices i with delta_i >= 0 and no earlier strictly
/// positive delta. Requires nondecreasing input with m = n; 1-based.
std::vector<int> decrement_set(const PreferenceList& pl);

/// Fixed set F(x) = { i : x_i = i } of a nondecreasing parking function
/// with m = n; 1-based.
std::vector<int> fixed_set(const PreferenceList& pl);

/// Number of distinct rearrangements: m! / prod_v mult(v)!.
Int orbit_size(const PreferenceList& pl);

/// The Catalan word -delta(x) = (i - x_i) of a nondecreasing parking
/// function with m = n.
std::vector<int> to_catalan_word(const PreferenceList& pl);

namespace detail {

// Statistics on a raw sorted tuple; no validation, for exhaustive sweeps.
int predefect_sorted(std::span<const int> sorted) noexcept;
int defect_sorted(std::span<const int> sorted, int spots) noexcept;
int defect_any_order(std::vector<int> prefs, int spots);

}  // namespace detail

}  // namespace dpf
