#pragma once

#include <compare>
#include <string>
#include <vector>

#include "dpf/parking.hpp"
#include "dpf/partition.hpp"

namespace dpf {

/// A lattice path from (0,0) to (n,m): a word over {N, E} with m north and
/// n east steps. The frame (n, m) is read off the word; the diagonal used
/// by dip is anchored at the frame, so conjugation changes it.
class LatticePath {
public:
    explicit LatticePath(std::string word);  // throws on characters outside {N, E}

    const std::string& word() const noexcept { return word_; }
    int norths() const noexcept { return norths_; }  // m
    int easts() const noexcept { return easts_; }    // n

    auto operator<=>(const LatticePath&) const = default;

private:
    std::string word_;
    int norths_ = 0;
    int easts_ = 0;
};

/// A lattice path with its north steps labeled bottom-to-top by a
/// permutation of [m]; labels increase within each column.
struct LabeledLatticePath {
    LatticePath path;
    std::vector<int> labels;

    auto operator<=>(const LabeledLatticePath&) const = default;
};

/// Path of a nondecreasing preference list: the i-th north step is preceded
/// by exactly x_i - 1 east steps, with trailing east steps padding to n.
LatticePath path_from_prefs(const PreferenceList& pl);

/// Inverse of path_from_prefs: x_i = 1 + (east steps before the i-th north).
PreferenceList prefs_from_path(const LatticePath& w);

/// Maximum vertical distance of the path below the diagonal y = x; 0 if it
/// stays weakly above.
int dip(const LatticePath& w);

/// Partition of m recording the lengths of maximal north-step runs.
Partition runs(const LatticePath& w);

/// Reverse the word and swap N <-> E; an involution exchanging the frame
/// (n, m) with (m, n).
LatticePath conjugate(const LatticePath& w);

/// Labeled path of an arbitrary-order preference list: the path of the
/// sorted rearrangement, north steps labeled by original car indices
/// (ties by increasing car index).
LabeledLatticePath labeled_path_from_prefs(const PreferenceList& pl);

/// Inverse of labeled_path_from_prefs; rejects labelings that are not a
/// permutation of [m] increasing within columns.
PreferenceList prefs_from_labeled_path(const LabeledLatticePath& lp);

}  // namespace dpf
