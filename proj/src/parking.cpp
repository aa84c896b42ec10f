#include "dpf/parking.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

}  // namespace

PreferenceList::PreferenceList(int spots, std::vector<int> prefs)
    : spots_(spots), prefs_(std::move(prefs)) {
    require(spots_ >= 1, "PreferenceList: need at least one spot");
    require(!prefs_.empty(), "PreferenceList: need at least one car");
    for (int p : prefs_)
        require(p >= 1 && p <= spots_ + 1,
                "PreferenceList: preferences must lie in [1, n+1]");
}

bool PreferenceList::nondecreasing() const noexcept {
    return std::is_sorted(prefs_.begin(), prefs_.end());
}

PreferenceList PreferenceList::sorted() const {
    std::vector<int> s = prefs_;
    std::sort(s.begin(), s.end());
    return PreferenceList(spots_, std::move(s));
}

PreferenceList PreferenceList::with_spots(int new_spots) const {
    return PreferenceList(new_spots, prefs_);
}

namespace detail {

int predefect_sorted(std::span<const int> sorted) noexcept {
    int best = sorted.empty() ? 0 : sorted[0] - 1;
    for (std::size_t j = 0; j < sorted.size(); ++j)
        best = std::max(best, sorted[j] - static_cast<int>(j) - 1);
    return best;
}

int defect_sorted(std::span<const int> sorted, int spots) noexcept {
    int m = static_cast<int>(sorted.size());
    return std::max(predefect_sorted(sorted) + (m - spots), 0);
}

int defect_any_order(std::vector<int> prefs, int spots) {
    std::sort(prefs.begin(), prefs.end());
    return defect_sorted(prefs, spots);
}

}  // namespace detail

ParkingOutcome simulate(const PreferenceList& pl) {
    const int n = pl.spots();
    const int m = pl.cars();
    // No car can land past n + m: each advances at most one slot per
    // previously parked car and preferences are capped at n + 1.
    std::vector<char> occupied(static_cast<std::size_t>(n) + m + 2, 0);
    ParkingOutcome out;
    out.positions.reserve(m);
    int max_pos = 0;
    for (int p : pl.prefs()) {
        while (occupied[p]) ++p;
        occupied[p] = 1;
        out.positions.push_back(p);
        max_pos = std::max(max_pos, p);
        if (p > n) ++out.defect;
    }
    // Spots beyond n fill contiguously from n+1 (preferences are <= n+1),
    // so the count of overflowing cars equals how far the street overflows.
    internal_check(out.defect == std::max(max_pos - n, 0),
                   "simulate: overflow block not contiguous past n");
    return out;
}

int defect(const PreferenceList& pl) {
    return detail::defect_any_order(pl.prefs(), pl.spots());
}

DefectProfile defect_profile(const PreferenceList& pl) {
    std::vector<int> sorted = pl.prefs();
    std::sort(sorted.begin(), sorted.end());
    const int m = pl.cars();
    const int shift = m - pl.spots();
    DefectProfile dp;
    dp.predefect_seq.reserve(m);
    dp.defect_seq.reserve(m);
    for (int i = 1; i <= m; ++i) {
        int g = sorted[i - 1] - i;
        dp.predefect_seq.push_back(g);
        dp.defect_seq.push_back(g + shift);
    }
    dp.predefect = *std::max_element(dp.predefect_seq.begin(), dp.predefect_seq.end());
    dp.defect = std::max(dp.predefect + shift, 0);
    return dp;
}

bool is_parking_function(const PreferenceList& pl) { return defect(pl) == 0; }

std::vector<int> decrement_set(const PreferenceList& pl) {
    require(pl.nondecreasing(), "decrement_set: preference list must be nondecreasing");
    require(pl.cars() == pl.spots(), "decrement_set: defined only for m = n");
    std::vector<int> out;
    const auto& x = pl.prefs();
    for (int i = 1; i <= pl.cars(); ++i) {
        int delta = x[i - 1] - i;
        if (delta >= 0) out.push_back(i);
        if (delta > 0) break;  // every later index has an earlier positive delta
    }
    return out;
}

std::vector<int> fixed_set(const PreferenceList& pl) {
    require(pl.nondecreasing(), "fixed_set: preference list must be nondecreasing");
    require(pl.cars() == pl.spots(), "fixed_set: defined only for m = n");
    require(defect(pl) == 0, "fixed_set: defined only for parking functions");
    std::vector<int> out;
    for (int i = 1; i <= pl.cars(); ++i)
        if (pl.prefs()[i - 1] == i) out.push_back(i);
    return out;
}

Int orbit_size(const PreferenceList& pl) {
    std::vector<Int> mult(static_cast<std::size_t>(pl.spots()) + 1, 0);
    for (int p : pl.prefs()) ++mult[p - 1];
    return multinomial(pl.cars(), mult);
}

std::vector<int> to_catalan_word(const PreferenceList& pl) {
    require(pl.nondecreasing(), "to_catalan_word: preference list must be nondecreasing");
    require(pl.cars() == pl.spots(), "to_catalan_word: defined only for m = n");
    require(defect(pl) == 0, "to_catalan_word: defined only for parking functions");
    std::vector<int> word;
    word.reserve(pl.cars());
    for (int i = 1; i <= pl.cars(); ++i) word.push_back(i - pl.prefs()[i - 1]);
    return word;
}

}  // namespace dpf
