#include "dpf/lattice_path.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace dpf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

LatticePath::LatticePath(std::string word) : word_(std::move(word)) {
    for (char c : word_) {
        if (c == 'N')
            ++norths_;
        else if (c == 'E')
            ++easts_;
        else
            throw std::invalid_argument("LatticePath: word must be over {N, E}");
    }
}

LatticePath path_from_prefs(const PreferenceList& pl) {
    require(pl.nondecreasing(), "path_from_prefs: preference list must be nondecreasing");
    std::string w;
    w.reserve(static_cast<std::size_t>(pl.cars()) + pl.spots());
    int easts = 0;
    for (int x : pl.prefs()) {
        while (easts < x - 1) {
            w.push_back('E');
            ++easts;
        }
        w.push_back('N');
    }
    while (easts < pl.spots()) {
        w.push_back('E');
        ++easts;
    }
    return LatticePath(std::move(w));
}

PreferenceList prefs_from_path(const LatticePath& w) {
    std::vector<int> prefs;
    prefs.reserve(w.norths());
    int easts = 0;
    for (char c : w.word()) {
        if (c == 'E')
            ++easts;
        else
            prefs.push_back(easts + 1);
    }
    return PreferenceList(w.easts(), std::move(prefs));
}

int dip(const LatticePath& w) {
    // Measured at the bottom of each north step: east steps trailing past
    // the last north step do not dip. This is the statistic that equals
    // max_j(x_j - j, 0) of the corresponding preference list.
    int x = 0, y = 0, worst = 0;
    for (char c : w.word()) {
        if (c == 'E') {
            ++x;
        } else {
            worst = std::max(worst, x - y);
            ++y;
        }
    }
    return worst;
}

Partition runs(const LatticePath& w) {
    std::vector<int> lengths;
    int run = 0;
    for (char c : w.word()) {
        if (c == 'N') {
            ++run;
        } else if (run > 0) {
            lengths.push_back(run);
            run = 0;
        }
    }
    if (run > 0) lengths.push_back(run);
    std::sort(lengths.begin(), lengths.end(), std::greater<>());
    return Partition(std::move(lengths));
}

LatticePath conjugate(const LatticePath& w) {
    std::string out(w.word().rbegin(), w.word().rend());
    for (char& c : out) c = (c == 'N') ? 'E' : 'N';
    return LatticePath(std::move(out));
}

LabeledLatticePath labeled_path_from_prefs(const PreferenceList& pl) {
    const int m = pl.cars();
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 1);
    // Stable sort by preference: within a column (equal preference) the
    // labels come out in increasing car order, bottom to top.
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
        return pl.prefs()[a - 1] < pl.prefs()[b - 1];
    });
    return LabeledLatticePath{path_from_prefs(pl.sorted()), std::move(order)};
}

PreferenceList prefs_from_labeled_path(const LabeledLatticePath& lp) {
    const int m = lp.path.norths();
    require(static_cast<int>(lp.labels.size()) == m,
            "prefs_from_labeled_path: one label per north step required");
    std::vector<char> seen(static_cast<std::size_t>(m) + 1, 0);
    for (int l : lp.labels) {
        require(l >= 1 && l <= m && !seen[l],
                "prefs_from_labeled_path: labels must be a permutation of [m]");
        seen[l] = 1;
    }
    // Labels must increase within each maximal north run.
    int i = 0;
    char prev = 'E';
    for (char c : lp.path.word()) {
        if (c == 'N') {
            if (prev == 'N')
                require(lp.labels[i] > lp.labels[i - 1],
                        "prefs_from_labeled_path: labels must increase within a column");
            ++i;
        }
        prev = c;
    }
    PreferenceList sorted = prefs_from_path(lp.path);
    std::vector<int> prefs(m);
    for (int j = 0; j < m; ++j) prefs[lp.labels[j] - 1] = sorted.prefs()[j];
    return PreferenceList(sorted.spots(), std::move(prefs));
}

}  // namespace dpf
