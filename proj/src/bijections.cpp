#include "dpf/bijections.hpp"

#include <algorithm>
#include <stdexcept>

#include "dpf/lattice_path.hpp"

namespace dpf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void internal_check(bool cond, const char* msg) {
    if (!cond) throw std::logic_error(msg);
}

bool contains(const std::vector<int>& v, int x) {
    return std::find(v.begin(), v.end(), x) != v.end();
}

}  // namespace

DecrementPair phi(const PreferenceList& pl) {
    require(pl.nondecreasing(), "phi: preference list must be nondecreasing");
    require(pl.cars() == pl.spots(), "phi: defined only for m = n");
    const int n = pl.cars();
    int i = 0;
    for (int j = 1; j <= n; ++j) {
        if (pl.prefs()[j - 1] - j > 0) {
            i = j;
            break;
        }
    }
    require(i != 0, "phi: defect must be positive");
    std::vector<int> out = pl.prefs();
    for (int j = i; j <= n; ++j) --out[j - 1];
    return DecrementPair{PreferenceList(n, std::move(out)), i};
}

PreferenceList phi_inv(const DecrementPair& p) {
    const int n = p.list.cars();
    require(p.list.spots() == n, "phi_inv: pair list must have m = n");
    require(contains(decrement_set(p.list), p.index),
            "phi_inv: index not in the decrement set");
    require(p.list.prefs().back() <= n,
            "phi_inv: last entry would exceed n + 1 after increment");
    std::vector<int> out = p.list.prefs();
    for (int j = p.index; j <= n; ++j) ++out[j - 1];
    return PreferenceList(n, std::move(out));
}

FixedPair psi(const PreferenceList& pl) {
    require(pl.nondecreasing(), "psi: preference list must be nondecreasing");
    require(pl.cars() == pl.spots(), "psi: defined only for m = n");
    require(defect(pl) == 0, "psi: input must be a parking function");
    const int n = pl.cars();
    require(n >= 2, "psi: need at least two cars");
    require(pl.prefs().back() < n, "psi: last entry must be below n");
    std::vector<int> fixed = fixed_set(pl);
    const int i = fixed.back();  // nonempty: x_1 = 1 always
    std::vector<int> out = pl.prefs();
    out.erase(out.begin() + (i - 1));
    return FixedPair{PreferenceList(n - 1, std::move(out)), i};
}

PreferenceList psi_inv(const FixedPair& p) {
    const int n = p.list.cars();
    require(p.list.spots() == n, "psi_inv: pair list must have m = n");
    require(defect(p.list) == 0, "psi_inv: pair list must be a parking function");
    require(contains(fixed_set(p.list), p.index), "psi_inv: index not in the fixed set");
    std::vector<int> out = p.list.prefs();
    out.insert(out.begin() + (p.index - 1), p.index);
    return PreferenceList(n + 1, std::move(out));
}

RhoTrace rho_trace(const PreferenceList& pl, int k) {
    require(pl.nondecreasing(), "rho: preference list must be nondecreasing");
    require(pl.cars() == pl.spots(), "rho: defined only for m = n");
    const int n = pl.cars();
    require(k >= 1 && k <= n + 1, "rho: k must lie in [n + 1]");
    require(pl.prefs().back() <= k, "rho: last entry must be at most k");
    const int d = defect(pl);

    RhoTrace trace;
    PreferenceList cur = pl;
    for (int r = 0; r < d; ++r) {
        DecrementPair step = phi(cur);
        trace.indices.push_back(step.index);
        trace.phi_stages.push_back(step.list);
        cur = std::move(step.list);
    }
    for (int r = d - 1; r >= 0; --r) {
        cur = psi_inv(FixedPair{cur, trace.indices[r]});
        trace.psi_stages.push_back(cur);
    }
    internal_check(cur.prefs().back() <= k - d, "rho: image violates the k - d bound");
    return trace;
}

PreferenceList rho(const PreferenceList& pl, int k) {
    RhoTrace trace = rho_trace(pl, k);
    if (trace.psi_stages.empty()) return pl;
    return trace.psi_stages.back();
}

PreferenceList rho_inv(const PreferenceList& pl, int n, int d, int k) {
    require(n >= 1 && d >= 0, "rho_inv: need n >= 1 and d >= 0");
    require(k >= 1 && k <= n + 1, "rho_inv: k must lie in [n + 1]");
    require(pl.cars() == n + d, "rho_inv: list must have length n + d");
    require(pl.spots() == n + d, "rho_inv: list must have n + d spots");
    require(pl.nondecreasing(), "rho_inv: preference list must be nondecreasing");
    require(defect(pl) == 0, "rho_inv: input must be a parking function");
    require(pl.prefs().back() <= k - d, "rho_inv: last entry must be at most k - d");

    PreferenceList cur = pl;
    std::vector<int> indices;
    indices.reserve(d);
    for (int r = 0; r < d; ++r) {
        FixedPair step = psi(cur);
        indices.push_back(step.index);
        cur = std::move(step.list);
    }
    for (int r = d - 1; r >= 0; --r) cur = phi_inv(DecrementPair{cur, indices[r]});
    internal_check(defect(cur) == d && cur.prefs().back() <= k,
                   "rho_inv: image outside the stated domain");
    return cur;
}

PreferenceList theta(const PreferenceList& pl) {
    require(pl.cars() > pl.spots(), "theta: defined only for m > n");
    require(pl.nondecreasing(), "theta: preference list must be nondecreasing");
    const int m = pl.cars();
    const int n = pl.spots();
    // On m spots the same list has defect d - (m - n) and entries <= n + 1.
    return rho(pl.with_spots(m), n + 1);
}

PreferenceList theta_inv(const PreferenceList& pl, int m, int n) {
    require(m > n && n >= 1, "theta_inv: need m > n >= 1");
    const int d = pl.cars() - n;
    require(d >= m - n, "theta_inv: list too short for the frame");
    PreferenceList wide = rho_inv(pl, m, d - (m - n), n + 1);
    return wide.with_spots(n);
}

PreferenceList conjugate_prefs(const PreferenceList& pl) {
    require(pl.nondecreasing(),
            "conjugate_prefs: preference list must be nondecreasing");
    return prefs_from_path(conjugate(path_from_prefs(pl)));
}

PreferenceList gamma_bij(const PreferenceList& pl) {
    require(pl.cars() < pl.spots(), "gamma_bij: defined only for m < n");
    return theta(conjugate_prefs(pl));
}

PreferenceList gamma_inv(const PreferenceList& pl, int m, int n) {
    require(m < n, "gamma_inv: defined only for m < n");
    // Forward path conjugated to n cars on m spots before theta.
    return conjugate_prefs(theta_inv(pl, n, m));
}

TwoRowSYT two_row_from_pf(const PreferenceList& pl, int k) {
    require(pl.nondecreasing(), "two_row_from_pf: list must be nondecreasing");
    require(pl.cars() == pl.spots(), "two_row_from_pf: defined only for m = n");
    require(defect(pl) == 0, "two_row_from_pf: input must be a parking function");
    const int n = pl.cars();
    require(k >= 1 && k <= n + 1, "two_row_from_pf: k must lie in [n + 1]");
    require(pl.prefs().back() <= k, "two_row_from_pf: last entry must be at most k");

    LatticePath dyck = path_from_prefs(pl);
    TwoRowSYT t;
    int pos = 0;
    for (char c : dyck.word()) {
        ++pos;
        if (c == 'N')
            t.row1.push_back(pos);
        else
            t.row2.push_back(pos);
    }
    // The last n - k + 1 entries of row 2 are forced to be n + k, ..., 2n;
    // dropping them leaves shape (n, k - 1).
    const int drop = n - k + 1;
    for (int j = 0; j < drop; ++j) {
        internal_check(t.row2.back() == 2 * n - j,
                       "two_row_from_pf: tail of row 2 not forced");
        t.row2.pop_back();
    }
    return t;
}

PreferenceList pf_from_two_row(const TwoRowSYT& t) {
    require(validate_syt(t), "pf_from_two_row: not a valid two-row tableau");
    const int a = static_cast<int>(t.row1.size());
    const int b = static_cast<int>(t.row2.size());
    require(a >= 1, "pf_from_two_row: first row must be nonempty");
    // Reinstate the forced tail {a+b+1, ..., 2a} of row 2, then read the
    // word: position in row 1 = north step, in row 2 = east step.
    std::string word(static_cast<std::size_t>(2 * a), 'E');
    for (int v : t.row1) word[v - 1] = 'N';
    PreferenceList pl = prefs_from_path(LatticePath(std::move(word)));
    internal_check(defect(pl) == 0, "pf_from_two_row: word is not a Dyck path");
    internal_check(pl.prefs().back() <= b + 1,
                   "pf_from_two_row: image violates the k bound");
    return pl;
}

TwoRowSYT to_tableau(const PreferenceList& pl) {
    require(pl.nondecreasing(), "to_tableau: preference list must be nondecreasing");
    const int m = pl.cars();
    const int n = pl.spots();
    const int d = defect(pl);
    PreferenceList restricted = [&] {
        if (m == n) return rho(pl, n + 1);
        if (m > n) return theta(pl);
        return gamma_bij(pl);
    }();
    TwoRowSYT t = two_row_from_pf(restricted, m + 1 - d);
    internal_check(static_cast<int>(t.row1.size()) == n + d &&
                       static_cast<int>(t.row2.size()) == m - d,
                   "to_tableau: image has wrong shape");
    return t;
}

PreferenceList from_tableau(const TwoRowSYT& t, int m, int n) {
    require(m >= 1 && n >= 1, "from_tableau: need m, n >= 1");
    require(validate_syt(t), "from_tableau: not a valid two-row tableau");
    const int a = static_cast<int>(t.row1.size());
    const int b = static_cast<int>(t.row2.size());
    require(a + b == m + n, "from_tableau: shape does not fill the frame");
    const int d = a - n;  // equivalently m - b
    require(d >= std::max(m - n, 0) && d <= m,
            "from_tableau: defect outside the feasible range");
    PreferenceList restricted = pf_from_two_row(t);
    if (m == n) return rho_inv(restricted, n, d, n + 1);
    if (m > n) return theta_inv(restricted, m, n);
    return gamma_inv(restricted, m, n);
}

}  // namespace dpf
