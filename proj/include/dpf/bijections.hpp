#pragma once

#include <compare>
#include <vector>

#include "dpf/parking.hpp"
#include "dpf/tableaux.hpp"

namespace dpf {

/// A nondecreasing list with m = n together with an index of its decrement
/// set; the image format of phi.
struct DecrementPair {
    PreferenceList list;
    int index;

    auto operator<=>(const DecrementPair&) const = default;
};

/// A nondecreasing parking function with m = n together with an index of
/// its fixed set; the image format of psi.
struct FixedPair {
    PreferenceList list;
    int index;

    auto operator<=>(const FixedPair&) const = default;
};

/// Defect decrement: i is the first index with delta_i > 0; entries i..n
/// drop by one. Takes defect d > 0 to d - 1 and satisfies
/// D(x) = { j in D(x') : j <= i }.
DecrementPair phi(const PreferenceList& pl);

/// Inverse of phi: entries index..n rise by one. Rejects pairs whose index
/// is not in the decrement set or whose last entry is already n + 1.
PreferenceList phi_inv(const DecrementPair& p);

/// Fixed-point deletion: i is the largest fixed index; the entry at i is
/// removed. Defined for nondecreasing parking functions with m = n whose
/// last entry is below n; satisfies F(x) = { j in F(x') : j <= i }.
FixedPair psi(const PreferenceList& pl);

/// Inverse of psi: inserts the value i at position i.
PreferenceList psi_inv(const FixedPair& p);

/// Intermediate stages of rho, for inspection: phi applications then
/// psi_inv applications with the recorded indices in reverse order.
struct RhoTrace {
    std::vector<int> indices;                 // phi indices i_1, ..., i_d
    std::vector<PreferenceList> phi_stages;   // after each phi
    std::vector<PreferenceList> psi_stages;   // after each psi_inv; last = result
};

/// The main equal-cars-and-spots bijection
/// DPF_up(n,n,d)(x_n <= k) -> PF_up(n+d,n+d)(x_{n+d} <= k-d)
/// with D(x) = F(rho(x)). Identity when d = 0.
PreferenceList rho(const PreferenceList& pl, int k);
RhoTrace rho_trace(const PreferenceList& pl, int k);

/// Inverse of rho: psi d times, then phi_inv with the recorded indices in
/// reverse order. The input must lie in PF_up(n+d,n+d)(x_{n+d} <= k-d).
PreferenceList rho_inv(const PreferenceList& pl, int n, int d, int k);

/// More cars than spots: reinterpret on m spots (defect drops by m - n),
/// then rho with k = n + 1. Lands in PF_up(n+d,n+d)(x_{n+d} <= m+1-d).
PreferenceList theta(const PreferenceList& pl);

/// Inverse of theta; m and n identify the original frame.
PreferenceList theta_inv(const PreferenceList& pl, int m, int n);

/// Conjugation of a nondecreasing list through its lattice path: an
/// involution [n+1]^m -> [m+1]^n shifting defect by n - m.
PreferenceList conjugate_prefs(const PreferenceList& pl);

/// Fewer cars than spots: conjugate, then theta. (The paper calls this map
/// gamma; renamed to avoid clashing with the predefect sequence.)
PreferenceList gamma_bij(const PreferenceList& pl);
PreferenceList gamma_inv(const PreferenceList& pl, int m, int n);

/// The end-to-end bijection DPF_up(m,n,d) -> SYT(n+d, m-d): dispatch on
/// m = n / m > n / m < n, then read the resulting restricted parking
/// function off its Dyck path.
TwoRowSYT to_tableau(const PreferenceList& pl);

/// Inverse of to_tableau for the frame (m, n); rejects shapes that are not
/// (n+d, m-d) for a feasible d.
PreferenceList from_tableau(const TwoRowSYT& t, int m, int n);

/// The restricted two-row correspondence underlying to_tableau:
/// PF_up(N,N)(x_N <= k) <-> SYT(N, k-1), with k in [N+1].
TwoRowSYT two_row_from_pf(const PreferenceList& pl, int k);
PreferenceList pf_from_two_row(const TwoRowSYT& t);

}  // namespace dpf
