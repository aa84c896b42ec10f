#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dpf/exact.hpp"
#include "dpf/parking.hpp"

namespace dpf {

/// A counting result, optionally cross-checked by exhaustive enumeration.
struct CountReport {
    Int formula_value = 0;
    std::optional<Int> enumerated_value;
    std::string method;  // "formula" | "enumeration" | "orbit-sum"

    bool consistent() const {
        return !enumerated_value || *enumerated_value == formula_value;
    }
};

/// Every nondecreasing element of [n+1]^m with defect d, lexicographic.
std::vector<PreferenceList> enumerate_dpf_nondecreasing(int m, int n, int d);

/// Every element of [n+1]^m with defect d, lexicographic.
std::vector<PreferenceList> enumerate_dpf(int m, int n, int d);

/// Orbit-count closed form (n-m+2d+1)/(n+d+1) * binom(m+n, n+d); zero for
/// defects outside the feasible range [max(m-n,0), m]. With verify set, the
/// enumerated count is attached (jobs > 1 shards the sweep by first entry).
CountReport count_nondecreasing(int m, int n, int d, bool verify = false, int jobs = 1);

/// Orbit-sum count of all defect-d lists: sum of orbit sizes over the
/// nondecreasing representatives. With verify set, |[n+1]^m with defect d|
/// is enumerated directly for comparison.
CountReport count_dpf_orbit_sum(int m, int n, int d, bool verify = false, int jobs = 1);

/// (n+1-m)(n+1)^(m-1), the parking-function count; requires m <= n.
Int count_pf(int m, int n);

namespace detail {

/// Calls f on every tuple of `length` values from [1, max_value] in
/// lexicographic order.
template <class F>
void for_each_tuple(int length, int max_value, F&& f) {
    std::vector<int> t(length, 1);
    for (;;) {
        f(const_cast<const std::vector<int>&>(t));
        int j = length - 1;
        while (j >= 0 && t[j] == max_value) --j;
        if (j < 0) break;
        ++t[j];
        for (int l = j + 1; l < length; ++l) t[l] = 1;
    }
}

/// Calls f on every nondecreasing tuple of `length` values from
/// [1, max_value] in lexicographic order.
template <class F>
void for_each_nondecreasing_tuple(int length, int max_value, F&& f) {
    std::vector<int> t(length, 1);
    for (;;) {
        f(const_cast<const std::vector<int>&>(t));
        int j = length - 1;
        while (j >= 0 && t[j] == max_value) --j;
        if (j < 0) break;
        ++t[j];
        for (int l = j + 1; l < length; ++l) t[l] = t[j];
    }
}

}  // namespace detail

}  // namespace dpf
