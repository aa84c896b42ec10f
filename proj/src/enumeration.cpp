#include "dpf/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <stdexcept>
#include <thread>

namespace dpf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_counts(int m, int n, int d) {
    require(m >= 1 && n >= 1 && d >= 0, "need m, n >= 1 and d >= 0");
}

// Runs f(first_value) for every first entry in [1, n+1], sharded over
// `jobs` threads, and sums the returned counts.
Int sharded_sum_by_first_entry(int n, int jobs, const std::function<Int(int)>& f) {
    const int values = n + 1;
    if (jobs <= 1) {
        Int total = 0;
        for (int v = 1; v <= values; ++v) total = checked_add(total, f(v));
        return total;
    }
    std::atomic<int> next{1};
    std::vector<Int> partial(values + 1, 0);
    auto worker = [&] {
        for (;;) {
            int v = next.fetch_add(1);
            if (v > values) return;
            partial[v] = f(v);
        }
    };
    std::vector<std::thread> pool;
    const int threads = std::min(jobs, values);
    pool.reserve(threads);
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    Int total = 0;
    for (Int p : partial) total = checked_add(total, p);
    return total;
}

// Count of tuples in [n+1]^m with defect d and the given first entry;
// nondecreasing only when nd is set.
Int count_with_first_entry(int m, int n, int d, int first, bool nd) {
    Int count = 0;
    std::vector<int> tuple(m);
    tuple[0] = first;
    if (m == 1) {
        return detail::defect_any_order({first}, n) == d ? 1 : 0;
    }
    auto body = [&](const std::vector<int>& rest) {
        std::copy(rest.begin(), rest.end(), tuple.begin() + 1);
        if (detail::defect_any_order(tuple, n) == d) ++count;
    };
    if (nd) {
        // tails nondecreasing and starting at >= first
        std::vector<int> t(m - 1, first);
        for (;;) {
            body(t);
            int j = m - 2;
            while (j >= 0 && t[j] == n + 1) --j;
            if (j < 0) break;
            ++t[j];
            for (int l = j + 1; l < m - 1; ++l) t[l] = t[j];
        }
    } else {
        detail::for_each_tuple(m - 1, n + 1, body);
    }
    return count;
}

}  // namespace

std::vector<PreferenceList> enumerate_dpf_nondecreasing(int m, int n, int d) {
    require_counts(m, n, d);
    std::vector<PreferenceList> out;
    detail::for_each_nondecreasing_tuple(m, n + 1, [&](const std::vector<int>& t) {
        if (detail::defect_sorted(t, n) == d) out.emplace_back(n, t);
    });
    return out;
}

std::vector<PreferenceList> enumerate_dpf(int m, int n, int d) {
    require_counts(m, n, d);
    std::vector<PreferenceList> out;
    detail::for_each_tuple(m, n + 1, [&](const std::vector<int>& t) {
        if (detail::defect_any_order(t, n) == d) out.emplace_back(n, t);
    });
    return out;
}

CountReport count_nondecreasing(int m, int n, int d, bool verify, int jobs) {
    require_counts(m, n, d);
    CountReport report;
    report.method = "formula";
    if (d >= std::max(m - n, 0) && d <= m) {
        // Hook-length count for shape (n+d, m-d); the factor n-m+2d+1 is
        // positive exactly when the shape is a valid two-row shape.
        Int binom = binomial(m + n, n + d);
        Int num = checked_mul(binom, static_cast<Int>(n - m + 2 * d + 1));
        if (num % (n + d + 1) != 0)
            throw std::logic_error("count_nondecreasing: formula not divisible");
        report.formula_value = num / (n + d + 1);
    }
    if (verify) {
        report.enumerated_value = sharded_sum_by_first_entry(
            n, jobs, [&](int v) { return count_with_first_entry(m, n, d, v, true); });
    }
    return report;
}

CountReport count_dpf_orbit_sum(int m, int n, int d, bool verify, int jobs) {
    require_counts(m, n, d);
    CountReport report;
    report.method = "orbit-sum";
    Int total = 0;
    detail::for_each_nondecreasing_tuple(m, n + 1, [&](const std::vector<int>& t) {
        if (detail::defect_sorted(t, n) != d) return;
        std::vector<Int> mult(static_cast<std::size_t>(n) + 1, 0);
        for (int v : t) ++mult[v - 1];
        total = checked_add(total, multinomial(m, mult));
    });
    report.formula_value = total;
    if (verify) {
        report.enumerated_value = sharded_sum_by_first_entry(
            n, jobs, [&](int v) { return count_with_first_entry(m, n, d, v, false); });
    }
    return report;
}

Int count_pf(int m, int n) {
    require(m >= 1 && n >= 1, "count_pf: need m, n >= 1");
    require(m <= n, "count_pf: defined only for m <= n");
    return checked_mul(static_cast<Int>(n + 1 - m), ipow(n + 1, m - 1));
}

}  // namespace dpf
