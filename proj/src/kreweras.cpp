#include "dpf/kreweras.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

#include "dpf/lattice_path.hpp"
#include "dpf/parking.hpp"

namespace dpf {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

std::vector<Int> multiplicity_vector(const Partition& lam) {
    // (m+1-k, mult_1, ..., mult_m) as multinomial parts
    std::vector<Int> parts;
    parts.reserve(static_cast<std::size_t>(lam.sum()) + 1);
    for (int i = 1; i <= lam.sum(); ++i) parts.push_back(lam.mult(i));
    return parts;
}

// Calls f(values, mults) for every way to realize content lam on values in
// [1, n+1]: values strictly increasing, mults a distinct rearrangement of
// the parts.
template <class F>
void for_each_content_assignment(int n, const Partition& lam, F&& f) {
    const int k = lam.length();
    if (k == 0 || k > n + 1) return;
    std::vector<int> values(k);
    for (int j = 0; j < k; ++j) values[j] = j + 1;
    std::vector<int> mults_start(lam.parts().rbegin(), lam.parts().rend());
    for (;;) {
        std::vector<int> mults = mults_start;  // ascending start
        do {
            f(values, mults);
        } while (std::next_permutation(mults.begin(), mults.end()));
        int j = k - 1;
        while (j >= 0 && values[j] == n + 1 - (k - 1 - j)) --j;
        if (j < 0) break;
        ++values[j];
        for (int l = j + 1; l < k; ++l) values[l] = values[l - 1] + 1;
    }
}

// Predefect of the tuple (values[0]^mults[0], values[1]^mults[1], ...):
// within a run the first index dominates.
int predefect_of_assignment(const std::vector<int>& values, const std::vector<int>& mults) {
    int best = values[0] - 1;
    int start = 1;
    for (std::size_t i = 0; i < values.size(); ++i) {
        best = std::max(best, values[i] - start);
        start += mults[i];
    }
    return best;
}

}  // namespace

void poly_add_term(Poly& p, int degree, Int coeff) {
    if (static_cast<int>(p.size()) <= degree) p.resize(degree + 1, 0);
    p[degree] = checked_add(p[degree], coeff);
}

void poly_trim(Poly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Int poly_eval_at_one(const Poly& p) {
    Int s = 0;
    for (Int c : p) s = checked_add(s, c);
    return s;
}

Poly GradedFrobenius::coefficient(const Partition& lambda) const {
    auto it = terms.find(lambda);
    return it == terms.end() ? Poly{} : it->second;
}

void GradedFrobenius::normalize() {
    for (auto it = terms.begin(); it != terms.end();) {
        poly_trim(it->second);
        it = it->second.empty() ? terms.erase(it) : std::next(it);
    }
}

Int classical_kreweras(const Partition& lam) {
    const int m = lam.sum();
    require(m >= 1, "classical_kreweras: partition must be nonempty");
    std::vector<Int> parts = multiplicity_vector(lam);
    parts.insert(parts.begin(), m + 1 - lam.length());
    Int multi = multinomial(m + 1, parts);
    if (multi % (m + 1) != 0)
        throw std::logic_error("classical_kreweras: formula not divisible");
    return multi / (m + 1);
}

Int defective_kreweras(int d, int n, const Partition& lam) {
    require(d >= 0 && n >= 1, "defective_kreweras: need d >= 0 and n >= 1");
    require(lam.sum() >= 1, "defective_kreweras: partition must be nonempty");
    Int count = 0;
    for_each_content_assignment(n, lam,
                                [&](const std::vector<int>& values, const std::vector<int>& mults) {
                                    if (std::max(predefect_of_assignment(values, mults), 0) == d)
                                        ++count;
                                });
    return count;
}

Int defective_kreweras_via_paths(int d, int n, const Partition& lam) {
    require(d >= 0 && n >= 1, "defective_kreweras_via_paths: need d >= 0 and n >= 1");
    const int m = lam.sum();
    require(m >= 1, "defective_kreweras_via_paths: partition must be nonempty");
    // Enumerate all words with m norths among m+n steps.
    Int count = 0;
    std::vector<int> north_pos(m);
    std::iota(north_pos.begin(), north_pos.end(), 0);
    const int total = m + n;
    for (;;) {
        std::string word(total, 'E');
        for (int p : north_pos) word[p] = 'N';
        LatticePath path(std::move(word));
        if (dip(path) == d && runs(path) == lam) ++count;
        int j = m - 1;
        while (j >= 0 && north_pos[j] == total - (m - j)) --j;
        if (j < 0) break;
        ++north_pos[j];
        for (int l = j + 1; l < m; ++l) north_pos[l] = north_pos[l - 1] + 1;
    }
    return count;
}

GradedFrobenius frobenius_char(int m, int n) {
    require(m >= 1 && n >= 1, "frobenius_char: need m, n >= 1");
    GradedFrobenius ch;
    ch.m = m;
    ch.n = n;
    for_each_weak_composition(m, n + 1, [&](const std::vector<int>& alpha) {
        std::vector<int> tuple;
        tuple.reserve(m);
        for (int v = 0; v < n + 1; ++v)
            tuple.insert(tuple.end(), alpha[v], v + 1);
        int d = detail::defect_sorted(tuple, n);
        poly_add_term(ch.terms[sort_to_partition(alpha)], d, 1);
    });
    ch.normalize();
    return ch;
}

GradedFrobenius frobenius_from_kreweras(int m, int n) {
    require(m >= 1 && n >= 1, "frobenius_from_kreweras: need m, n >= 1");
    GradedFrobenius ch;
    ch.m = m;
    ch.n = n;
    for (const Partition& lam : partitions_of(m)) {
        Poly poly;
        if (m <= n) {
            // Predefects 0..n-m all land at defect zero.
            Int c0 = 0;
            for (int e = 0; e <= n - m; ++e)
                c0 = checked_add(c0, defective_kreweras(e, n, lam));
            poly_add_term(poly, 0, c0);
        }
        for (int d = 1; d <= m; ++d) {
            int shifted = d + (n - m);
            if (shifted < 0) continue;
            poly_add_term(poly, d, defective_kreweras(shifted, n, lam));
        }
        poly_trim(poly);
        if (!poly.empty()) ch.terms[lam] = std::move(poly);
    }
    return ch;
}

VanishingReport check_vanishing(const Partition& lam, int n) {
    require(n >= 1, "check_vanishing: need n >= 1");
    const int m = lam.sum();
    require(m >= 1, "check_vanishing: partition must be nonempty");
    const int k = lam.length();
    VanishingReport report;
    report.lambda = lam;
    report.n = n;

    std::map<int, Int> by_predefect;
    std::map<int, Int> by_defect;
    for_each_content_assignment(
        n, lam, [&](const std::vector<int>& values, const std::vector<int>& mults) {
            int pd = std::max(predefect_of_assignment(values, mults), 0);
            ++by_predefect[pd];
            ++by_defect[std::max(pd + (m - n), 0)];
        });

    if (n < k - 1) {
        // No room for k distinct values: every count must be zero.
        for (const auto& [d, c] : by_predefect)
            report.violations.push_back({"predefect", d, c});
    } else {
        for (const auto& [d, c] : by_predefect)
            if (d > n - k + 1 && c != 0) report.violations.push_back({"predefect", d, c});
        for (const auto& [d, c] : by_defect)
            if (d > std::max(m - k + 1, 0) && c != 0)
                report.violations.push_back({"defect", d, c});
    }
    report.pass = report.violations.empty();
    return report;
}

std::pair<Int, Int> conjecture_formula_rational(int d, const Partition& lam) {
    const int m = lam.sum();
    const int k = lam.length();
    std::vector<Int> parts = multiplicity_vector(lam);
    parts.insert(parts.begin(), m + d + 1 - k);
    Int multi = multinomial(m + d + 1, parts);
    Int num = checked_mul(static_cast<Int>(m + d * k), multi);
    Int den = checked_mul(static_cast<Int>(m + d), static_cast<Int>(m + d + 1));
    Int g = std::gcd(num, den);
    return {num / g, den / g};
}

Int conjecture_formula(int d, int n, const Partition& lam) {
    require(d >= 0 && n >= 1, "conjecture_formula: need d >= 0 and n >= 1");
    const int m = lam.sum();
    require(m >= 1, "conjecture_formula: partition must be nonempty");
    require(n >= d + m - 1, "conjecture_formula: requires n >= d + m - 1");
    auto [num, den] = conjecture_formula_rational(d, lam);
    if (den != 1)
        throw NonIntegerFormula("conjecture formula is not an integer: " +
                                std::to_string(num) + "/" + std::to_string(den));
    return num;
}

ConjectureReport check_conjecture(int max_m, int max_d, int n_extra, int jobs) {
    require(max_m >= 1 && max_d >= 0 && n_extra >= 0,
            "check_conjecture: bounds must be nonnegative (max_m >= 1)");
    struct Case {
        int m, n, d;
        Partition lambda;
    };
    std::vector<Case> cases;
    for (int m = 1; m <= max_m; ++m) {
        for (const Partition& lam : partitions_of(m)) {
            for (int d = 0; d <= max_d; ++d) {
                int lo = std::max(1, d + m - 1);
                for (int n = lo; n <= d + m - 1 + n_extra; ++n)
                    cases.push_back({m, n, d, lam});
            }
        }
    }

    std::vector<std::vector<ConjectureMismatch>> found(cases.size());
    auto run_case = [&](std::size_t idx) {
        const Case& c = cases[idx];
        Int actual = defective_kreweras(c.d, c.n, c.lambda);
        auto [num, den] = conjecture_formula_rational(c.d, c.lambda);
        if (den != 1) {
            found[idx].push_back({c.m, c.n, c.d, c.lambda,
                                  std::to_string(num) + "/" + std::to_string(den),
                                  std::to_string(actual)});
        } else if (num != actual) {
            found[idx].push_back(
                {c.m, c.n, c.d, c.lambda, std::to_string(num), std::to_string(actual)});
        }
    };

    if (jobs <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) run_case(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (;;) {
                std::size_t i = next.fetch_add(1);
                if (i >= cases.size()) return;
                run_case(i);
            }
        };
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    ConjectureReport report;
    report.cases_checked = static_cast<Int>(cases.size());
    for (auto& v : found)
        for (auto& mm : v) report.mismatches.push_back(std::move(mm));
    return report;
}

}  // namespace dpf
