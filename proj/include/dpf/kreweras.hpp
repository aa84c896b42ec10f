#pragma once

#include <map>
#include <string>
#include <vector>

#include "dpf/exact.hpp"
#include "dpf/partition.hpp"

namespace dpf {

/// Polynomial in the grading variable t: coeffs[d] is the coefficient of
/// t^d. Normalized form has no trailing zeros.
using Poly = std::vector<Int>;

void poly_add_term(Poly& p, int degree, Int coeff);
void poly_trim(Poly& p);
Int poly_eval_at_one(const Poly& p);

/// Graded Frobenius characteristic of the defect-graded span of [n+1]^m in
/// the complete-homogeneous basis: for each partition of m, a polynomial in
/// t whose t^d coefficient is the h-multiplicity at defect d. Zero terms
/// are omitted.
struct GradedFrobenius {
    int m = 0;
    int n = 0;
    std::map<Partition, Poly> terms;

    Poly coefficient(const Partition& lambda) const;
    void normalize();

    friend bool operator==(const GradedFrobenius&, const GradedFrobenius&) = default;
};

/// Classical Kreweras number of a partition of m with k parts:
/// multinomial(m+1; m+1-k, mult_1, ..., mult_m) / (m+1), exact.
Int classical_kreweras(const Partition& lam);

/// Number of nondecreasing tuples in [n+1]^m with entry multiplicities lam
/// and max(predefect, 0) = d, by enumeration of value assignments.
Int defective_kreweras(int d, int n, const Partition& lam);

/// The same count through lattice paths: (n,m)-paths with dip d and north
/// runs lam. An independent route kept for cross-validation.
Int defective_kreweras_via_paths(int d, int n, const Partition& lam);

/// Graded Frobenius characteristic computed directly: one term t^(defect)
/// per weak composition of m into n+1 parts.
GradedFrobenius frobenius_char(int m, int n);

/// The same object assembled from defective Kreweras numbers:
/// c_d = Krew_{d+(n-m),n}(lambda) for d > 0, and c_0 sums the predefects
/// 0..n-m when m <= n (c_0 = 0 when m > n).
GradedFrobenius frobenius_from_kreweras(int m, int n);

/// Result of the vanishing checks for one (lambda, n).
struct VanishingReport {
    Partition lambda;
    int n = 0;
    bool pass = false;
    // Nonzero counts found where the bounds demand zero.
    struct Violation {
        std::string grading;  // "predefect" or "defect"
        int d = 0;
        Int count = 0;
    };
    std::vector<Violation> violations;
};

/// Verifies by enumeration that the content-lam counts vanish beyond their
/// bounds: no tuples at all when the parts outnumber n+1; otherwise the
/// predefect-graded counts vanish above n-k+1 and the defect-graded counts
/// (with m = |lam| cars on n spots) above m-k+1.
VanishingReport check_vanishing(const Partition& lam, int n);

/// Closed-form candidate for Krew_{d,n}(lambda) when n >= d + m - 1:
/// (m+dk)/(m+d) * 1/(m+d+1) * multinomial(m+d+1; m+d+1-k, mults). Throws
/// NonIntegerFormula if the exact rational does not reduce to an integer.
struct NonIntegerFormula : std::runtime_error {
    using std::runtime_error::runtime_error;
};
Int conjecture_formula(int d, int n, const Partition& lam);

/// Exact reduced rational value of the formula (numerator, denominator).
std::pair<Int, Int> conjecture_formula_rational(int d, const Partition& lam);

struct ConjectureMismatch {
    int m = 0, n = 0, d = 0;
    Partition lambda;
    std::string expected;  // formula value, or "p/q" when not an integer
    std::string actual;    // enumerated count
};

struct ConjectureReport {
    Int cases_checked = 0;
    std::vector<ConjectureMismatch> mismatches;

    bool clean() const { return mismatches.empty(); }
};

/// Sweeps every m <= max_m, lambda of m, d <= max_d and
/// n in [max(1, d+m-1), d+m-1+n_extra], comparing the conjectured formula
/// with the enumerated count. Mismatches are data, not errors.
ConjectureReport check_conjecture(int max_m, int max_d, int n_extra, int jobs = 1);

}  // namespace dpf
