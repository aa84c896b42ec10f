#pragma once

#include <compare>
#include <vector>

#include "dpf/exact.hpp"

namespace dpf {

/// A standard Young tableau of two-row shape (a, b) with a >= b >= 0:
/// rows strictly increasing, columns strictly increasing, entries exactly
/// {1, ..., a+b}. The second row may be empty.
struct TwoRowSYT {
    std::vector<int> row1;
    std::vector<int> row2;

    auto operator<=>(const TwoRowSYT&) const = default;
};

/// True iff all TwoRowSYT invariants hold.
bool validate_syt(const TwoRowSYT& t) noexcept;

/// Every tableau of shape (a, b), each exactly once, ordered
/// lexicographically by row2.
std::vector<TwoRowSYT> enumerate_syt(int a, int b);

/// Hook-length count for shape (a, b): (a - b + 1)/(a + 1) * binom(a+b, a),
/// computed exactly.
Int count_syt(int a, int b);

}  // namespace dpf
