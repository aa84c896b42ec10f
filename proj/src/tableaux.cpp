#include "dpf/tableaux.hpp"

#include <limits>
#include <stdexcept>

namespace dpf {

bool validate_syt(const TwoRowSYT& t) noexcept {
    const int a = static_cast<int>(t.row1.size());
    const int b = static_cast<int>(t.row2.size());
    if (a < b) return false;
    std::vector<char> seen(static_cast<std::size_t>(a) + b + 1, 0);
    auto strictly_increasing_in_range = [&](const std::vector<int>& row) {
        int prev = 0;
        for (int v : row) {
            if (v < 1 || v > a + b || seen[v] || v <= prev) return false;
            seen[v] = 1;
            prev = v;
        }
        return true;
    };
    if (!strictly_increasing_in_range(t.row1)) return false;
    if (!strictly_increasing_in_range(t.row2)) return false;
    // seen[] is now fully set iff entries are exactly {1, ..., a+b}.
    for (int j = 0; j < b; ++j)
        if (t.row1[j] >= t.row2[j]) return false;
    return true;
}

std::vector<TwoRowSYT> enumerate_syt(int a, int b) {
    if (b < 0 || a < b) throw std::invalid_argument("enumerate_syt: need a >= b >= 0");
    std::vector<TwoRowSYT> out;
    const int total = a + b;
    // Choose row2 as a b-subset of [total] in lexicographic order; the
    // complement is row1. Valid iff columns increase.
    std::vector<int> row2(b);
    for (int j = 0; j < b; ++j) row2[j] = j + 1;
    auto emit_if_valid = [&]() {
        std::vector<int> row1;
        row1.reserve(a);
        std::size_t k = 0;
        for (int v = 1; v <= total; ++v) {
            if (k < row2.size() && row2[k] == v)
                ++k;
            else
                row1.push_back(v);
        }
        for (int j = 0; j < b; ++j)
            if (row1[j] >= row2[j]) return;
        out.push_back(TwoRowSYT{std::move(row1), row2});
    };
    if (b == 0) {
        std::vector<int> row1(a);
        for (int v = 1; v <= a; ++v) row1[v - 1] = v;
        out.push_back(TwoRowSYT{std::move(row1), {}});
        return out;
    }
    for (;;) {
        emit_if_valid();
        // next combination in lexicographic order
        int j = b - 1;
        while (j >= 0 && row2[j] == total - (b - 1 - j)) --j;
        if (j < 0) break;
        ++row2[j];
        for (int l = j + 1; l < b; ++l) row2[l] = row2[l - 1] + 1;
    }
    return out;
}

Int count_syt(int a, int b) {
    if (b < 0 || a < b) throw std::invalid_argument("count_syt: need a >= b >= 0");
    Int binom = binomial(a + b, a);
    unsigned __int128 num = static_cast<unsigned __int128>(binom) *
                            static_cast<unsigned __int128>(a - b + 1);
    if (num % static_cast<unsigned __int128>(a + 1) != 0)
        throw std::logic_error("count_syt: hook formula not divisible");
    num /= static_cast<unsigned __int128>(a + 1);
    if (num > static_cast<unsigned __int128>(std::numeric_limits<Int>::max()))
        throw_overflow("count_syt");
    return static_cast<Int>(num);
}

}  // namespace dpf
