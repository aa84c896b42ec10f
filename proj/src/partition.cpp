#include "dpf/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace dpf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
        sum_ += parts_[i];
    }
}

int Partition::mult(int i) const noexcept {
    int c = 0;
    for (int p : parts_)
        if (p == i) ++c;
    return c;
}

std::vector<Partition> partitions_of(int m) {
    if (m < 0) throw std::invalid_argument("partitions_of: m must be >= 0");
    std::vector<Partition> out;
    if (m == 0) {
        out.emplace_back();
        return out;
    }
    std::vector<int> cur{m};
    for (;;) {
        out.emplace_back(Partition(cur));
        // Next partition in reverse-lexicographic order: shrink the last
        // part larger than 1 and refill greedily with parts of that size.
        int j = static_cast<int>(cur.size()) - 1;
        while (j >= 0 && cur[j] == 1) --j;
        if (j < 0) break;
        int q = cur[j] + static_cast<int>(cur.size()) - 1 - j;
        int x = cur[j] - 1;
        cur.resize(j);
        while (q > x) {
            cur.push_back(x);
            q -= x;
        }
        cur.push_back(q);
    }
    return out;
}

Partition sort_to_partition(const std::vector<int>& composition) {
    std::vector<int> parts;
    for (int c : composition) {
        if (c < 0) throw std::invalid_argument("sort_to_partition: negative entry");
        if (c > 0) parts.push_back(c);
    }
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(parts);
}

void for_each_weak_composition(int total, int parts,
                               const std::function<void(const std::vector<int>&)>& f) {
    if (total < 0 || parts < 0)
        throw std::invalid_argument("for_each_weak_composition: negative arguments");
    if (parts == 0) {
        if (total == 0) f({});
        return;
    }
    std::vector<int> alpha(parts, 0);
    // Lexicographic enumeration by recursion on the first free slot.
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == parts - 1) {
            alpha[pos] = rem;
            f(alpha);
            return;
        }
        for (int v = 0; v <= rem; ++v) {
            alpha[pos] = v;
            self(self, pos + 1, rem - v);
        }
    };
    rec(rec, 0, total);
}

Int count_weak_compositions(int total, int parts) {
    if (parts == 0) return total == 0 ? 1 : 0;
    return binomial(total + parts - 1, parts - 1);
}

}  // namespace dpf
