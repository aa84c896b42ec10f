#pragma once

#include <compare>
#include <functional>
#include <vector>

#include "dpf/exact.hpp"

namespace dpf {

/// An integer partition: weakly decreasing positive parts. The empty
/// partition (of 0) is allowed.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // throws if not weakly decreasing >= 1

    const std::vector<int>& parts() const noexcept { return parts_; }
    int sum() const noexcept { return sum_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }

    /// Multiplicity of i among the parts.
    int mult(int i) const noexcept;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
    int sum_ = 0;
};

/// All partitions of m in reverse-lexicographic order: (m), (m-1,1), ..., (1^m).
/// For m = 0 the single empty partition is produced.
std::vector<Partition> partitions_of(int m);

/// Sorts a weak composition (nonnegative entries) into the partition of its
/// positive entries.
Partition sort_to_partition(const std::vector<int>& composition);

/// Calls f on every weak composition of `total` into `parts` nonnegative
/// entries, in lexicographic order.
void for_each_weak_composition(int total, int parts,
                               const std::function<void(const std::vector<int>&)>& f);

/// Number of weak compositions of `total` into `parts` entries.
Int count_weak_compositions(int total, int parts);

}  // namespace dpf
