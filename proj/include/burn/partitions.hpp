#pragma once

#include <functional>
#include <vector>

#include "burn/types.hpp"

namespace burn {

// Partitions of `total` into exactly `parts` positive non-increasing parts,
// emitted in lexicographically decreasing order, each exactly once.
// Throws DomainError when total < parts or parts < 1.
void for_each_partition(int total, int parts,
                        const std::function<void(const std::vector<int>&)>& fn);

std::vector<std::vector<int>> partitions(int total, int parts);

// Number of such partitions (p(total,parts) = p(total-1,parts-1) + p(total-parts,parts)).
long long partition_count(int total, int parts);

}  // namespace burn
