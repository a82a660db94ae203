#include "burn/partitions.hpp"

#include <map>

namespace burn {

namespace {

void emit(int total, int parts, int max_part, std::vector<int>& acc,
          const std::function<void(const std::vector<int>&)>& fn) {
    if (parts == 1) {
        if (total >= 1 && total <= max_part) {
            acc.push_back(total);
            fn(acc);
            acc.pop_back();
        }
        return;
    }
    // first part from high to low keeps the stream lexicographically decreasing
    int hi = std::min(max_part, total - (parts - 1));
    int lo = (total + parts - 1) / parts;  // ceil(total/parts)
    for (int first = hi; first >= lo; --first) {
        acc.push_back(first);
        emit(total - first, parts - 1, first, acc, fn);
        acc.pop_back();
    }
}

}  // namespace

void for_each_partition(int total, int parts,
                        const std::function<void(const std::vector<int>&)>& fn) {
    if (parts < 1 || total < parts)
        throw DomainError("partition of " + std::to_string(total) + " into " +
                          std::to_string(parts) + " positive parts");
    std::vector<int> acc;
    acc.reserve(parts);
    emit(total, parts, total, acc, fn);
}

std::vector<std::vector<int>> partitions(int total, int parts) {
    std::vector<std::vector<int>> out;
    for_each_partition(total, parts, [&](const std::vector<int>& p) { out.push_back(p); });
    return out;
}

long long partition_count(int total, int parts) {
    if (parts < 1 || total < parts)
        throw DomainError("partition count domain");
    std::map<std::pair<int, int>, long long> memo;
    std::function<long long(int, int)> p = [&](int k, int n) -> long long {
        if (n == 0) return k == 0 ? 1 : 0;
        if (k < n) return 0;
        auto it = memo.find({k, n});
        if (it != memo.end()) return it->second;
        long long v = p(k - 1, n - 1) + p(k - n, n);
        memo[{k, n}] = v;
        return v;
    };
    return p(total, parts);
}

}  // namespace burn
