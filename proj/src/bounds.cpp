#include "burn/bounds.hpp"

namespace burn {

int I_sp(int n, int m) {
    if (n < 2 || m < 2) throw DomainError("I_sp needs n >= 2 and m >= 2");
    return m > n ? m * m + n - 2 : m * m + n - m;
}

int I_pf(int n, int m) {
    if (n < 2) throw DomainError("I_pf needs n >= 2");
    if (m < n) throw DomainError("I_pf is defined for m >= n only");
    return m * m - (n - 1) * (n - 1);
}

Spider witness_spider(int n, int m) {
    if (n < 2 || m < 2) throw DomainError("witness_spider needs n >= 2 and m >= 2");
    std::vector<int> arms;
    if (m > n) {
        arms.push_back(m * m - 1);
        arms.insert(arms.end(), n - 1, 1);
    } else {
        arms.insert(arms.end(), m, m);
        arms.insert(arms.end(), n - m, 1);
    }
    return Spider(std::move(arms));
}

PathForest witness_forest(int n, int m) {
    if (n < 2) throw DomainError("witness_forest needs n >= 2");
    if (m < n) throw DomainError("witness_forest needs m >= n");
    std::vector<int> orders;
    orders.push_back(m * m - n * n + 2);
    orders.insert(orders.end(), n - 1, 2);
    return PathForest(std::move(orders));
}

bool spider_contains_balanced(const Spider& s, int m) {
    if (m < 2) throw DomainError("balanced spider needs m >= 2");
    if (m == 2) {
        // path of order 5 along the two longest arms
        return s.arm_lengths()[0] + s.arm_lengths()[1] >= 4;
    }
    if (s.arm_count() < m) return false;
    return s.arm_lengths()[m - 1] >= m;
}

}  // namespace burn
