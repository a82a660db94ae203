#pragma once

#include "burn/types.hpp"

namespace burn {

// Largest N such that every n-spider of order at most N is m-burnable:
// m^2 + n - 2 when m > n, m^2 + n - m when 2 <= m <= n.
int I_sp(int n, int m);

// Largest N such that every path forest with n paths of order at most N is
// m-burnable: m^2 - (n-1)^2, defined for m >= n >= 2 only.
int I_pf(int n, int m);

// Extremal instances of order I_sp(n,m)+1 / I_pf(n,m)+1 that are not
// m-burnable: a long arm of m^2-1 plus unit arms when m > n, m arms of
// length m plus unit arms when m <= n; the forest (m^2-n^2+2, 2, ..., 2).
Spider witness_spider(int n, int m);
PathForest witness_forest(int n, int m);

// Whether the spider contains the balanced m-spider of order m^2+1 as a
// subtree. For m >= 3 this is exactly l_m >= m (only the head can host the
// balanced head); for m = 2 the balanced spider is a bare path of order 5.
bool spider_contains_balanced(const Spider& s, int m);

}  // namespace burn
