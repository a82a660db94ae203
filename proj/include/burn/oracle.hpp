#pragma once

#include <optional>

#include "burn/topology.hpp"
#include "burn/types.hpp"

namespace burn {

struct OracleConfig {
    int search_cap = 400;  // largest order the cover search will take on
};

struct OracleVerdict {
    bool burnable = false;
    std::optional<BurningSchedule> witness;  // present iff burnable
    long long nodes_explored = 0;
};

// Exact burnability of a path forest in `rounds` rounds. A set of balls with
// radius set S covers a path of order L iff sum over S of (2r+1) >= L, so
// the question reduces to assigning disjoint subsets of the radii 0..m-1 to
// the paths with sufficient sums; decided by exact backtracking over subset
// assignments. Witnesses lay balls consecutively from each path's low end.
OracleVerdict forest_burnable_exact(const PathForest& f, int rounds);

// Exact burnability by branch-and-prune ball-cover search over any
// adjacency (works on disconnected structures too). Throws SearchCapExceeded
// above the configured order cap.
OracleVerdict burnable_exact(const Topology& topo, int rounds, const OracleConfig& cfg = {});
OracleVerdict tree_burnable_exact(const Tree& t, int rounds, const OracleConfig& cfg = {});
OracleVerdict spider_burnable_exact(const Spider& s, int rounds, const OracleConfig& cfg = {});

// Smallest m whose burnability verdict is true. Starts at m = 1 (cheap
// rejections: low m dies on the coverage bound immediately), so no formula
// is assumed by the search.
int burning_number_exact(const Spider& s, const OracleConfig& cfg = {});
int burning_number_exact(const PathForest& f, const OracleConfig& cfg = {});
int burning_number_exact(const Tree& t, const OracleConfig& cfg = {});

}  // namespace burn
