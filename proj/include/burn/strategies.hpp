#pragma once

#include <optional>
#include <string>

#include "burn/types.hpp"

namespace burn {

// Families of instances a constructive burner is allowed to reject: each is
// provably not burnable in the requested rounds.
enum class ExceptionalFamily {
    ForestTwoPaths_m2minus2_2,  // two paths of orders m^2-2 and 2
    ForestSmallest2,            // order <= 3n-2 with smallest path order two
    ForestMain_2s,              // orders (m^2-n^2+2, 2, ..., 2)
    SpiderContainsBalanced,     // contains the balanced m-spider of order m^2+1
};

const char* family_name(ExceptionalFamily f);

// Outcome of running a constructive burning strategy. A Schedule outcome
// always re-simulates valid within the requested rounds (enforced before
// returning); ProofCaseUnreachable flags a broken transcription, never a
// legitimate answer.
struct StrategyOutcome {
    enum class Kind { Schedule, Exceptional, HypothesisUnmet, ProofCaseUnreachable };

    Kind kind = Kind::HypothesisUnmet;
    std::optional<BurningSchedule> schedule;
    std::optional<ExceptionalFamily> family;
    std::string detail;
    int head_burn_round = 0;  // spiders only

    bool is_schedule() const { return kind == Kind::Schedule; }
    bool is_exceptional() const { return kind == Kind::Exceptional; }
};

// Path forest with n paths, order <= 4n-4, smallest path a single vertex,
// second-smallest >= 3: burned in n rounds, one source at each path center,
// longest first.
StrategyOutcome burn_forest_small_with_one(const PathForest& f, int rounds);

// n-spider, m > n, order <= m^2+n-2, every arm at most 2m-1: burned in m
// rounds with the head lit in round 1 (or round 2 in one corner case).
StrategyOutcome burn_spider_short_arms(const Spider& s, int rounds);

// Path forest with n paths, m >= n, order <= 3m-1-n: burned in m rounds by
// repeatedly splitting off the longest path.
StrategyOutcome burn_forest_linear(const PathForest& f, int rounds);

// n-spider of order <= n^2+3n-1 burned in n+1 rounds, leaving at least
// min(shortest arm, n-1) rounds after the head burns.
StrategyOutcome burn_spider_nplus1(const Spider& s);

// n-spider, m > n, order <= m^2+n-2, burned in m rounds. Two interchangeable
// engines: TailPeel strips 2m-1 vertices off the longest arm per round
// budget; ForestReduction burns the head first and hands the arm tails to
// the forest strategies, guaranteeing at least min(shortest arm, m-2)
// rounds after the head burns.
enum class SpiderMainEngine { TailPeel, ForestReduction };
StrategyOutcome burn_spider_main(const Spider& s, int rounds, SpiderMainEngine engine);

// n-spider, n >= m >= 2, order <= m^2+n-2: burned in m rounds unless it
// contains the balanced m-spider of order m^2+1 (criterion l_m >= m).
StrategyOutcome burn_spider_m_le_n(const Spider& s, int rounds);

// Two paths of total order <= m^2: burned in m rounds unless the orders are
// exactly (m^2-2, 2).
StrategyOutcome burn_forest_two(const PathForest& f, int rounds);

// n paths of total order <= 3n-2: burned in n rounds unless the smallest
// path order is two.
StrategyOutcome burn_forest_3nminus2(const PathForest& f, int rounds);

// n paths, m >= n >= 2, order <= m^2-(n-1)^2+1: burned in m rounds unless
// the instance is the unique forest (m^2-n^2+2, 2, ..., 2) at the bound.
StrategyOutcome burn_forest_main(const PathForest& f, int rounds);

}  // namespace burn
