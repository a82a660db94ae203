#pragma once

#include <utility>
#include <vector>

#include "burn/topology.hpp"
#include "burn/types.hpp"

namespace burn {

// Deterministic burning simulation. At the beginning of round t source s_t
// ignites its vertex if still unburned (a burned target invalidates the
// schedule but the simulation continues); at the end of round t every
// unburned neighbor of a vertex burned by round t-1 catches fire. Runs for
// exactly the schedule's horizon.
BurnRecord simulate(const Topology& topo, const BurningSchedule& sched);
BurnRecord simulate(const Spider& s, const BurningSchedule& sched);
BurnRecord simulate(const PathForest& f, const BurningSchedule& sched);
BurnRecord simulate(const Tree& t, const BurningSchedule& sched);

// Star-of-paths tree for a spider: head at id 0, arms numbered consecutively
// outward (the same id layout as Topology::from, which carries the full
// coordinate <-> id map).
Tree spider_to_tree(const Spider& s);

// Turn a ball cover (distinct radii in 0..m-1, balls jointly covering all
// vertices) into a schedule: sources ordered by decreasing radius; a center
// already burned at its round is replaced by the unburned vertex of smallest
// id, or dropped when none remain. Throws IncompleteCover if the balls do
// not cover the vertex set.
BurningSchedule schedule_from_cover(const Topology& topo,
                                    const std::vector<std::pair<VertexCoord, int>>& assignments,
                                    int horizon);

// All-pairs distances by BFS; -1 marks unreachable (other component).
std::vector<std::vector<int>> all_pairs_distances(const Topology& topo);

}  // namespace burn
