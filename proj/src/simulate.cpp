#include "burn/simulate.hpp"

#include <algorithm>
#include <queue>

namespace burn {

BurnRecord simulate(const Topology& topo, const BurningSchedule& sched) {
    const int n = topo.order();
    const int m = sched.horizon();
    std::vector<int> src;
    src.reserve(sched.source_count());
    for (const auto& c : sched.sources()) src.push_back(topo.resolve(c));

    BurnRecord rec;
    rec.burned_at.assign(n, 0);
    rec.sources_ok = true;

    std::vector<int> frontier, next_frontier;
    for (int t = 1; t <= m; ++t) {
        next_frontier.clear();
        if (t <= static_cast<int>(src.size())) {
            int v = src[t - 1];
            if (rec.burned_at[v] == 0) {
                rec.burned_at[v] = t;
                next_frontier.push_back(v);
            } else {
                rec.sources_ok = false;
            }
        }
        for (int u : frontier)
            for (int w : topo.adj()[u])
                if (rec.burned_at[w] == 0) {
                    rec.burned_at[w] = t;
                    next_frontier.push_back(w);
                }
        frontier.swap(next_frontier);
    }

    int latest = 0;
    bool all = true;
    for (int r : rec.burned_at) {
        if (r == 0) all = false;
        latest = std::max(latest, r);
    }
    rec.completed_round = all ? latest : 0;
    rec.valid = rec.sources_ok && all;
    return rec;
}

BurnRecord simulate(const Spider& s, const BurningSchedule& sched) {
    return simulate(Topology::from(s), sched);
}
BurnRecord simulate(const PathForest& f, const BurningSchedule& sched) {
    return simulate(Topology::from(f), sched);
}
BurnRecord simulate(const Tree& t, const BurningSchedule& sched) {
    return simulate(Topology::from(t), sched);
}

Tree spider_to_tree(const Spider& s) {
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    for (int a = 0; a < s.arm_count(); ++a) {
        int prev = 0;
        for (int p = 0; p < s.arm_lengths()[a]; ++p) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Tree(s.order(), std::move(edges));
}

std::vector<std::vector<int>> all_pairs_distances(const Topology& topo) {
    const int n = topo.order();
    std::vector<std::vector<int>> dist(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& d = dist[s];
        d[s] = 0;
        std::queue<int> q;
        q.push(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : topo.adj()[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

BurningSchedule schedule_from_cover(const Topology& topo,
                                    const std::vector<std::pair<VertexCoord, int>>& assignments,
                                    int horizon) {
    if (assignments.empty()) throw DomainError("empty ball cover");
    std::vector<std::pair<int, int>> balls;  // (radius, center id)
    std::vector<char> used_radius(horizon, 0);
    for (const auto& [coord, r] : assignments) {
        if (r < 0 || r >= horizon) throw DomainError("ball radius outside 0..m-1");
        if (used_radius[r]) throw DomainError("duplicate ball radius");
        used_radius[r] = 1;
        balls.emplace_back(r, topo.resolve(coord));
    }

    auto dist = all_pairs_distances(topo);
    std::vector<char> covered(topo.order(), 0);
    for (auto [r, c] : balls)
        for (int v = 0; v < topo.order(); ++v)
            if (dist[c][v] >= 0 && dist[c][v] <= r) covered[v] = 1;
    for (int v = 0; v < topo.order(); ++v)
        if (!covered[v]) throw IncompleteCover("ball cover misses " + topo.coord_of(v).to_string());

    std::sort(balls.begin(), balls.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });

    // Place greedily, substituting for already-burned centers. A burned
    // center means an earlier source's fire already engulfs that ball's
    // eventual reach, so any unburned stand-in (or none) keeps the cover.
    std::vector<int> chosen;
    for (size_t i = 0; i < balls.size(); ++i) {
        const int round = static_cast<int>(i) + 1;
        std::vector<int> burned(topo.order(), 0);
        if (!chosen.empty()) {
            std::vector<VertexCoord> so_far;
            for (int id : chosen) so_far.push_back(topo.coord_of(id));
            BurnRecord rec = simulate(topo, BurningSchedule(so_far, round - 1));
            burned = rec.burned_at;
        }
        int c = balls[i].second;
        if (burned[c] != 0) {
            c = -1;
            for (int v = 0; v < topo.order(); ++v)
                if (burned[v] == 0) {
                    c = v;
                    break;
                }
        }
        if (c < 0) break;  // everything already burned
        chosen.push_back(c);
    }

    std::vector<VertexCoord> sources;
    sources.reserve(chosen.size());
    for (int id : chosen) sources.push_back(topo.coord_of(id));
    return BurningSchedule(std::move(sources), horizon);
}

}  // namespace burn
