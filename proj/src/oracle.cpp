#include "burn/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <unordered_set>

#include "burn/simulate.hpp"

namespace burn {

namespace {

// Minimal fixed-size bitset over a dynamic word count.
struct Bits {
    std::vector<std::uint64_t> w;

    explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    int count() const {
        int c = 0;
        for (auto x : w) c += __builtin_popcountll(x);
        return c;
    }
    bool none() const {
        for (auto x : w)
            if (x) return false;
        return true;
    }
    // this & other == this
    bool subset_of(const Bits& other) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & ~other.w[i]) return false;
        return true;
    }
    Bits and_with(const Bits& other) const {
        Bits r = *this;
        for (size_t i = 0; i < w.size(); ++i) r.w[i] &= other.w[i];
        return r;
    }
    void subtract(const Bits& other) {
        for (size_t i = 0; i < w.size(); ++i) w[i] &= ~other.w[i];
    }
    bool operator==(const Bits&) const = default;
};

struct CoverSearch {
    const Topology& topo;
    int m;
    int n;
    std::vector<std::vector<int>> dist;
    std::vector<Bits> ball;     // ball[v * m + r]
    std::vector<int> max_ball;  // largest ball size per radius
    std::vector<int> ecc;
    long long nodes = 0;

    std::vector<std::pair<int, int>> placed;  // (center, radius)
    std::vector<char> radius_used;

    CoverSearch(const Topology& t, int rounds)
        : topo(t), m(rounds), n(t.order()), dist(all_pairs_distances(t)) {
        ball.assign(static_cast<size_t>(n) * m, Bits(n));
        max_ball.assign(m, 0);
        for (int v = 0; v < n; ++v)
            for (int r = 0; r < m; ++r) {
                Bits& b = ball[static_cast<size_t>(v) * m + r];
                for (int u = 0; u < n; ++u)
                    if (dist[v][u] >= 0 && dist[v][u] <= r) b.set(u);
                max_ball[r] = std::max(max_ball[r], b.count());
            }
        ecc.assign(n, 0);
        for (int v = 0; v < n; ++v)
            for (int u = 0; u < n; ++u) ecc[v] = std::max(ecc[v], dist[v][u]);
        radius_used.assign(m, 0);
    }

    const Bits& ball_at(int v, int r) const { return ball[static_cast<size_t>(v) * m + r]; }

    // Vertex the search must commit to next: the uncovered vertex farthest
    // from every placed center (highest eccentricity when nothing is placed).
    int pick_target(const Bits& uncovered) const {
        int best = -1;
        long long best_key = -1;
        for (int v = 0; v < n; ++v) {
            if (!uncovered.test(v)) continue;
            long long key;
            if (placed.empty()) {
                key = ecc[v];
            } else {
                int dmin = INT32_MAX;
                for (auto [c, r] : placed) {
                    int d = dist[c][v];
                    if (d < 0) d = INT32_MAX / 2;  // other component: effectively infinite
                    dmin = std::min(dmin, d);
                }
                key = dmin;
            }
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        return best;
    }

    bool prune(const Bits& uncovered) const {
        int needed = uncovered.count();
        int avail = 0, rmax = -1;
        for (int r = 0; r < m; ++r)
            if (!radius_used[r]) {
                avail += max_ball[r];
                rmax = r;
            }
        if (avail < needed) return true;
        if (rmax < 0) return true;  // uncovered nonempty, no radii left
        // Vertices pairwise farther apart than 2*rmax need distinct balls.
        int unused = 0;
        for (int r = 0; r < m; ++r)
            if (!radius_used[r]) ++unused;
        std::vector<int> scattered;
        for (int v = 0; v < n; ++v) {
            if (!uncovered.test(v)) continue;
            bool far = true;
            for (int s : scattered) {
                int d = dist[s][v];
                if (d >= 0 && d <= 2 * rmax) {
                    far = false;
                    break;
                }
            }
            if (far) {
                scattered.push_back(v);
                if (static_cast<int>(scattered.size()) > unused) return true;
            }
        }
        return false;
    }

    bool search(Bits uncovered) {
        ++nodes;
        if (uncovered.none()) return true;
        if (prune(uncovered)) return false;
        int u = pick_target(uncovered);

        for (int r = m - 1; r >= 0; --r) {
            if (radius_used[r]) continue;
            // candidate centers reaching u, strongest (then lowest id) first,
            // minus centers whose uncovered reach is contained in another's
            std::vector<int> cand;
            for (int c = 0; c < n; ++c)
                if (dist[c][u] >= 0 && dist[c][u] <= r) cand.push_back(c);
            std::vector<Bits> reach;
            reach.reserve(cand.size());
            for (int c : cand) reach.push_back(ball_at(c, r).and_with(uncovered));
            std::vector<char> dominated(cand.size(), 0);
            for (size_t i = 0; i < cand.size(); ++i)
                for (size_t j = 0; j < cand.size(); ++j) {
                    if (i == j || dominated[i] || dominated[j]) continue;
                    if (reach[i].subset_of(reach[j]) && (!(reach[i] == reach[j]) || j < i))
                        dominated[i] = 1;
                }
            std::vector<int> order;
            for (size_t i = 0; i < cand.size(); ++i)
                if (!dominated[i]) order.push_back(static_cast<int>(i));
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                int ca = reach[a].count(), cb = reach[b].count();
                if (ca != cb) return ca > cb;
                return cand[a] < cand[b];
            });

            radius_used[r] = 1;
            for (int i : order) {
                placed.emplace_back(cand[i], r);
                Bits rest = uncovered;
                rest.subtract(reach[i]);
                if (search(std::move(rest))) return true;
                placed.pop_back();
            }
            radius_used[r] = 0;
        }
        return false;
    }
};

BurningSchedule forest_witness(const PathForest& f, int rounds,
                               const std::vector<std::uint32_t>& subsets) {
    // One ball per assigned radius, laid consecutively from each path's low
    // end with overhang truncated; rounds follow globally decreasing radius.
    std::vector<std::pair<int, VertexCoord>> balls;  // (radius, center)
    for (int j = 0; j < f.path_count(); ++j) {
        int L = f.path_orders()[j];
        int covered = 0;
        for (int r = rounds - 1; r >= 0; --r) {
            if (!((subsets[j] >> r) & 1)) continue;
            if (covered >= L) break;
            int c = std::min(covered + r + 1, L);
            balls.emplace_back(r, VertexCoord::path(j + 1, c));
            covered = std::min(c + r, L);
        }
    }
    std::sort(balls.begin(), balls.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    std::vector<VertexCoord> sources;
    sources.reserve(balls.size());
    for (auto& [r, c] : balls) sources.push_back(c);
    return BurningSchedule(std::move(sources), rounds);
}

int bn_upper_bound(int order) { return order; }  // one source per vertex always works

}  // namespace

OracleVerdict forest_burnable_exact(const PathForest& f, int rounds) {
    if (rounds < 1) throw DomainError("rounds must be positive");
    OracleVerdict verdict;
    const int n = f.path_count();
    if (n > rounds) return verdict;  // fewer sources than components
    if (rounds > 31) throw SearchCapExceeded("forest oracle capped at 31 rounds");

    const auto& orders = f.path_orders();
    std::vector<int> lens(rounds);
    for (int r = 0; r < rounds; ++r) lens[r] = 2 * r + 1;

    // suffix needs for pruning
    std::vector<long long> need(n + 1, 0);
    for (int j = n - 1; j >= 0; --j) need[j] = need[j + 1] + orders[j];

    std::vector<std::uint32_t> chosen(n, 0);
    std::unordered_set<std::uint64_t> failed;  // (path index, радius mask)
    long long nodes = 0;

    // Assign path j a subset of the available radii with sufficient sum.
    // Subsets are enumerated by descending radius and closed at the first
    // sufficient sum, which is complete: any solution can be trimmed to such
    // a prefix, freeing radii for the remaining paths.
    std::function<bool(int, std::uint32_t)> assign = [&](int j, std::uint32_t avail) -> bool {
        ++nodes;
        if (j == n) return true;
        long long total = 0;
        for (int r = 0; r < rounds; ++r)
            if ((avail >> r) & 1) total += lens[r];
        if (total < need[j]) return false;
        std::uint64_t key = (static_cast<std::uint64_t>(j) << 32) | avail;
        if (failed.count(key)) return false;

        const int target = orders[j];
        std::function<bool(int, int, std::uint32_t)> pick = [&](int r, int sum,
                                                                std::uint32_t mask) -> bool {
            if (sum >= target) {
                chosen[j] = mask;
                return assign(j + 1, avail & ~mask);
            }
            for (int rr = r; rr >= 0; --rr) {
                if (!((avail >> rr) & 1)) continue;
                if (pick(rr - 1, sum + lens[rr], mask | (1u << rr))) return true;
            }
            return false;
        };
        if (pick(rounds - 1, 0, 0)) return true;
        failed.insert(key);
        return false;
    };

    std::uint32_t all = rounds >= 31 ? 0x7fffffffu : ((1u << rounds) - 1);
    verdict.burnable = assign(0, all);
    verdict.nodes_explored = nodes;
    if (verdict.burnable) verdict.witness = forest_witness(f, rounds, chosen);
    return verdict;
}

OracleVerdict burnable_exact(const Topology& topo, int rounds, const OracleConfig& cfg) {
    if (rounds < 1) throw DomainError("rounds must be positive");
    if (topo.order() > cfg.search_cap)
        throw SearchCapExceeded("order " + std::to_string(topo.order()) + " above search cap " +
                                std::to_string(cfg.search_cap));
    OracleVerdict verdict;
    if (topo.component_count() > rounds) return verdict;

    CoverSearch cs(topo, rounds);
    Bits all(topo.order());
    for (int v = 0; v < topo.order(); ++v) all.set(v);
    verdict.burnable = cs.search(std::move(all));
    verdict.nodes_explored = cs.nodes;
    if (verdict.burnable) {
        std::vector<std::pair<VertexCoord, int>> assignments;
        for (auto [c, r] : cs.placed) assignments.emplace_back(topo.coord_of(c), r);
        verdict.witness = schedule_from_cover(topo, assignments, rounds);
    }
    return verdict;
}

OracleVerdict tree_burnable_exact(const Tree& t, int rounds, const OracleConfig& cfg) {
    return burnable_exact(Topology::from(t), rounds, cfg);
}

OracleVerdict spider_burnable_exact(const Spider& s, int rounds, const OracleConfig& cfg) {
    return burnable_exact(Topology::from(s), rounds, cfg);
}

int burning_number_exact(const Spider& s, const OracleConfig& cfg) {
    Topology topo = Topology::from(s);
    for (int m = 1; m <= bn_upper_bound(s.order()); ++m)
        if (burnable_exact(topo, m, cfg).burnable) return m;
    throw BurnError("no burning number found");  // unreachable
}

int burning_number_exact(const PathForest& f, const OracleConfig& cfg) {
    (void)cfg;
    for (int m = 1; m <= bn_upper_bound(f.order()); ++m)
        if (forest_burnable_exact(f, m).burnable) return m;
    throw BurnError("no burning number found");  // unreachable
}

int burning_number_exact(const Tree& t, const OracleConfig& cfg) {
    Topology topo = Topology::from(t);
    for (int m = 1; m <= bn_upper_bound(t.order()); ++m)
        if (burnable_exact(topo, m, cfg).burnable) return m;
    throw BurnError("no burning number found");  // unreachable
}

}  // namespace burn
