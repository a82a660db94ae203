#include <doctest.h>

#include <random>

#include "burn/json_io.hpp"
#include "burn/simulate.hpp"
#include "burn/topology.hpp"

using namespace burn;

TEST_CASE("canonical forms sort and validate") {
    Spider s({1, 3, 2});
    CHECK(s.arm_lengths() == std::vector<int>{3, 2, 1});
    CHECK(s.order() == 7);
    CHECK_THROWS_AS(Spider({3}), DomainError);
    CHECK_THROWS_AS(Spider({3, 0}), DomainError);

    PathForest f({2, 5, 5});
    CHECK(f.path_orders() == std::vector<int>{5, 5, 2});
    CHECK(f.order() == 12);
    CHECK_THROWS_AS(PathForest({}), DomainError);

    CHECK_THROWS_AS(Tree(3, {{0, 1}}), DomainError);           // too few edges
    CHECK_THROWS_AS(Tree(4, {{0, 1}, {0, 1}, {2, 3}}), DomainError);  // disconnected multi-edge
    CHECK_THROWS_AS(BurningSchedule({}, 3), DomainError);
    CHECK_THROWS_AS(BurningSchedule({VertexCoord::head(), VertexCoord::head()}, 3), DomainError);
    CHECK_THROWS_AS(BurningSchedule({VertexCoord::head()}, 0), DomainError);
}

TEST_CASE("spider_to_tree produces the star-of-paths layout") {
    SUBCASE("three unit arms give the 4-vertex star") {
        Tree t = spider_to_tree(Spider({1, 1, 1}));
        CHECK(t.order() == 4);
        CHECK(t.adj()[0].size() == 3);
    }
    SUBCASE("balanced three arms of three") {
        Tree t = spider_to_tree(Spider({3, 3, 3}));
        CHECK(t.order() == 10);
        CHECK(t.adj()[0].size() == 3);
    }
    SUBCASE("one long arm contains a long path") {
        Tree t = spider_to_tree(Spider({8, 1, 1}));
        CHECK(t.order() == 11);
        // longest path runs leaf-to-leaf through the head: 10 vertices
        Topology topo = Topology::from(t);
        auto dist = all_pairs_distances(topo);
        int diameter = 0;
        for (int u = 0; u < t.order(); ++u)
            for (int v = 0; v < t.order(); ++v) diameter = std::max(diameter, dist[u][v]);
        CHECK(diameter == 9);
    }
}

TEST_CASE("simulation matches the hand-checked path cover") {
    PathForest path9({9});
    BurningSchedule sched(
        {VertexCoord::path(1, 3), VertexCoord::path(1, 7), VertexCoord::path(1, 9)}, 3);
    BurnRecord rec = simulate(path9, sched);
    CHECK(rec.valid);
    CHECK(rec.completed_round == 3);
    CHECK(rec.burned_at == std::vector<int>{3, 2, 1, 2, 3, 3, 2, 3, 3});
}

TEST_CASE("single vertex burns in one round") {
    PathForest one({1});
    BurnRecord rec = simulate(one, BurningSchedule({VertexCoord::path(1, 1)}, 1));
    CHECK(rec.valid);
    CHECK(rec.completed_round == 1);
}

TEST_CASE("three sources cannot finish the balanced spider of order 10") {
    Spider s({3, 3, 3});
    std::vector<BurningSchedule> attempts = {
        BurningSchedule({VertexCoord::head(), VertexCoord::arm(1, 3), VertexCoord::arm(2, 3)}, 3),
        BurningSchedule(
            {VertexCoord::arm(1, 2), VertexCoord::arm(2, 2), VertexCoord::arm(3, 2)}, 3),
        BurningSchedule(
            {VertexCoord::arm(1, 3), VertexCoord::arm(2, 3), VertexCoord::arm(3, 3)}, 3),
    };
    for (const auto& sched : attempts) {
        BurnRecord rec = simulate(s, sched);
        CHECK_FALSE(rec.valid);
    }
}

TEST_CASE("coordinates outside the structure are rejected") {
    Spider s({3, 2});
    CHECK_THROWS_AS(simulate(s, BurningSchedule({VertexCoord::arm(1, 4)}, 2)),
                    CoordinateOutOfRange);
    CHECK_THROWS_AS(simulate(s, BurningSchedule({VertexCoord::arm(3, 1)}, 2)),
                    CoordinateOutOfRange);
    CHECK_THROWS_AS(simulate(s, BurningSchedule({VertexCoord::path(1, 1)}, 2)),
                    CoordinateOutOfRange);
}

TEST_CASE("one center source burns a path of order 2m-1 in exactly m rounds") {
    for (int m = 1; m <= 50; ++m) {
        PathForest path({2 * m - 1});
        BurnRecord rec = simulate(path, BurningSchedule({VertexCoord::path(1, m)}, m));
        CHECK(rec.valid);
        CHECK(rec.completed_round == m);
    }
}

TEST_CASE("adjacent burn rounds differ by at most one") {
    std::mt19937 rng(20240811);
    for (int trial = 0; trial < 50; ++trial) {
        int arms = 2 + static_cast<int>(rng() % 4);
        std::vector<int> lens;
        for (int a = 0; a < arms; ++a) lens.push_back(1 + static_cast<int>(rng() % 7));
        Spider s(lens);
        Topology topo = Topology::from(s);
        int m = 2 + static_cast<int>(rng() % 4);
        std::vector<VertexCoord> sources;
        std::vector<char> used(topo.order(), 0);
        int k = 1 + static_cast<int>(rng() % m);
        for (int i = 0; i < k; ++i) {
            int v = static_cast<int>(rng() % topo.order());
            if (used[v]) continue;
            used[v] = 1;
            sources.push_back(topo.coord_of(v));
        }
        if (sources.empty()) continue;
        BurnRecord rec = simulate(topo, BurningSchedule(sources, m));
        for (int u = 0; u < topo.order(); ++u)
            for (int w : topo.adj()[u])
                if (rec.burned_at[u] > 0 && rec.burned_at[w] > 0)
                    CHECK(std::abs(rec.burned_at[u] - rec.burned_at[w]) <= 1);
    }
}

TEST_CASE("schedule_from_cover reproduces the hand cover on a path of nine") {
    PathForest path9({9});
    Topology topo = Topology::from(path9);
    BurningSchedule sched = schedule_from_cover(topo,
                                                {{VertexCoord::path(1, 3), 2},
                                                 {VertexCoord::path(1, 7), 1},
                                                 {VertexCoord::path(1, 9), 0}},
                                                3);
    CHECK(sched.sources() ==
          std::vector<VertexCoord>{VertexCoord::path(1, 3), VertexCoord::path(1, 7),
                                   VertexCoord::path(1, 9)});
    CHECK(simulate(path9, sched).valid);
}

TEST_CASE("schedule_from_cover handles a path of four in two rounds") {
    PathForest path4({4});
    Topology topo = Topology::from(path4);
    BurningSchedule sched = schedule_from_cover(
        topo, {{VertexCoord::path(1, 2), 1}, {VertexCoord::path(1, 4), 0}}, 2);
    CHECK(simulate(path4, sched).valid);
}

TEST_CASE("schedule_from_cover rejects an incomplete cover") {
    PathForest path4({4});
    Topology topo = Topology::from(path4);
    CHECK_THROWS_AS(
        schedule_from_cover(topo, {{VertexCoord::path(1, 2), 1}, {VertexCoord::path(1, 3), 0}}, 2),
        IncompleteCover);
}

TEST_CASE("schedule_from_cover substitutes burned centers") {
    // radius-2 ball at one end reaches the radius-0 center before its round
    PathForest path4({4});
    Topology topo = Topology::from(path4);
    BurningSchedule sched = schedule_from_cover(topo,
                                                {{VertexCoord::path(1, 1), 2},
                                                 {VertexCoord::path(1, 3), 1},
                                                 {VertexCoord::path(1, 2), 0}},
                                                3);
    CHECK(sched.sources().back() == VertexCoord::path(1, 4));
    CHECK(simulate(path4, sched).valid);
}

TEST_CASE("random complete covers always yield valid schedules") {
    std::mt19937 rng(991);
    for (int trial = 0; trial < 60; ++trial) {
        Topology topo = [&] {
            if (trial % 2 == 0) {
                int L = 5 + static_cast<int>(rng() % 196);
                return Topology::from(PathForest({L}));
            }
            int arms = 2 + static_cast<int>(rng() % 5);
            std::vector<int> lens;
            for (int a = 0; a < arms; ++a) lens.push_back(1 + static_cast<int>(rng() % 40));
            return Topology::from(Spider(lens));
        }();
        auto dist = all_pairs_distances(topo);
        int m = 1;
        while (m * m < topo.order()) ++m;
        m += 3;

        // build a valid cover: repeatedly aim an unused radius at a random
        // uncovered vertex
        std::vector<char> covered(topo.order(), 0);
        std::vector<std::pair<VertexCoord, int>> balls;
        for (int r = m - 1; r >= 0; --r) {
            std::vector<int> uncovered;
            for (int v = 0; v < topo.order(); ++v)
                if (!covered[v]) uncovered.push_back(v);
            if (uncovered.empty()) break;
            int u = uncovered[rng() % uncovered.size()];
            std::vector<int> centers;
            for (int c = 0; c < topo.order(); ++c)
                if (dist[c][u] >= 0 && dist[c][u] <= r) centers.push_back(c);
            int c = centers[rng() % centers.size()];
            balls.emplace_back(topo.coord_of(c), r);
            for (int v = 0; v < topo.order(); ++v)
                if (dist[c][v] >= 0 && dist[c][v] <= r) covered[v] = 1;
        }
        bool complete = true;
        for (char c : covered) complete = complete && c;
        if (!complete) continue;  // radii ran out; try the next trial

        BurningSchedule sched = schedule_from_cover(topo, balls, m);
        BurnRecord rec = simulate(topo, sched);
        CHECK(rec.valid);
        CHECK(rec.completed_round <= m);
    }
}

TEST_CASE("coordinates and schedules round-trip through JSON") {
    BurningSchedule sched({VertexCoord::head(), VertexCoord::arm(2, 5), VertexCoord::path(1, 3),
                           VertexCoord::id(7)},
                          6);
    BurningSchedule back = schedule_from_json(schedule_to_json(sched));
    CHECK(back.horizon() == 6);
    CHECK(back.sources() == sched.sources());
}
