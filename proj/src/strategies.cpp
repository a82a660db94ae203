#include "burn/strategies.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <variant>

#include "burn/simulate.hpp"
#include "burn/topology.hpp"

namespace burn {

const char* family_name(ExceptionalFamily f) {
    switch (f) {
        case ExceptionalFamily::ForestTwoPaths_m2minus2_2: return "ForestTwoPaths_m2minus2_2";
        case ExceptionalFamily::ForestSmallest2: return "ForestSmallest2";
        case ExceptionalFamily::ForestMain_2s: return "ForestMain_2s";
        case ExceptionalFamily::SpiderContainsBalanced: return "SpiderContainsBalanced";
    }
    return "?";
}

namespace {

// Thrown when a proof-transcribed branch receives an input its case analysis
// says cannot occur. Surfaces as StrategyOutcome::Kind::ProofCaseUnreachable.
struct Unreachable {
    std::string trace;
};

void need(bool cond, const std::string& what) {
    if (!cond) throw Unreachable{what};
}

// A contiguous run of an original arm or path. Position p (1-based within
// the run) maps back to original position offset+p, so schedules emitted by
// recursive calls always address the input structure.
struct Seg {
    int len = 0;
    bool on_arm = false;
    int index = 0;   // original 1-based arm/path index
    int offset = 0;  // original position of run position 1, minus 1

    VertexCoord at(int p) const {
        if (p < 1 || p > len) throw Unreachable{"segment position out of range"};
        return on_arm ? VertexCoord::arm(index, offset + p)
                      : VertexCoord::path(index, offset + p);
    }
    Seg prefix(int new_len) const { return {new_len, on_arm, index, offset}; }
    Seg suffix_from(int delta, int new_len) const {
        return {new_len, on_arm, index, offset + delta};
    }
};

using Timed = std::vector<std::pair<int, VertexCoord>>;  // (round, source)

struct Except {
    ExceptionalFamily family;
};
using ForestResult = std::variant<Timed, Except>;

int total_len(const std::vector<Seg>& segs) {
    int t = 0;
    for (const Seg& s : segs) t += s.len;
    return t;
}

void sort_segs(std::vector<Seg>& segs) {
    std::sort(segs.begin(), segs.end(), [](const Seg& a, const Seg& b) {
        if (a.len != b.len) return a.len > b.len;
        if (a.index != b.index) return a.index < b.index;
        return a.offset < b.offset;
    });
}

std::vector<Seg> spider_segs(const Spider& s) {
    std::vector<Seg> v;
    for (int a = 1; a <= s.arm_count(); ++a) v.push_back({s.arm_length(a), true, a, 0});
    return v;
}

std::vector<Seg> forest_segs(const PathForest& f) {
    std::vector<Seg> v;
    for (int j = 1; j <= f.path_count(); ++j) v.push_back({f.path_order(j), false, j, 0});
    return v;
}

// Lower of the two centers of a path with len vertices.
int center_pos(int len) { return (len + 1) / 2; }

void append_shifted(Timed& out, const Timed& sub, int shift) {
    for (const auto& [round, coord] : sub) out.emplace_back(round + shift, coord);
}

// Cover a whole segment with consecutive rounds starting at start_round
// (round t carries radius m-t): balls laid from the low end, overhang
// clamped into the segment. Returns the first unused round.
int lay_path(const Seg& seg, int start_round, int m, Timed& out) {
    int covered = 0;
    int round = start_round;
    while (covered < seg.len) {
        int r = m - round;
        need(r >= 0, "ran out of rounds covering a path segment");
        int c = std::min(covered + r + 1, seg.len);
        out.emplace_back(round, seg.at(c));
        covered = std::min(c + r, seg.len);
        ++round;
    }
    return round;
}

// ---- forest of unit-tailed paths: n rounds, order <= 4n-4, smallest path
// a single vertex, second smallest >= 3; one center per path, longest first.
Timed small_one_core(const std::vector<Seg>& segs, int n) {
    need(static_cast<int>(segs.size()) == n && n >= 2, "unit-tail forest needs n paths");
    need(total_len(segs) <= 4 * n - 4, "unit-tail forest order bound");
    need(segs[n - 1].len == 1, "unit-tail forest needs a single-vertex path");
    need(segs[n - 2].len >= 3, "unit-tail forest needs second-smallest >= 3");
    Timed out;
    for (int i = 0; i < n; ++i) {
        need(segs[i].len <= 2 * (n - i) - 1, "unit-tail forest path outgrew its round");
        out.emplace_back(i + 1, segs[i].at(center_pos(segs[i].len)));
    }
    return out;
}

// ---- forest with n paths, m >= n, order <= 3m-1-n: split off the longest
// path with one or two sources and recurse on the rest.
Timed linear_core(std::vector<Seg> segs, int m) {
    const int n = static_cast<int>(segs.size());
    if (n == 0) return {};
    need(m >= n, "linear forest needs rounds >= paths");
    need(total_len(segs) <= 3 * m - 1 - n, "linear forest order bound");
    sort_segs(segs);
    Timed out;
    if (n == 1) {
        int L = segs[0].len;
        need(L <= 3 * m - 2, "single path too long for linear bound");
        if (L <= 2 * m - 1) {
            out.emplace_back(1, segs[0].at(center_pos(L)));
        } else {
            lay_path(segs[0], 1, m, out);
        }
        return out;
    }
    if (segs[0].len == 1) {  // all single vertices
        for (int i = 0; i < n; ++i) out.emplace_back(i + 1, segs[i].at(1));
        return out;
    }
    if (segs[0].len <= 2 * m - 1) {
        out.emplace_back(1, segs[0].at(center_pos(segs[0].len)));
        std::vector<Seg> rest(segs.begin() + 1, segs.end());
        append_shifted(out, linear_core(std::move(rest), m - 1), 1);
        return out;
    }
    // longest path needs two sources; the remainder fits m-2 rounds
    need(segs[0].len <= 4 * m - 4, "longest path exceeds a two-source span");
    out.emplace_back(1, segs[0].at(m));
    int rem = segs[0].len - (2 * m - 1);
    need(rem >= 1 && rem <= 2 * m - 3, "two-source remainder out of range");
    out.emplace_back(2, segs[0].at(2 * m - 1 + center_pos(rem)));
    std::vector<Seg> rest(segs.begin() + 1, segs.end());
    need(m - 2 >= n - 1, "remainder round budget");
    append_shifted(out, linear_core(std::move(rest), m - 2), 2);
    return out;
}

// ---- spider with every arm <= 2m-1, m > n, order <= m^2+n-2: head first,
// then one source per arm tail; the arm whose tail outgrows its round gets
// a trailing source at its last vertex. One corner case restarts from the
// first vertex of the shortest arm instead.
Timed short_arms_core(const std::vector<Seg>& arms, int m);

Timed short_arms_corner(const std::vector<Seg>& arms, int m) {
    // m = n+1 and every arm tail outgrows its round: source 1 on the first
    // vertex of the shortest arm, the leftovers form a unit-tailed forest.
    const int n = static_cast<int>(arms.size());
    need(arms[n - 1].len == n + 2, "corner case needs shortest arm n+2");
    Timed out;
    out.emplace_back(1, arms[n - 1].at(1));
    std::vector<Seg> tails;
    for (int i = 0; i < n - 1; ++i)
        tails.push_back(arms[i].suffix_from(n - 1, arms[i].len - (n - 1)));
    tails.push_back(arms[n - 1].suffix_from(n + 1, 1));
    sort_segs(tails);
    append_shifted(out, small_one_core(tails, n), 1);
    return out;
}

Timed short_arms_core(const std::vector<Seg>& arms, int m) {
    const int n = static_cast<int>(arms.size());
    need(m > n && n >= 2, "short-arm spider needs m > n >= 2");
    need(1 + total_len(arms) <= m * m + n - 2, "short-arm spider order bound");
    need(arms[0].len <= 2 * m - 1, "short-arm spider arm bound");

    int k = 0;  // least 1-based index whose arm exceeds 3m-2-2k
    for (int i = 1; i <= n; ++i)
        if (arms[i - 1].len > 3 * m - 2 - 2 * i) {
            k = i;
            break;
        }

    Timed out;
    if (k == 0) {
        // every tail fits the round that follows the head source
        out.emplace_back(1, VertexCoord::head());
        for (int i = 1; i <= n; ++i) {
            int tail = arms[i - 1].len - (m - 1);
            if (tail <= 0) break;  // sorted, so the rest are head-burned too
            need(tail <= 2 * (m - i) - 1, "tail outgrew its round");
            out.emplace_back(i + 1, arms[i - 1].at(m - 1 + center_pos(tail)));
        }
        return out;
    }

    need(2 * k >= m, "threshold index below half the rounds");
    if (m == n + 1 && k == n) return short_arms_corner(arms, m);

    need(k <= m - 2, "no round left for the leftover");
    out.emplace_back(1, VertexCoord::head());
    for (int i = 1; i < k; ++i) {
        int tail = arms[i - 1].len - (m - 1);
        need(tail >= 1 && tail <= 2 * (m - i) - 1, "pre-threshold tail out of range");
        out.emplace_back(i + 1, arms[i - 1].at(m - 1 + center_pos(tail)));
    }
    // arm k: one full-width ball on the tail, leftover (1 or 2 vertices) at
    // the very end gets the next source
    int block = 2 * (m - k) - 1;
    int leftover = arms[k - 1].len - (m - 1) - block;
    need(leftover >= 1 && leftover <= 2, "threshold arm leftover out of range");
    need(leftover <= m - k - 1, "leftover outside the last source's reach");
    out.emplace_back(k + 1, arms[k - 1].at(m - 1 + center_pos(block)));
    out.emplace_back(k + 2, arms[k - 1].at(arms[k - 1].len));
    if (k < n) need(arms[k].len <= m - 1, "post-threshold arm survives the head fire");
    return out;
}

// ---- two-spider base table: every 2-spider of order <= 9 has a 3-round
// schedule burning the head by round 2; found once by exhaustive search.
struct TableEntry {
    int round;
    int which;  // 0 = head, 1/2 = arm
    int pos;
};

const std::map<std::pair<int, int>, std::vector<TableEntry>>& two_spider_table() {
    static const auto table = [] {
        std::map<std::pair<int, int>, std::vector<TableEntry>> t;
        for (int l1 = 1; l1 <= 7; ++l1)
            for (int l2 = 1; l2 <= std::min(l1, 8 - l1); ++l2) {
                Spider sp({l1, l2});
                Topology topo = Topology::from(sp);
                const int N = sp.order();
                std::vector<TableEntry> found;
                auto try_tuple = [&](const std::vector<int>& ids) {
                    std::vector<VertexCoord> sources;
                    for (int v : ids) sources.push_back(VertexCoord::id(v));
                    BurnRecord rec = simulate(topo, BurningSchedule(sources, 3));
                    if (!rec.valid || rec.burned_at[0] > 2) return false;
                    for (size_t i = 0; i < ids.size(); ++i) {
                        VertexCoord c = topo.coord_of(ids[i]);
                        if (c.kind == VertexCoord::Kind::Head)
                            found.push_back({static_cast<int>(i) + 1, 0, 0});
                        else
                            found.push_back({static_cast<int>(i) + 1, c.index, c.pos});
                    }
                    return true;
                };
                bool done = false;
                for (int a = 0; a < N && !done; ++a) done = try_tuple({a});
                for (int a = 0; a < N && !done; ++a)
                    for (int b = 0; b < N && !done; ++b)
                        if (b != a) done = try_tuple({a, b});
                for (int a = 0; a < N && !done; ++a)
                    for (int b = 0; b < N && !done; ++b)
                        for (int c = 0; c < N && !done; ++c)
                            if (b != a && c != a && c != b) done = try_tuple({a, b, c});
                if (done) t[{l1, l2}] = std::move(found);
            }
        return t;
    }();
    return table;
}

// ---- spider of order <= n^2+3n-1 burned in n+1 rounds with the head
// burning early enough to finish min(shortest arm, n-1) more levels.
Timed nplus1_core(const std::vector<Seg>& arms) {
    const int n = static_cast<int>(arms.size());
    need(n >= 2, "round-budget spider needs n >= 2");
    need(1 + total_len(arms) <= n * n + 3 * n - 1, "round-budget spider order bound");

    if (n == 2) {
        auto it = two_spider_table().find({arms[0].len, arms[1].len});
        need(it != two_spider_table().end(), "two-spider base table miss");
        Timed out;
        for (const TableEntry& e : it->second) {
            if (e.which == 0)
                out.emplace_back(e.round, VertexCoord::head());
            else
                out.emplace_back(e.round, arms[e.which - 1].at(e.pos));
        }
        return out;
    }

    const int l1 = arms[0].len;
    if (l1 <= 2 * n + 1) return short_arms_core(arms, n + 1);

    const int l1p = l1 - (2 * n + 1);
    const int ln = arms[n - 1].len;
    Timed out;

    if (ln <= n - 2) {
        // source 1 takes the last 2n+1 vertices of the longest arm; the
        // shortest arm burns from the head fire of the reduced spider
        out.emplace_back(1, arms[0].at(l1 - n));
        std::vector<Seg> rest;
        if (l1p >= ln) {
            rest.push_back(arms[0].prefix(l1p));
            for (int i = 1; i <= n - 2; ++i) rest.push_back(arms[i]);
        } else {
            for (int i = 1; i <= n - 1; ++i) rest.push_back(arms[i]);
        }
        sort_segs(rest);
        need(1 + total_len(rest) <= (n - 1) * (n - 1) + 3 * (n - 1) - 1,
             "reduced spider order bound");
        append_shifted(out, nplus1_core(rest), 1);
        return out;
    }

    // every arm reaches depth n-1: burn the head first
    out.emplace_back(1, VertexCoord::head());
    std::vector<Seg> tails;
    if (l1p <= n - 2) {
        int tail1 = l1 - n;
        need(tail1 >= 1 && tail1 <= 2 * n - 1, "first-arm tail out of range");
        out.emplace_back(2, arms[0].at(n + center_pos(tail1)));
        for (int i = 1; i < n; ++i)
            if (arms[i].len > n) tails.push_back(arms[i].suffix_from(n, arms[i].len - n));
        if (tails.empty()) return out;
    } else {
        out.emplace_back(2, arms[0].at(2 * n));  // takes positions n+1..3n-1
        need(l1 >= 3 * n, "long first arm expected");
        tails.push_back(arms[0].suffix_from(3 * n - 1, l1 - (3 * n - 1)));
        for (int i = 1; i < n; ++i)
            if (arms[i].len > n) tails.push_back(arms[i].suffix_from(n, arms[i].len - n));
        need(static_cast<int>(tails.size()) <= n - 1, "too many deep arms");
    }
    sort_segs(tails);
    int k = static_cast<int>(tails.size());
    need(total_len(tails) <= 3 * (n - 1) - 1 - k, "tail forest order bound");
    append_shifted(out, linear_core(std::move(tails), n - 1), 2);
    return out;
}

// ---- engine A for m > n: peel 2m-1 vertices off the longest arm per round.
Timed peel_core(std::vector<Seg> arms, int m) {
    const int n = static_cast<int>(arms.size());
    need(m > n, "peel engine needs m > n");
    need(1 + total_len(arms) <= m * m + n - 2, "peel engine order bound");
    if (m == n + 1) return nplus1_core(arms);
    if (arms[0].len <= 2 * m - 1) return short_arms_core(arms, m);
    Timed out;
    out.emplace_back(1, arms[0].at(arms[0].len - (m - 1)));
    arms[0] = arms[0].prefix(arms[0].len - (2 * m - 1));
    sort_segs(arms);
    append_shifted(out, peel_core(std::move(arms), m - 1), 1);
    return out;
}

// ---- two paths, order <= m^2, exception (m^2-2, 2).
ForestResult forest_two_core(std::vector<Seg> segs, int m) {
    need(segs.size() == 2, "two-path strategy needs two paths");
    sort_segs(segs);
    const int l1 = segs[0].len, l2 = segs[1].len;
    need(l1 + l2 <= m * m && m >= 2, "two-path order bound");
    if (l1 == m * m - 2 && l2 == 2) return Except{ExceptionalFamily::ForestTwoPaths_m2minus2_2};

    Timed out;
    if (l1 <= 2 * m - 1) {
        need(l2 <= (m - 1) * (m - 1), "short second path expected");
        out.emplace_back(1, segs[0].at(center_pos(l1)));
        if (l2 > 0) lay_path(segs[1], 2, m, out);
        return out;
    }

    need(m >= 3, "peeling needs m >= 3");
    std::vector<Seg> rest{segs[0].prefix(l1 - (2 * m - 1)), segs[1]};
    ForestResult sub = forest_two_core(rest, m - 1);
    if (std::holds_alternative<Except>(sub)) {
        // only leftover shape for the reduced exception: orders (9, 7) at m=4
        need(m == 4 && l1 == 9 && l2 == 7, "unexpected reduced two-path exception");
        out.emplace_back(1, segs[1].at(4));
        out.emplace_back(2, segs[0].at(3));
        out.emplace_back(3, segs[0].at(7));
        out.emplace_back(4, segs[0].at(9));
        return out;
    }
    out.emplace_back(1, segs[0].at(l1 - (m - 1)));
    append_shifted(out, std::get<Timed>(sub), 1);
    return out;
}

// ---- n paths, order <= 3n-2, n rounds, exception: smallest path order two.
ForestResult forest_3n2_core(std::vector<Seg> segs, int n) {
    need(static_cast<int>(segs.size()) == n && n >= 2, "3n-2 strategy path count");
    need(total_len(segs) <= 3 * n - 2, "3n-2 order bound");
    sort_segs(segs);
    if (segs[n - 1].len == 2) return Except{ExceptionalFamily::ForestSmallest2};

    Timed out;
    if (n == 2) {
        need(segs[0].len <= 3 && segs[1].len == 1, "3n-2 base shape");
        out.emplace_back(1, segs[0].at(center_pos(segs[0].len)));
        out.emplace_back(2, segs[1].at(1));
        return out;
    }
    if (segs[0].len <= 2) {
        need(segs[n - 1].len == 1, "all-short forest needs a unit path");
        for (int i = 0; i < n; ++i) {
            need(segs[i].len == 1 || i + 1 <= n - 1, "two-vertex path needs spread room");
            out.emplace_back(i + 1, segs[i].at(1));
        }
        return out;
    }
    need(segs[0].len <= 2 * n - 1, "3n-2 longest path bound");
    out.emplace_back(1, segs[0].at(center_pos(segs[0].len)));
    std::vector<Seg> rest(segs.begin() + 1, segs.end());
    ForestResult sub = forest_3n2_core(std::move(rest), n - 1);
    need(!std::holds_alternative<Except>(sub), "reduced 3n-2 forest cannot except");
    append_shifted(out, std::get<Timed>(sub), 1);
    return out;
}

// ---- n paths, m >= n >= 2, order <= m^2-(n-1)^2+1, unique exception
// (m^2-n^2+2, 2, ..., 2) at the bound. Double induction: peel 2m-1 off a
// long first path, otherwise drop the whole first path.
ForestResult forest_main_core(std::vector<Seg> segs, int n, int m) {
    need(static_cast<int>(segs.size()) == n && m >= n && n >= 2, "main forest parameters");
    sort_segs(segs);
    const int bound = m * m - (n - 1) * (n - 1) + 1;
    need(total_len(segs) <= bound, "main forest order bound");

    auto is_two_suffix = [&](int from) {
        for (int i = from; i < n; ++i)
            if (segs[i].len != 2) return false;
        return true;
    };
    if (total_len(segs) == bound && segs[0].len == m * m - n * n + 2 && is_two_suffix(1))
        return Except{ExceptionalFamily::ForestMain_2s};

    if (n == 2) {
        ForestResult r = forest_two_core(std::move(segs), m);
        need(!std::holds_alternative<Except>(r), "two-path exception slipped the top check");
        return r;
    }
    if (m == n) {
        ForestResult r = forest_3n2_core(std::move(segs), n);
        need(!std::holds_alternative<Except>(r), "all-two exception slipped the top check");
        return r;
    }

    Timed out;
    const int l1 = segs[0].len;
    if (l1 >= 2 * m) {
        std::vector<Seg> rest = segs;
        rest[0] = rest[0].prefix(l1 - (2 * m - 1));
        ForestResult sub = forest_main_core(std::move(rest), n, m - 1);
        if (std::holds_alternative<Except>(sub)) {
            // leftover exception reachable only as (2n+5, 2n+3, 2, ..., 2)
            // with m = n+2: one ball spans the second path, two more the
            // first, single sources take the two-vertex paths
            need(m == n + 2 && l1 == 2 * m + 1 &&
                     segs[1].len == (m - 1) * (m - 1) - n * n + 2 && is_two_suffix(2),
                 "unexpected reduced main-forest exception");
            out.emplace_back(1, segs[1].at(center_pos(segs[1].len)));
            int next = lay_path(segs[0], 2, m, out);
            need(next == 4, "first path should take exactly two sources");
            for (int j = 2; j < n; ++j) {
                need(m - (j + 2) >= 1, "two-vertex path needs spread room");
                out.emplace_back(j + 2, segs[j].at(1));
            }
            return out;
        }
        out.emplace_back(1, segs[0].at(l1 - (m - 1)));
        append_shifted(out, std::get<Timed>(sub), 1);
        return out;
    }

    // drop the longest path: strictly inside the (n-1, m-1) bound
    std::vector<Seg> rest(segs.begin() + 1, segs.end());
    need(total_len(rest) <= (m - 1) * (m - 1) - (n - 2) * (n - 2) + 1,
         "reduced forest order bound");
    ForestResult sub = forest_main_core(std::move(rest), n - 1, m - 1);
    need(!std::holds_alternative<Except>(sub), "reduced forest cannot reach its bound");
    out.emplace_back(1, segs[0].at(center_pos(l1)));
    append_shifted(out, std::get<Timed>(sub), 1);
    return out;
}

// ---- engine B for m > n: make every arm reach depth m-1 (dropping shorter
// arms into the head fire), then hand the tails to the forest strategies.
Timed forestred_core(std::vector<Seg> arms, int m) {
    const int n = static_cast<int>(arms.size());
    need(m > n && n >= 2, "forest-reduction engine needs m > n >= 2");
    need(1 + total_len(arms) <= m * m + n - 2, "forest-reduction order bound");

    Timed out;
    if (n == 2) {
        const int l1 = arms[0].len, l2 = arms[1].len;
        if (l2 <= m - 1) {
            int q = m - 1 - l2;
            if (q > l1) {
                // spider of order <= m-1: the head ball alone covers it
                out.emplace_back(1, VertexCoord::head());
                return out;
            }
            out.emplace_back(1, q == 0 ? VertexCoord::head() : arms[0].at(q));
            int tail1 = l1 - (2 * m - 2 - l2);
            if (tail1 >= 1) {
                need(tail1 <= (m - 1) * (m - 1), "first-arm tail bound");
                lay_path(arms[0].suffix_from(2 * m - 2 - l2, tail1), 2, m, out);
            }
            return out;
        }
        if (l2 == m + 1) {
            out.emplace_back(1, arms[1].at(1));
            int tail1 = l1 - (m - 2);
            need(tail1 >= 1 && tail1 <= (m - 1) * (m - 1) - 1, "first-arm tail bound");
            int next = lay_path(arms[0].suffix_from(m - 2, tail1), 2, m, out);
            need(next <= m, "no round left for the far leaf");
            out.emplace_back(next, arms[1].at(m + 1));
            return out;
        }
        // l2 >= m, l2 != m+1: head first, tails form a two-path forest
        out.emplace_back(1, VertexCoord::head());
        std::vector<Seg> tails{arms[0].suffix_from(m - 1, l1 - (m - 1)),
                               arms[1].suffix_from(m - 1, l2 - (m - 1))};
        need(total_len(tails) <= (m - 1) * (m - 1), "tail forest bound");
        ForestResult sub = forest_two_core(std::move(tails), m - 1);
        need(!std::holds_alternative<Except>(sub), "tail forest cannot except here");
        append_shifted(out, std::get<Timed>(sub), 1);
        return out;
    }

    if (arms[n - 1].len <= m - 2) {
        // the shortest arm burns from the head fire of the reduced spider
        std::vector<Seg> rest(arms.begin(), arms.end() - 1);
        return forestred_core(std::move(rest), m);
    }

    // every arm reaches depth m-1
    out.emplace_back(1, VertexCoord::head());
    std::vector<Seg> tails;
    for (int i = 0; i < n; ++i)
        if (arms[i].len >= m) tails.push_back(arms[i].suffix_from(m - 1, arms[i].len - (m - 1)));
    const int k = static_cast<int>(tails.size());
    if (k == 0) return out;
    sort_segs(tails);

    if (k == 1) {
        need(total_len(tails) <= (m - 1) * (m - 1), "single tail bound");
        lay_path(tails[0], 2, m, out);
        return out;
    }

    if (m >= n + 2) {
        need(total_len(tails) <= (m - 1) * (m - 1) - (k - 1) * (k - 1) + 1,
             "tail forest bound");
        ForestResult sub = forest_main_core(tails, k, m - 1);
        if (std::holds_alternative<Except>(sub)) {
            need(m == n + 2 && k == n && arms[0].len == 3 * n + 4,
                 "unexpected tail forest exception");
            for (int i = 1; i < n; ++i)
                need(arms[i].len == n + 3, "unexpected tail forest exception shape");
            // restart from the first vertex of the shortest arm
            out.clear();
            out.emplace_back(1, arms[n - 1].at(1));
            int next = lay_path(arms[0].suffix_from(n, 2 * n + 4), 2, m, out);
            need(next == 4, "long arm should take exactly two sources");
            for (int i = 1; i <= n - 2; ++i) {
                need(m - (i + 3) >= 1, "three-vertex tail needs spread room");
                out.emplace_back(i + 3, arms[i].at(n + 2));
            }
            out.emplace_back(n + 2, arms[n - 1].at(n + 3));
            return out;
        }
        append_shifted(out, std::get<Timed>(sub), 1);
        return out;
    }

    // m = n+1
    need(total_len(tails) <= 3 * n - 2, "tail forest bound at m = n+1");
    if (k <= n - 1) {
        need(total_len(tails) < n * n - (k - 1) * (k - 1) + 1, "tail forest strict bound");
        ForestResult sub = forest_main_core(tails, k, n);
        need(!std::holds_alternative<Except>(sub), "tail forest cannot reach its bound");
        append_shifted(out, std::get<Timed>(sub), 1);
        return out;
    }
    ForestResult sub = forest_3n2_core(tails, n);
    if (std::holds_alternative<Except>(sub)) {
        need(arms[n - 1].len == n + 2, "unexpected all-deep exception shape");
        // restart from the first vertex of the shortest arm; leftovers form
        // a unit-tailed forest
        out.clear();
        out.emplace_back(1, arms[n - 1].at(1));
        std::vector<Seg> t2;
        for (int i = 0; i < n - 1; ++i)
            t2.push_back(arms[i].suffix_from(n - 1, arms[i].len - (n - 1)));
        t2.push_back(arms[n - 1].suffix_from(n + 1, 1));
        sort_segs(t2);
        append_shifted(out, small_one_core(t2, n), 1);
        return out;
    }
    append_shifted(out, std::get<Timed>(sub), 1);
    return out;
}

// ---- n >= m: either the spider contains the balanced m-spider (l_m >= m)
// or the first m-1 arms carry the whole schedule.
ForestResult m_le_n_core(const std::vector<Seg>& arms, int m) {
    const int n = static_cast<int>(arms.size());
    need(n >= m && m >= 2, "many-arm strategy needs n >= m >= 2");
    need(1 + total_len(arms) <= m * m + n - 2, "many-arm order bound");

    if (arms[m - 1].len >= m) return Except{ExceptionalFamily::SpiderContainsBalanced};

    if (arms[m - 1].len <= m - 2) {
        need(m >= 3, "reduced spider needs at least two arms");
        std::vector<Seg> first(arms.begin(), arms.begin() + (m - 1));
        need(1 + total_len(first) <= (m - 1) * (m - 1) + 3 * (m - 1) - 1,
             "reduced spider order bound");
        return nplus1_core(first);
    }

    // l_m = m-1: the head fire finishes every arm of length <= m-1
    Timed out;
    out.emplace_back(1, VertexCoord::head());
    std::vector<Seg> tails;
    for (int i = 0; i < m - 1; ++i)
        if (arms[i].len >= m) tails.push_back(arms[i].suffix_from(m - 1, arms[i].len - (m - 1)));
    if (tails.empty()) return ForestResult{std::move(out)};
    sort_segs(tails);
    const int k = static_cast<int>(tails.size());
    need(total_len(tails) <= 2 * m - 3, "tail forest bound");
    need(total_len(tails) <= 3 * (m - 1) - 1 - k, "tail forest linear bound");
    append_shifted(out, linear_core(std::move(tails), m - 1), 1);
    return ForestResult{std::move(out)};
}

// ---- public wrappers ----

BurningSchedule to_schedule(Timed timed, int horizon) {
    std::sort(timed.begin(), timed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (size_t i = 0; i + 1 < timed.size(); ++i)
        need(timed[i].first < timed[i + 1].first, "two sources share a round");
    if (!timed.empty())
        need(timed.back().first <= horizon, "source scheduled past the horizon");
    std::vector<VertexCoord> sources;
    sources.reserve(timed.size());
    for (auto& [round, coord] : timed) sources.push_back(coord);
    return BurningSchedule(std::move(sources), horizon);
}

StrategyOutcome unmet(std::string why) {
    StrategyOutcome o;
    o.kind = StrategyOutcome::Kind::HypothesisUnmet;
    o.detail = std::move(why);
    return o;
}

template <typename Structure>
StrategyOutcome finish_schedule(const Structure& st, Timed timed, int horizon, bool spider) {
    StrategyOutcome o;
    BurningSchedule sched = to_schedule(std::move(timed), horizon);
    BurnRecord rec = simulate(st, sched);
    need(rec.valid, "schedule failed re-simulation");
    if (spider) o.head_burn_round = rec.burned_at[0];
    o.kind = StrategyOutcome::Kind::Schedule;
    o.schedule = std::move(sched);
    return o;
}

StrategyOutcome exceptional(ExceptionalFamily f) {
    StrategyOutcome o;
    o.kind = StrategyOutcome::Kind::Exceptional;
    o.family = f;
    return o;
}

StrategyOutcome caught(const Unreachable& u) {
    StrategyOutcome o;
    o.kind = StrategyOutcome::Kind::ProofCaseUnreachable;
    o.detail = u.trace;
    return o;
}

}  // namespace

StrategyOutcome burn_forest_small_with_one(const PathForest& f, int rounds) {
    const int n = f.path_count();
    if (rounds != n || n < 2) return unmet("needs rounds equal to path count, n >= 2");
    if (f.order() > 4 * n - 4) return unmet("order exceeds 4n-4");
    if (f.path_order(n) != 1) return unmet("smallest path order must be 1");
    if (f.path_order(n - 1) < 3) return unmet("second-smallest path order must be >= 3");
    try {
        return finish_schedule(f, small_one_core(forest_segs(f), n), n, false);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_spider_short_arms(const Spider& s, int rounds) {
    const int n = s.arm_count();
    if (rounds <= n || n < 2) return unmet("needs rounds > arm count >= 2");
    if (s.order() > rounds * rounds + n - 2) return unmet("order exceeds m^2+n-2");
    if (s.arm_lengths()[0] > 2 * rounds - 1) return unmet("an arm exceeds 2m-1");
    try {
        return finish_schedule(s, short_arms_core(spider_segs(s), rounds), rounds, true);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_forest_linear(const PathForest& f, int rounds) {
    const int n = f.path_count();
    if (rounds < n || n < 1) return unmet("needs rounds >= path count");
    if (f.order() > 3 * rounds - 1 - n) return unmet("order exceeds 3m-1-n");
    try {
        return finish_schedule(f, linear_core(forest_segs(f), rounds), rounds, false);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_spider_nplus1(const Spider& s) {
    const int n = s.arm_count();
    if (n < 2) return unmet("needs at least two arms");
    if (s.order() > n * n + 3 * n - 1) return unmet("order exceeds n^2+3n-1");
    try {
        return finish_schedule(s, nplus1_core(spider_segs(s)), n + 1, true);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_spider_main(const Spider& s, int rounds, SpiderMainEngine engine) {
    const int n = s.arm_count();
    if (rounds <= n || n < 2) return unmet("needs rounds > arm count >= 2");
    if (s.order() > rounds * rounds + n - 2) return unmet("order exceeds m^2+n-2");
    try {
        Timed timed = engine == SpiderMainEngine::TailPeel
                          ? peel_core(spider_segs(s), rounds)
                          : forestred_core(spider_segs(s), rounds);
        return finish_schedule(s, std::move(timed), rounds, true);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_spider_m_le_n(const Spider& s, int rounds) {
    const int n = s.arm_count();
    if (rounds < 2 || rounds > n) return unmet("needs 2 <= rounds <= arm count");
    if (s.order() > rounds * rounds + n - 2) return unmet("order exceeds m^2+n-2");
    try {
        ForestResult r = m_le_n_core(spider_segs(s), rounds);
        if (std::holds_alternative<Except>(r))
            return exceptional(std::get<Except>(r).family);
        return finish_schedule(s, std::get<Timed>(std::move(r)), rounds, true);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_forest_two(const PathForest& f, int rounds) {
    if (f.path_count() != 2) return unmet("needs exactly two paths");
    if (rounds < 2) return unmet("needs at least two rounds");
    if (f.order() > rounds * rounds) return unmet("order exceeds m^2");
    try {
        ForestResult r = forest_two_core(forest_segs(f), rounds);
        if (std::holds_alternative<Except>(r))
            return exceptional(std::get<Except>(r).family);
        return finish_schedule(f, std::get<Timed>(std::move(r)), rounds, false);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_forest_3nminus2(const PathForest& f, int rounds) {
    const int n = f.path_count();
    if (rounds != n || n < 2) return unmet("needs rounds equal to path count, n >= 2");
    if (f.order() > 3 * n - 2) return unmet("order exceeds 3n-2");
    try {
        ForestResult r = forest_3n2_core(forest_segs(f), n);
        if (std::holds_alternative<Except>(r))
            return exceptional(std::get<Except>(r).family);
        return finish_schedule(f, std::get<Timed>(std::move(r)), n, false);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

StrategyOutcome burn_forest_main(const PathForest& f, int rounds) {
    const int n = f.path_count();
    if (n < 2 || rounds < n) return unmet("needs rounds >= path count >= 2");
    if (f.order() > rounds * rounds - (n - 1) * (n - 1) + 1)
        return unmet("order exceeds m^2-(n-1)^2+1");
    try {
        ForestResult r = forest_main_core(forest_segs(f), n, rounds);
        if (std::holds_alternative<Except>(r))
            return exceptional(std::get<Except>(r).family);
        return finish_schedule(f, std::get<Timed>(std::move(r)), rounds, false);
    } catch (const Unreachable& u) {
        return caught(u);
    }
}

}  // namespace burn
