#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace burn {

struct BurnError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DomainError : BurnError {
    using BurnError::BurnError;
};
struct CoordinateOutOfRange : BurnError {
    using BurnError::BurnError;
};
struct IncompleteCover : BurnError {
    using BurnError::BurnError;
};
struct SearchCapExceeded : BurnError {
    using BurnError::BurnError;
};

// Structure-portable vertex address: the head of a spider, a position on a
// spider arm (pos 1 = vertex next to the head), a position on a forest path
// (pos 1 = a fixed end), or a raw tree vertex id.
struct VertexCoord {
    enum class Kind { Head, Arm, Path, Id };
    Kind kind = Kind::Id;
    int index = 0;  // 1-based arm/path index, or the vertex id for Kind::Id
    int pos = 0;    // 1-based position along the arm/path

    static VertexCoord head() { return {Kind::Head, 0, 0}; }
    static VertexCoord arm(int a, int p) { return {Kind::Arm, a, p}; }
    static VertexCoord path(int j, int p) { return {Kind::Path, j, p}; }
    static VertexCoord id(int v) { return {Kind::Id, v, 0}; }

    bool operator==(const VertexCoord&) const = default;
    std::string to_string() const;
};

// Spider: a head vertex plus n >= 2 arms, each arm a path counted without
// the head. Arm lengths are kept sorted non-increasing; equality of spiders
// is equality of this canonical form. n = 2 is the path-as-2-spider
// convention, n >= 3 is a proper spider.
class Spider {
  public:
    explicit Spider(std::vector<int> arm_lengths);

    int arm_count() const { return static_cast<int>(arms_.size()); }
    int arm_length(int a) const;  // 1-based
    const std::vector<int>& arm_lengths() const { return arms_; }
    int order() const;

    bool operator==(const Spider&) const = default;
    std::string to_string() const;

  private:
    std::vector<int> arms_;  // sorted non-increasing, all >= 1
};

// Path forest: disjoint union of n >= 1 paths, path orders kept sorted
// non-increasing (canonical form).
class PathForest {
  public:
    explicit PathForest(std::vector<int> path_orders);

    int path_count() const { return static_cast<int>(orders_.size()); }
    int path_order(int j) const;  // 1-based
    const std::vector<int>& path_orders() const { return orders_; }
    int order() const;

    bool operator==(const PathForest&) const = default;
    std::string to_string() const;

  private:
    std::vector<int> orders_;  // sorted non-increasing, all >= 1
};

// Arbitrary tree over vertex ids 0..order-1. Connectivity and acyclicity are
// checked on construction.
class Tree {
  public:
    Tree(int order, std::vector<std::pair<int, int>> edges);

    int order() const { return order_; }
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<std::vector<int>>& adj() const { return adj_; }

  private:
    int order_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::vector<int>> adj_;
};

// Ordered source placements s_1..s_k, one per round, judged against a total
// horizon of m rounds (k <= m; unused trailing rounds are pure spread).
class BurningSchedule {
  public:
    BurningSchedule(std::vector<VertexCoord> sources, int horizon);

    const std::vector<VertexCoord>& sources() const { return sources_; }
    int source_count() const { return static_cast<int>(sources_.size()); }
    int horizon() const { return horizon_; }

  private:
    std::vector<VertexCoord> sources_;
    int horizon_;
};

// Result of simulating a schedule: per-vertex burn round (0 = never burned
// within the horizon), the completion round (0 = incomplete), and whether
// the schedule is valid (every source landed on an unburned vertex and the
// whole structure burned within the horizon).
struct BurnRecord {
    std::vector<int> burned_at;
    int completed_round = 0;
    bool sources_ok = false;
    bool valid = false;

    bool completed() const { return completed_round > 0; }
};

}  // namespace burn
