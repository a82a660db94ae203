#pragma once

#include <vector>

#include "burn/types.hpp"

namespace burn {

// Adjacency view of a spider, path forest, or tree together with the
// two-way mapping between canonical coordinates and vertex ids.
//
// Id layout: spiders put the head at id 0 and number each arm consecutively
// outward; forests number each path consecutively from its low end; trees
// keep their own ids.
class Topology {
  public:
    static Topology from(const Spider& s);
    static Topology from(const PathForest& f);
    static Topology from(const Tree& t);

    int order() const { return static_cast<int>(adj_.size()); }
    const std::vector<std::vector<int>>& adj() const { return adj_; }

    int resolve(const VertexCoord& c) const;  // throws CoordinateOutOfRange
    VertexCoord coord_of(int id) const;

    int component_of(int id) const { return comp_[id]; }
    int component_count() const { return comp_count_; }

  private:
    enum class Kind { SpiderK, ForestK, TreeK };
    Kind kind_ = Kind::TreeK;
    std::vector<std::vector<int>> adj_;
    std::vector<int> lens_;     // arm lengths / path orders
    std::vector<int> offsets_;  // id of pos 1 for each arm/path
    std::vector<int> comp_;
    int comp_count_ = 0;

    void finalize_components();
};

}  // namespace burn
