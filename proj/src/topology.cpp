#include "burn/topology.hpp"

#include <algorithm>
#include <numeric>
#include <queue>

namespace burn {

namespace {

std::string coord_kind_name(VertexCoord::Kind k) {
    switch (k) {
        case VertexCoord::Kind::Head: return "head";
        case VertexCoord::Kind::Arm: return "arm";
        case VertexCoord::Kind::Path: return "path";
        case VertexCoord::Kind::Id: return "id";
    }
    return "?";
}

}  // namespace

std::string VertexCoord::to_string() const {
    switch (kind) {
        case Kind::Head: return "head";
        case Kind::Arm: return "arm " + std::to_string(index) + " pos " + std::to_string(pos);
        case Kind::Path: return "path " + std::to_string(index) + " pos " + std::to_string(pos);
        case Kind::Id: return "id " + std::to_string(index);
    }
    return "?";
}

Spider::Spider(std::vector<int> arm_lengths) : arms_(std::move(arm_lengths)) {
    if (arms_.size() < 2) throw DomainError("spider needs at least 2 arms");
    for (int l : arms_)
        if (l < 1) throw DomainError("spider arm lengths must be positive");
    std::sort(arms_.begin(), arms_.end(), std::greater<int>());
}

int Spider::arm_length(int a) const {
    if (a < 1 || a > arm_count()) throw CoordinateOutOfRange("arm index out of range");
    return arms_[a - 1];
}

int Spider::order() const {
    return 1 + std::accumulate(arms_.begin(), arms_.end(), 0);
}

std::string Spider::to_string() const {
    std::string s = "spider(";
    for (size_t i = 0; i < arms_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(arms_[i]);
    }
    return s + ")";
}

PathForest::PathForest(std::vector<int> path_orders) : orders_(std::move(path_orders)) {
    if (orders_.empty()) throw DomainError("path forest needs at least 1 path");
    for (int l : orders_)
        if (l < 1) throw DomainError("path orders must be positive");
    std::sort(orders_.begin(), orders_.end(), std::greater<int>());
}

int PathForest::path_order(int j) const {
    if (j < 1 || j > path_count()) throw CoordinateOutOfRange("path index out of range");
    return orders_[j - 1];
}

int PathForest::order() const {
    return std::accumulate(orders_.begin(), orders_.end(), 0);
}

std::string PathForest::to_string() const {
    std::string s = "forest(";
    for (size_t i = 0; i < orders_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(orders_[i]);
    }
    return s + ")";
}

Tree::Tree(int order, std::vector<std::pair<int, int>> edges)
    : order_(order), edges_(std::move(edges)) {
    if (order_ < 1) throw DomainError("tree order must be positive");
    if (static_cast<int>(edges_.size()) != order_ - 1)
        throw DomainError("tree must have exactly order-1 edges");
    adj_.assign(order_, {});
    for (auto [u, v] : edges_) {
        if (u < 0 || u >= order_ || v < 0 || v >= order_ || u == v)
            throw DomainError("tree edge endpoint out of range");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    // order-1 edges + connected => acyclic
    std::vector<char> seen(order_, 0);
    std::queue<int> q;
    q.push(0);
    seen[0] = 1;
    int reached = 1;
    while (!q.empty()) {
        int u = q.front();
        q.pop();
        for (int w : adj_[u])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                q.push(w);
            }
    }
    if (reached != order_) throw DomainError("tree edge list is not connected");
}

BurningSchedule::BurningSchedule(std::vector<VertexCoord> sources, int horizon)
    : sources_(std::move(sources)), horizon_(horizon) {
    if (sources_.empty()) throw DomainError("schedule needs at least one source");
    if (horizon_ < static_cast<int>(sources_.size()))
        throw DomainError("schedule has more sources than rounds");
    for (size_t i = 0; i < sources_.size(); ++i)
        for (size_t j = i + 1; j < sources_.size(); ++j)
            if (sources_[i] == sources_[j])
                throw DomainError("duplicate source vertex in schedule");
}

Topology Topology::from(const Spider& s) {
    Topology t;
    t.kind_ = Kind::SpiderK;
    t.lens_ = s.arm_lengths();
    t.adj_.assign(s.order(), {});
    int next = 1;
    for (int a = 0; a < s.arm_count(); ++a) {
        t.offsets_.push_back(next);
        int prev = 0;  // head
        for (int p = 0; p < t.lens_[a]; ++p) {
            t.adj_[prev].push_back(next);
            t.adj_[next].push_back(prev);
            prev = next++;
        }
    }
    t.finalize_components();
    return t;
}

Topology Topology::from(const PathForest& f) {
    Topology t;
    t.kind_ = Kind::ForestK;
    t.lens_ = f.path_orders();
    t.adj_.assign(f.order(), {});
    int next = 0;
    for (int j = 0; j < f.path_count(); ++j) {
        t.offsets_.push_back(next);
        for (int p = 0; p + 1 < t.lens_[j]; ++p) {
            t.adj_[next + p].push_back(next + p + 1);
            t.adj_[next + p + 1].push_back(next + p);
        }
        next += t.lens_[j];
    }
    t.finalize_components();
    return t;
}

Topology Topology::from(const Tree& tr) {
    Topology t;
    t.kind_ = Kind::TreeK;
    t.adj_ = tr.adj();
    t.finalize_components();
    return t;
}

void Topology::finalize_components() {
    comp_.assign(order(), -1);
    comp_count_ = 0;
    for (int s = 0; s < order(); ++s) {
        if (comp_[s] >= 0) continue;
        std::queue<int> q;
        q.push(s);
        comp_[s] = comp_count_;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (int w : adj_[u])
                if (comp_[w] < 0) {
                    comp_[w] = comp_count_;
                    q.push(w);
                }
        }
        ++comp_count_;
    }
}

int Topology::resolve(const VertexCoord& c) const {
    switch (c.kind) {
        case VertexCoord::Kind::Id:
            if (c.index < 0 || c.index >= order())
                throw CoordinateOutOfRange("vertex id out of range");
            return c.index;
        case VertexCoord::Kind::Head:
            if (kind_ != Kind::SpiderK)
                throw CoordinateOutOfRange("head coordinate on a non-spider");
            return 0;
        case VertexCoord::Kind::Arm: {
            if (kind_ != Kind::SpiderK)
                throw CoordinateOutOfRange("arm coordinate on a non-spider");
            if (c.index < 1 || c.index > static_cast<int>(lens_.size()))
                throw CoordinateOutOfRange("arm index out of range");
            if (c.pos < 1 || c.pos > lens_[c.index - 1])
                throw CoordinateOutOfRange("arm position out of range");
            return offsets_[c.index - 1] + c.pos - 1;
        }
        case VertexCoord::Kind::Path: {
            if (kind_ != Kind::ForestK)
                throw CoordinateOutOfRange("path coordinate on a non-forest");
            if (c.index < 1 || c.index > static_cast<int>(lens_.size()))
                throw CoordinateOutOfRange("path index out of range");
            if (c.pos < 1 || c.pos > lens_[c.index - 1])
                throw CoordinateOutOfRange("path position out of range");
            return offsets_[c.index - 1] + c.pos - 1;
        }
    }
    throw CoordinateOutOfRange("bad coordinate kind " + coord_kind_name(c.kind));
}

VertexCoord Topology::coord_of(int id) const {
    if (id < 0 || id >= order()) throw CoordinateOutOfRange("vertex id out of range");
    switch (kind_) {
        case Kind::TreeK: return VertexCoord::id(id);
        case Kind::SpiderK: {
            if (id == 0) return VertexCoord::head();
            for (int a = static_cast<int>(offsets_.size()) - 1; a >= 0; --a)
                if (id >= offsets_[a]) return VertexCoord::arm(a + 1, id - offsets_[a] + 1);
            throw CoordinateOutOfRange("unmapped spider id");
        }
        case Kind::ForestK: {
            for (int j = static_cast<int>(offsets_.size()) - 1; j >= 0; --j)
                if (id >= offsets_[j]) return VertexCoord::path(j + 1, id - offsets_[j] + 1);
            throw CoordinateOutOfRange("unmapped forest id");
        }
    }
    throw CoordinateOutOfRange("unmapped id");
}

}  // namespace burn
