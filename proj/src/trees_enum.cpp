#include "burn/trees_enum.hpp"

#include <algorithm>
#include <string>
#include <unordered_set>
#include <vector>

namespace burn {

namespace {

// Canonical parenthesized encoding of a rooted tree (children sorted).
std::string rooted_encoding(int root, int parent, const std::vector<std::vector<int>>& adj) {
    std::vector<std::string> child;
    for (int w : adj[root])
        if (w != parent) child.push_back(rooted_encoding(w, root, adj));
    std::sort(child.begin(), child.end());
    std::string s = "(";
    for (const auto& c : child) s += c;
    s += ")";
    return s;
}

std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
    const int n = static_cast<int>(adj.size());
    if (n == 1) return {0};
    std::vector<int> deg(n), layer, next;
    int remaining = n;
    for (int v = 0; v < n; ++v) {
        deg[v] = static_cast<int>(adj[v].size());
        if (deg[v] <= 1) layer.push_back(v);
    }
    std::vector<char> gone(n, 0);
    while (remaining > 2) {
        next.clear();
        for (int v : layer) {
            gone[v] = 1;
            --remaining;
            for (int w : adj[v])
                if (!gone[w] && --deg[w] == 1) next.push_back(w);
        }
        layer.swap(next);
    }
    std::sort(layer.begin(), layer.end());
    return layer;
}

std::string free_encoding(const std::vector<std::vector<int>>& adj) {
    std::string best;
    for (int c : tree_centers(adj)) {
        std::string s = rooted_encoding(c, -1, adj);
        if (best.empty() || s < best) best = s;
    }
    return best;
}

// Successor rule over canonical level sequences of rooted trees
// (root at level 0; start is the path, end is the star).
bool next_level_sequence(std::vector<int>& L) {
    const int n = static_cast<int>(L.size());
    int p = -1;
    for (int i = n - 1; i >= 0; --i)
        if (L[i] > 1) {
            p = i;
            break;
        }
    if (p < 0) return false;
    int q = -1;
    for (int i = p - 1; i >= 0; --i)
        if (L[i] == L[p] - 1) {
            q = i;
            break;
        }
    for (int i = p; i < n; ++i) L[i] = L[i - (p - q)];
    return true;
}

std::vector<std::pair<int, int>> edges_from_levels(const std::vector<int>& L) {
    std::vector<std::pair<int, int>> edges;
    std::vector<int> stack;  // stack[d] = latest vertex at level d
    for (int i = 0; i < static_cast<int>(L.size()); ++i) {
        if (static_cast<int>(stack.size()) > L[i]) stack.resize(L[i]);
        if (L[i] > 0) edges.emplace_back(stack.back(), i);
        stack.push_back(i);
    }
    return edges;
}

}  // namespace

void for_each_free_tree(int order, const std::function<void(const Tree&)>& fn) {
    if (order < 1) throw DomainError("tree order must be positive");
    if (order > 20) throw SearchCapExceeded("free tree enumeration capped at order 20");
    if (order == 1) {
        fn(Tree(1, {}));
        return;
    }
    std::vector<int> L(order);
    for (int i = 0; i < order; ++i) L[i] = i;  // the path
    std::unordered_set<std::string> seen;
    do {
        Tree t(order, edges_from_levels(L));
        if (seen.insert(free_encoding(t.adj())).second) fn(t);
    } while (next_level_sequence(L));
}

long long count_free_trees(int order) {
    long long c = 0;
    for_each_free_tree(order, [&](const Tree&) { ++c; });
    return c;
}

int leaf_count(const Tree& t) {
    if (t.order() == 1) return 1;
    int c = 0;
    for (const auto& nb : t.adj())
        if (nb.size() == 1) ++c;
    return c;
}

}  // namespace burn
