#pragma once

#include <functional>

#include "burn/types.hpp"

namespace burn {

// Every unlabeled free tree of the given order, each exactly once.
// Rooted level sequences are generated by the constant-time successor rule
// and deduplicated per free-isomorphism class through a canonical
// center-rooted encoding. Capped at order 20 (SearchCapExceeded above).
void for_each_free_tree(int order, const std::function<void(const Tree&)>& fn);

long long count_free_trees(int order);

int leaf_count(const Tree& t);

}  // namespace burn
