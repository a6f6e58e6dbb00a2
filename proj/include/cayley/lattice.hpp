#pragma once

#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// Every subgroup of g, each exactly once, sorted by (order, element list).
/// Layered closure enumeration: layer k+1 consists of closures of layer-k
/// subgroups extended by one extra generator, deduplicated globally.
std::vector<Subgroup> all_subgroups(const FiniteGroup& g,
                                    int max_lattice = Limits().max_lattice);

}  // namespace cayley
