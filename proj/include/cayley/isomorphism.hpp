#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "cayley/group.hpp"

namespace cayley {

/// Some isomorphism g -> h if one exists. Rejects cheaply on order,
/// abelianness and element-order/centralizer-size multisets, then backtracks
/// over images of a minimal generating sequence of g (generators picked by
/// smallest index, candidates restricted to equal element order and equal
/// centralizer size), extending each partial assignment to a full map by
/// product propagation. Deterministic: the same pair always yields the same
/// map.
std::optional<GroupMap> find_isomorphism(const FiniteGroup& g, const FiniteGroup& h);

/// Enumerates every isomorphism g -> h in the deterministic search order,
/// passing each image vector to visit; stops early when visit returns true.
void for_each_isomorphism(const FiniteGroup& g, const FiniteGroup& h,
                          const std::function<bool(const std::vector<int>&)>& visit);

/// Greedy generating sequence: repeatedly adjoins the smallest element
/// outside the span of the previous ones.
std::vector<int> minimal_generating_sequence(const FiniteGroup& g);

}  // namespace cayley
