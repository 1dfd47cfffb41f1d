#pragma once

#include <cstddef>

#include "scpd/repr/representations.hpp"
#include "scpd/sim/sequence.hpp"

namespace scpd::sim {

inline constexpr std::size_t kDefaultTreeNodePairCap = 4'000'000;

/// Exact ordered tree edit distance with unit costs for relabel, insert and
/// delete (Zhang–Shasha). Sizes are node counts. Throws ResourceLimit when
/// size_a · size_b exceeds `node_pair_cap`.
EditDistanceResult tree_edit_distance(const repr::LabeledTree& a, const repr::LabeledTree& b,
                                      std::size_t node_pair_cap = kDefaultTreeNodePairCap);

}  // namespace scpd::sim
