#pragma once

#include <cstddef>
#include <vector>

#include "scpd/repr/pdg.hpp"
#include "scpd/sim/sequence.hpp"

namespace scpd::sim {

/// Node correspondence found by the greedy matcher; -1 marks an unmatched
/// node.
struct GraphMatching {
  std::vector<std::ptrdiff_t> a_to_b;
  std::vector<std::ptrdiff_t> b_to_a;
};

/// Greedy node matching between two PDGs.
///
/// Starting from the entry nodes, control successors of each matched pair
/// are paired with equal-labeled successors on the other side, preferring
/// candidates with the same structural signature and the most shared
/// neighbor labels, and the walk recurses into every new pair. Nodes the
/// walk does not reach are then paired by label, data nodes by name, and any
/// leftover nodes of the same kind are paired as relabelings.
GraphMatching greedy_graph_matching(const repr::Pdg& a, const repr::Pdg& b);

/// Cost of the edit path induced by a matching: one per relabeled pair, per
/// unmatched node, and per edge without a counterpart under the matching.
std::size_t matching_cost(const repr::Pdg& a, const repr::Pdg& b, const GraphMatching& m);

/// Approximate graph edit distance (an upper bound on the exact value).
/// Sizes are node count plus edge count.
EditDistanceResult graph_ed_greedy(const repr::Pdg& a, const repr::Pdg& b);

}  // namespace scpd::sim
