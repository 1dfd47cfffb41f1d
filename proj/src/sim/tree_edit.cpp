#include "scpd/sim/tree_edit.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "scpd/errors.hpp"

namespace scpd::sim {

namespace {

// Post-order view of a LabeledTree: labels and leftmost-leaf indices.
struct PostOrder {
  std::vector<std::uint32_t> labels;
  std::vector<std::size_t> leftmost;
  std::vector<std::size_t> keyroots;

  explicit PostOrder(const repr::LabeledTree& t) {
    const std::size_t n = t.size();
    labels.reserve(n);
    leftmost.reserve(n);
    if (n == 0) return;

    // Iterative post-order; each frame is (node, next child position).
    std::vector<std::pair<std::uint32_t, std::size_t>> stack{{0U, 0U}};
    std::vector<std::size_t> first_leaf;  // parallel to stack
    first_leaf.push_back(SIZE_MAX);
    while (!stack.empty()) {
      auto& [node, child] = stack.back();
      const auto& kids = t.children[node];
      if (child < kids.size()) {
        const auto next = kids[child++];
        stack.emplace_back(next, 0U);
        first_leaf.push_back(SIZE_MAX);
        continue;
      }
      const std::size_t index = labels.size();
      const std::size_t lml = first_leaf.back() == SIZE_MAX ? index : first_leaf.back();
      labels.push_back(t.labels[node]);
      leftmost.push_back(lml);
      stack.pop_back();
      first_leaf.pop_back();
      if (!first_leaf.empty() && first_leaf.back() == SIZE_MAX) first_leaf.back() = lml;
    }

    // A keyroot is the highest-numbered node for each distinct leftmost leaf.
    std::vector<std::size_t> highest(n, SIZE_MAX);
    for (std::size_t i = 0; i < n; ++i) highest[leftmost[i]] = i;
    for (std::size_t i = 0; i < n; ++i) {
      if (highest[leftmost[i]] == i) keyroots.push_back(i);
    }
  }
};

}  // namespace

EditDistanceResult tree_edit_distance(const repr::LabeledTree& a, const repr::LabeledTree& b,
                                      std::size_t node_pair_cap) {
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n == 0 || m == 0) return {std::max(n, m), n, m};
  if (n * m > node_pair_cap) {
    throw ResourceLimit("tree edit distance: " + std::to_string(n) + " x " + std::to_string(m) +
                        " node pairs exceed cap " + std::to_string(node_pair_cap));
  }

  const PostOrder ta(a);
  const PostOrder tb(b);
  std::vector<std::uint32_t> treedist(n * m, 0);
  std::vector<std::uint32_t> forest((n + 1) * (m + 1), 0);

  for (const std::size_t i : ta.keyroots) {
    for (const std::size_t j : tb.keyroots) {
      const std::size_t li = ta.leftmost[i];
      const std::size_t lj = tb.leftmost[j];
      const std::size_t rows = i - li + 2;
      const std::size_t cols = j - lj + 2;
      auto fd = [&](std::size_t r, std::size_t c) -> std::uint32_t& {
        return forest[r * (m + 1) + c];
      };
      fd(0, 0) = 0;
      for (std::size_t r = 1; r < rows; ++r) fd(r, 0) = fd(r - 1, 0) + 1;
      for (std::size_t c = 1; c < cols; ++c) fd(0, c) = fd(0, c - 1) + 1;
      for (std::size_t r = 1; r < rows; ++r) {
        const std::size_t x = li + r - 1;
        for (std::size_t c = 1; c < cols; ++c) {
          const std::size_t y = lj + c - 1;
          const std::uint32_t del = fd(r - 1, c) + 1;
          const std::uint32_t ins = fd(r, c - 1) + 1;
          if (ta.leftmost[x] == li && tb.leftmost[y] == lj) {
            const std::uint32_t rel = fd(r - 1, c - 1) + (ta.labels[x] == tb.labels[y] ? 0U : 1U);
            fd(r, c) = std::min({del, ins, rel});
            treedist[x * m + y] = fd(r, c);
          } else {
            const std::size_t pr = ta.leftmost[x] - li;
            const std::size_t pc = tb.leftmost[y] - lj;
            fd(r, c) = std::min({del, ins, fd(pr, pc) + treedist[x * m + y]});
          }
        }
      }
    }
  }
  return {treedist[(n - 1) * m + (m - 1)], n, m};
}

}  // namespace scpd::sim
