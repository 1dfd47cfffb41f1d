#pragma once
// Tree edit distance by enumerating every node mapping. A mapping is a valid
// edit script iff it is one-to-one and keeps ancestor and left-of relations;
// its cost is relabels plus unmapped nodes on either side. Exponential, so
// only for trees of a handful of nodes.

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace oracle {

struct SmallTree {
  std::vector<std::uint32_t> labels;             // pre-order
  std::vector<std::vector<std::size_t>> children;
};

namespace detail {

// anc[x][y]: x is a proper ancestor of y.
inline std::vector<std::vector<bool>> ancestors(const SmallTree& t) {
  const std::size_t n = t.labels.size();
  std::vector<std::vector<bool>> anc(n, std::vector<bool>(n));
  for (std::size_t x = n; x-- > 0;) {
    for (auto c : t.children[x]) {
      anc[x][c] = true;
      for (std::size_t y = 0; y < n; ++y) {
        if (anc[c][y]) anc[x][y] = true;
      }
    }
  }
  return anc;
}

}  // namespace detail

inline std::size_t ted_by_mapping(const SmallTree& a, const SmallTree& b) {
  const std::size_t n = a.labels.size();
  const std::size_t m = b.labels.size();
  const auto anc_a = detail::ancestors(a);
  const auto anc_b = detail::ancestors(b);
  // Pre-order index order plus "not an ancestor" gives left-of.
  auto left_a = [&](std::size_t x, std::size_t y) { return x < y && !anc_a[x][y]; };
  auto left_b = [&](std::size_t x, std::size_t y) { return x < y && !anc_b[x][y]; };

  std::vector<std::ptrdiff_t> map(n, -1);
  std::vector<bool> used(m);
  std::size_t best = std::numeric_limits<std::size_t>::max();

  auto compatible = [&](std::size_t x, std::size_t y) {
    for (std::size_t p = 0; p < x; ++p) {
      if (map[p] < 0) continue;
      const auto q = static_cast<std::size_t>(map[p]);
      if (anc_a[p][x] != anc_b[q][y]) return false;
      if (left_a(p, x) != left_b(q, y)) return false;
    }
    return true;
  };

  auto rec = [&](auto&& self, std::size_t x, std::size_t mapped, std::size_t relabels) -> void {
    if (x == n) {
      const std::size_t cost = relabels + (n - mapped) + (m - mapped);
      if (cost < best) best = cost;
      return;
    }
    map[x] = -1;
    self(self, x + 1, mapped, relabels);
    for (std::size_t y = 0; y < m; ++y) {
      if (used[y] || !compatible(x, y)) continue;
      used[y] = true;
      map[x] = static_cast<std::ptrdiff_t>(y);
      self(self, x + 1, mapped + 1, relabels + (a.labels[x] != b.labels[y] ? 1 : 0));
      used[y] = false;
      map[x] = -1;
    }
  };
  rec(rec, 0, 0, 0);
  return best;
}

}  // namespace oracle
