#pragma once

// Sequence kernels: unit-cost Levenshtein distance and greedy tiling.
// Both work over any equality-comparable element type (characters of a
// file, token kinds of a token string).

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace scpd::sim {

struct EditDistanceResult {
  std::size_t distance = 0;
  std::size_t size_a = 0;
  std::size_t size_b = 0;
};

template <typename T>
EditDistanceResult levenshtein(std::span<const T> a, std::span<const T> b) {
  // Keep the shorter sequence along the row.
  if (a.size() < b.size()) {
    auto r = levenshtein(b, a);
    std::swap(r.size_a, r.size_b);
    return r;
  }
  const std::size_t m = b.size();
  std::vector<std::uint32_t> row(m + 1);
  for (std::size_t j = 0; j <= m; ++j) row[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    std::uint32_t diag = row[0];
    row[0] = static_cast<std::uint32_t>(i);
    const T& ai = a[i - 1];
    for (std::size_t j = 1; j <= m; ++j) {
      const std::uint32_t up = row[j];
      const std::uint32_t sub = diag + (ai == b[j - 1] ? 0U : 1U);
      row[j] = std::min({up + 1, row[j - 1] + 1, sub});
      diag = up;
    }
  }
  return {row[m], a.size(), b.size()};
}

struct Tile {
  std::size_t start_a = 0;
  std::size_t start_b = 0;
  std::size_t length = 0;

  friend bool operator==(const Tile&, const Tile&) = default;
};

struct TileCoverage {
  std::size_t covered = 0;  // marked elements in each sequence
  std::size_t min_match = 1;
  std::vector<Tile> tiles;  // in selection order
};

/// Repeatedly marks the longest common substring made only of unmarked
/// elements, as long as it has at least `min_match` elements. Among equally
/// long candidates the one with the smallest start in `a`, then in `b`, is
/// taken first.
///
/// All maximal-length candidates of one length are collected in a single
/// O(|a|·|b|) scan and placed in (start_a, start_b) order, skipping those
/// that overlap a tile placed earlier in the same pass; this selects exactly
/// the tiles the one-at-a-time procedure would.
template <typename T>
TileCoverage greedy_tiles(std::span<const T> a, std::span<const T> b, std::size_t min_match) {
  TileCoverage cov;
  cov.min_match = std::max<std::size_t>(min_match, 1);
  const std::size_t n = a.size();
  const std::size_t m = b.size();
  if (n < cov.min_match || m < cov.min_match) return cov;

  std::vector<std::uint8_t> marked_a(n, 0);
  std::vector<std::uint8_t> marked_b(m, 0);
  std::vector<std::uint32_t> prev(m + 1, 0);
  std::vector<std::uint32_t> cur(m + 1, 0);
  std::vector<std::pair<std::size_t, std::size_t>> ends;  // (i, j) one past the match

  while (true) {
    std::size_t best = 0;
    ends.clear();
    std::fill(prev.begin(), prev.end(), 0U);
    for (std::size_t i = 1; i <= n; ++i) {
      cur[0] = 0;
      const bool row_free = marked_a[i - 1] == 0;
      const T& ai = a[i - 1];
      for (std::size_t j = 1; j <= m; ++j) {
        if (row_free && marked_b[j - 1] == 0 && ai == b[j - 1]) {
          const std::uint32_t len = prev[j - 1] + 1;
          cur[j] = len;
          if (len >= cov.min_match && len >= best) {
            if (len > best) {
              best = len;
              ends.clear();
            }
            ends.emplace_back(i, j);
          }
        } else {
          cur[j] = 0;
        }
      }
      std::swap(prev, cur);
    }
    if (best == 0) break;

    for (const auto& [i, j] : ends) {
      const std::size_t sa = i - best;
      const std::size_t sb = j - best;
      const bool free_a = std::none_of(marked_a.begin() + static_cast<std::ptrdiff_t>(sa),
                                       marked_a.begin() + static_cast<std::ptrdiff_t>(i),
                                       [](std::uint8_t v) { return v != 0; });
      const bool free_b = std::none_of(marked_b.begin() + static_cast<std::ptrdiff_t>(sb),
                                       marked_b.begin() + static_cast<std::ptrdiff_t>(j),
                                       [](std::uint8_t v) { return v != 0; });
      if (!free_a || !free_b) continue;
      std::fill(marked_a.begin() + static_cast<std::ptrdiff_t>(sa),
                marked_a.begin() + static_cast<std::ptrdiff_t>(i), std::uint8_t{1});
      std::fill(marked_b.begin() + static_cast<std::ptrdiff_t>(sb),
                marked_b.begin() + static_cast<std::ptrdiff_t>(j), std::uint8_t{1});
      cov.tiles.push_back({sa, sb, best});
      cov.covered += best;
    }
  }
  return cov;
}

}  // namespace scpd::sim
