#pragma once
// One tile at a time: scan every (i, j) start, take the longest unmarked
// common run, ties to the smallest i then j.

#include <cstddef>
#include <vector>

namespace oracle {

struct NaiveTile {
  std::size_t a = 0, b = 0, len = 0;
};

template <typename T>
std::vector<NaiveTile> tiles_naive(const std::vector<T>& a, const std::vector<T>& b,
                                   std::size_t min_match) {
  std::vector<bool> ma(a.size()), mb(b.size());
  std::vector<NaiveTile> out;
  for (;;) {
    NaiveTile best;
    for (std::size_t i = 0; i < a.size(); ++i) {
      for (std::size_t j = 0; j < b.size(); ++j) {
        std::size_t k = 0;
        while (i + k < a.size() && j + k < b.size() && !ma[i + k] && !mb[j + k] &&
               a[i + k] == b[j + k]) {
          ++k;
        }
        if (k > best.len) best = {i, j, k};
      }
    }
    if (best.len == 0 || best.len < min_match) break;
    for (std::size_t k = 0; k < best.len; ++k) ma[best.a + k] = mb[best.b + k] = true;
    out.push_back(best);
  }
  return out;
}

}  // namespace oracle
