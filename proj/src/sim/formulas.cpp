#include "scpd/sim/formulas.hpp"

#include <algorithm>

#include "scpd/errors.hpp"

namespace scpd::sim {

double fsim_ed(std::size_t size_a, std::size_t size_b, std::size_t distance) {
  const std::size_t larger = std::max(size_a, size_b);
  if (larger == 0) throw DegenerateInput("edit-distance similarity of two empty representations");
  const double s = 1.0 - static_cast<double>(distance) / static_cast<double>(larger);
  return std::clamp(s, 0.0, 1.0);
}

double fsim_gst(std::size_t size_a, std::size_t size_b, std::size_t covered) {
  const std::size_t total = size_a + size_b;
  if (total == 0) throw DegenerateInput("tiling similarity of two empty representations");
  return std::clamp(2.0 * static_cast<double>(covered) / static_cast<double>(total), 0.0, 1.0);
}

}  // namespace scpd::sim
