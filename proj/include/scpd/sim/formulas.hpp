#pragma once

#include <cstddef>

namespace scpd::sim {

/// Edit-distance similarity: 1 - d / max(size_a, size_b), clamped to [0, 1].
/// Throws DegenerateInput when both sizes are zero.
double fsim_ed(std::size_t size_a, std::size_t size_b, std::size_t distance);

/// Tiling similarity: 2c / (size_a + size_b). Throws DegenerateInput when
/// both sizes are zero.
double fsim_gst(std::size_t size_a, std::size_t size_b, std::size_t covered);

}  // namespace scpd::sim
