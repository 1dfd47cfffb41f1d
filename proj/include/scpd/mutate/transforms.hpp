#pragma once

#include <string>
#include <vector>

#include "scpd/lang/ast.hpp"
#include "scpd/mutate/config.hpp"
#include "scpd/mutate/modlog.hpp"
#include "scpd/mutate/rng.hpp"

namespace scpd::mutate {

struct TransformOptions {
  bool safe_swap = false;  // tSO only swaps commutative operators
};

/// Rolls once per node of interest and rewrites the unit in place. `file` is
/// copied into the records. Node ids are renumbered before the walk, so the
/// record paths refer to the unit as it was when the filter started.
std::vector<ModificationRecord> apply_transform(TransformId t, lang::CompilationUnit& unit,
                                                double chance, Rng& rng,
                                                const std::string& file,
                                                const TransformOptions& options = {});

/// Runs the enabled filters in the fixed order of kAllTransforms.
std::vector<ModificationRecord> apply_all_transforms(const std::vector<TransformId>& enabled,
                                                     lang::CompilationUnit& unit, double chance,
                                                     Rng& rng, const std::string& file,
                                                     const TransformOptions& options = {});

/// Type default used by tAD: 0, 0L, 0.0f, 0.0, false, '\0' or null.
lang::Literal default_value(const lang::TypeRef& type, int extra_dims = 0);

}  // namespace scpd::mutate
