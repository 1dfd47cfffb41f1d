#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "scpd/detect/detector.hpp"
#include "scpd/mutate/config.hpp"

namespace scpd::pipeline {

enum class ExperimentKind { PerTransformation, FixedSet, RandomSets, PerInjection, AllInjection };

std::string_view name_of(ExperimentKind k);
std::optional<ExperimentKind> parse_experiment(std::string_view s);
bool is_injection(ExperimentKind k);

inline constexpr int kReportSchemaVersion = 1;
inline const std::vector<double> kDefaultChances = {0.1, 0.2, 0.4, 0.6, 0.8, 1.0};

struct RunConfig {
  std::filesystem::path base_dir;  // one sub-directory (or .mj file) per base program
  std::optional<std::filesystem::path> seed_pool_dir;
  // Template for every cell: limits, variants_per_base, seed and safe_swap are
  // used as is. `transforms` picks the per-transformation ids or the fixed
  // set, `injections` the per-injection scopes or the injected set.
  mutate::MutationConfig mutation;
  std::string set_label;  // fixed-set and all-injection label; derived when empty
  std::vector<double> chances = kDefaultChances;
  std::vector<detect::DetectorId> detectors;
  ExperimentKind kind = ExperimentKind::PerTransformation;
  std::size_t reps = 10;  // random-sets repetitions
  std::filesystem::path out_dir;  // variants are written below it when set
  std::size_t threads = 1;
  detect::DetectorOptions detector_options;

  /// Throws ConfigError.
  void validate() const;
};

/// One modification set of the experiment (a column of the heat maps).
struct ModificationSet {
  std::string label;
  std::vector<mutate::TransformId> transforms;  // random sets: drawn per base, see PairResult
  std::vector<mutate::InjectionScope> injections;
};

/// One (base, variant) pair scored by one detector.
struct PairResult {
  std::string base_id;
  std::string set;
  double chance = 0.0;
  std::size_t variant = 0;
  detect::DetectorId detector = detect::DetectorId::StringED;
  double sim = 0.0;  // percent
  std::size_t n_transforms = 0;
  std::size_t l_lloc_injected = 0;
  std::size_t flagged = 0;
  std::vector<mutate::TransformId> transforms;  // the set actually applied
};

struct RobustnessScore {
  detect::DetectorId detector = detect::DetectorId::StringED;
  std::string set;
  double chance = 0.0;
  double avg_sim = 0.0;
  std::optional<double> rct;
  std::optional<double> rci;
  std::size_t n_pairs = 0;
  std::size_t n_skipped_saturated = 0;  // sim >= 100, left out of the ratio mean
  std::size_t n_skipped_zero = 0;       // nothing applied, left out of the ratio mean
};

struct RunReport {
  nlohmann::ordered_json config;
  ExperimentKind kind = ExperimentKind::PerTransformation;
  std::vector<ModificationSet> sets;
  std::vector<double> chances;
  std::vector<detect::DetectorId> detectors;
  std::vector<std::string> bases;
  std::vector<PairResult> pairs;  // ordered by set, chance, base, variant, detector
  std::vector<RobustnessScore> grid;  // ordered by set, chance, detector
  std::vector<std::string> warnings;
  double elapsed_seconds = 0.0;

  [[nodiscard]] const RobustnessScore* cell(detect::DetectorId d, const std::string& set,
                                            double chance) const;
};

/// Per-cell aggregates from the per-pair dump. Ratios are means of per-pair
/// ratios; RCT for transformation experiments, RCI for injection ones.
std::vector<RobustnessScore> aggregate(const std::vector<PairResult>& pairs,
                                       const std::vector<ModificationSet>& sets,
                                       const std::vector<double>& chances,
                                       const std::vector<detect::DetectorId>& detectors,
                                       bool injection);

/// Loads every base below base_dir, generates variants for every
/// set x chance cell and scores each (base, variant) pair with each detector.
RunReport run(const RunConfig& config);

/// Modification sets of an experiment; random sets get their labels only.
std::vector<ModificationSet> experiment_sets(const RunConfig& config);

/// Seed of one cell, mixed from the run seed and the cell coordinates.
std::uint64_t cell_seed(std::uint64_t run_seed, std::size_t base, std::size_t set,
                        std::size_t chance);

/// Percent label used in file and directory names, e.g. 0.1 -> "10".
std::string chance_label(double chance);

nlohmann::ordered_json to_json(const RunReport& report);
RunReport report_from_json(const nlohmann::ordered_json& j);

}  // namespace scpd::pipeline
