#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "scpd/detect/submission.hpp"
#include "scpd/sim/tree_edit.hpp"

namespace scpd::detect {

/// The six naive detectors: representation x comparator.
enum class DetectorId { StringED, StringTile, TokenED, TokenTile, TreeED, GraphED };

inline constexpr std::array<DetectorId, 6> kAllDetectors = {
    DetectorId::StringED, DetectorId::StringTile, DetectorId::TokenED,
    DetectorId::TokenTile, DetectorId::TreeED,    DetectorId::GraphED};

/// CLI name, e.g. "token-ed".
std::string_view name_of(DetectorId id);
/// Display name, e.g. "Token ED".
std::string_view title_of(DetectorId id);
std::optional<DetectorId> parse_detector(std::string_view name);

struct DetectorOptions {
  std::size_t string_min_match = 20;
  std::size_t token_min_match = 12;
  std::size_t tree_node_pair_cap = sim::kDefaultTreeNodePairCap;
};

struct FileSimilarity {
  std::string file_a;
  std::string file_b;
  double score = 0.0;  // [0, 1]
  bool flagged = false;
  std::string note;  // why the pair was flagged
};

struct SubmissionPairResult {
  DetectorId detector = DetectorId::StringED;
  std::string sub_a;
  std::string sub_b;
  double percent = 0.0;                    // [0, 100]
  std::vector<FileSimilarity> file_matrix;  // row-major, |A| x |B|
  std::size_t flagged = 0;
};

FileSimilarity file_sim(DetectorId detector, const AnalyzedFile& a, const AnalyzedFile& b,
                        const DetectorOptions& options = {});

/// Best-match average over both directions:
///   100 * (sum_a max_b FSim + sum_b max_a FSim) / (|A| + |B|)
SubmissionPairResult submission_sim(DetectorId detector, const Submission& a,
                                    const Submission& b, const DetectorOptions& options = {});

/// Element-wise submission_sim; pairs may be scored on `threads` workers,
/// results keep the input order.
std::vector<SubmissionPairResult> batch_sim(
    DetectorId detector, const std::vector<std::pair<Submission, Submission>>& pairs,
    const DetectorOptions& options = {}, std::size_t threads = 1);

}  // namespace scpd::detect
