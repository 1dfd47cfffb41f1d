#include "scpd/detect/detector.hpp"

#include <algorithm>
#include <span>

#include "scpd/errors.hpp"
#include "scpd/parallel.hpp"
#include "scpd/repr/representations.hpp"
#include "scpd/sim/formulas.hpp"
#include "scpd/sim/graph_edit.hpp"
#include "scpd/sim/sequence.hpp"
#include "scpd/sim/tree_edit.hpp"

namespace scpd::detect {

namespace {

struct DetectorInfo {
  DetectorId id;
  std::string_view name;
  std::string_view title;
};

constexpr std::array<DetectorInfo, 6> kInfo = {{
    {DetectorId::StringED, "string-ed", "String ED"},
    {DetectorId::StringTile, "string-tile", "String Tile"},
    {DetectorId::TokenED, "token-ed", "Token ED"},
    {DetectorId::TokenTile, "token-tile", "Token Tile"},
    {DetectorId::TreeED, "tree-ed", "Tree ED"},
    {DetectorId::GraphED, "graph-ed", "Graph ED"},
}};

// Similarity for both-empty representations is 1 (identical emptiness).
template <typename Fn>
double or_identical_empty(Fn&& fn) {
  try {
    return fn();
  } catch (const DegenerateInput&) {
    return 1.0;
  }
}

template <typename T>
double tiled(std::span<const T> a, std::span<const T> b, std::size_t min_match) {
  // Greedy tie-breaking depends on argument order; a canonical order keeps
  // FSim(a, b) == FSim(b, a).
  if (std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end())) std::swap(a, b);
  const auto cov = sim::greedy_tiles(a, b, min_match);
  return or_identical_empty([&] { return sim::fsim_gst(a.size(), b.size(), cov.covered); });
}

template <typename T>
double edited(std::span<const T> a, std::span<const T> b) {
  const auto r = sim::levenshtein(a, b);
  return or_identical_empty([&] { return sim::fsim_ed(r.size_a, r.size_b, r.distance); });
}

double pdg_similarity(const repr::Pdg& a, const repr::Pdg& b) {
  const bool swap = repr::to_text(b) < repr::to_text(a);
  const auto r = swap ? sim::graph_ed_greedy(b, a) : sim::graph_ed_greedy(a, b);
  return or_identical_empty([&] { return sim::fsim_ed(r.size_a, r.size_b, r.distance); });
}

// Best-match average of a similarity matrix in both directions.
double best_match_average(const std::vector<double>& matrix, std::size_t rows, std::size_t cols) {
  if (rows == 0 && cols == 0) return 1.0;
  double total = 0.0;
  for (std::size_t i = 0; i < rows; ++i) {
    double best = 0.0;
    for (std::size_t j = 0; j < cols; ++j) best = std::max(best, matrix[i * cols + j]);
    total += best;
  }
  for (std::size_t j = 0; j < cols; ++j) {
    double best = 0.0;
    for (std::size_t i = 0; i < rows; ++i) best = std::max(best, matrix[i * cols + j]);
    total += best;
  }
  return total / static_cast<double>(rows + cols);
}

double graph_file_similarity(const std::vector<repr::Pdg>& a, const std::vector<repr::Pdg>& b) {
  std::vector<double> matrix(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) matrix[i * b.size() + j] = pdg_similarity(a[i], b[j]);
  }
  return best_match_average(matrix, a.size(), b.size());
}

std::span<const char> chars(const AnalyzedFile& f) {
  const auto text = repr::text_of(f.source());
  return {text.data(), text.size()};
}

std::span<const lang::TokenKind> kinds(const repr::TokenString& ts) { return ts.kinds; }

}  // namespace

std::string_view name_of(DetectorId id) { return kInfo[static_cast<std::size_t>(id)].name; }

std::string_view title_of(DetectorId id) { return kInfo[static_cast<std::size_t>(id)].title; }

std::optional<DetectorId> parse_detector(std::string_view name) {
  for (const auto& info : kInfo) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

FileSimilarity file_sim(DetectorId detector, const AnalyzedFile& a, const AnalyzedFile& b,
                        const DetectorOptions& options) {
  FileSimilarity out{a.path(), b.path(), 0.0, false, {}};
  auto flag = [&](const std::string& note) {
    out.score = 0.0;
    out.flagged = true;
    out.note = note;
    return out;
  };
  auto missing = [&](const void* pa) { return flag(pa == nullptr ? a.diagnostic() : b.diagnostic()); };

  switch (detector) {
    case DetectorId::StringED:
      out.score = edited(chars(a), chars(b));
      return out;
    case DetectorId::StringTile:
      out.score = tiled(chars(a), chars(b), options.string_min_match);
      return out;
    case DetectorId::TokenED:
    case DetectorId::TokenTile: {
      if (a.tokens() == nullptr || b.tokens() == nullptr) return missing(a.tokens());
      out.score = detector == DetectorId::TokenED
                      ? edited(kinds(*a.tokens()), kinds(*b.tokens()))
                      : tiled(kinds(*a.tokens()), kinds(*b.tokens()), options.token_min_match);
      return out;
    }
    case DetectorId::TreeED: {
      if (a.tree() == nullptr || b.tree() == nullptr) return missing(a.tree());
      try {
        const auto r = sim::tree_edit_distance(*a.tree(), *b.tree(), options.tree_node_pair_cap);
        out.score = or_identical_empty([&] { return sim::fsim_ed(r.size_a, r.size_b, r.distance); });
      } catch (const ResourceLimit& e) {
        return flag(e.what());
      }
      return out;
    }
    case DetectorId::GraphED: {
      if (a.pdgs() == nullptr || b.pdgs() == nullptr) return missing(a.pdgs());
      out.score = graph_file_similarity(*a.pdgs(), *b.pdgs());
      return out;
    }
  }
  return out;
}

SubmissionPairResult submission_sim(DetectorId detector, const Submission& a, const Submission& b,
                                    const DetectorOptions& options) {
  SubmissionPairResult result;
  result.detector = detector;
  result.sub_a = a.id;
  result.sub_b = b.id;
  const std::size_t rows = a.files.size();
  const std::size_t cols = b.files.size();
  std::vector<double> matrix(rows * cols);
  result.file_matrix.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      auto fs = file_sim(detector, *a.files[i], *b.files[j], options);
      matrix[i * cols + j] = fs.score;
      if (fs.flagged) ++result.flagged;
      result.file_matrix.push_back(std::move(fs));
    }
  }
  result.percent = 100.0 * best_match_average(matrix, rows, cols);
  return result;
}

std::vector<SubmissionPairResult> batch_sim(
    DetectorId detector, const std::vector<std::pair<Submission, Submission>>& pairs,
    const DetectorOptions& options, std::size_t threads) {
  std::vector<SubmissionPairResult> out(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t i) {
    out[i] = submission_sim(detector, pairs[i].first, pairs[i].second, options);
  });
  return out;
}

}  // namespace scpd::detect
