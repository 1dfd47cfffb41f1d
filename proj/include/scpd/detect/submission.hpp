#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "scpd/lang/ast.hpp"
#include "scpd/lang/source.hpp"
#include "scpd/repr/pdg.hpp"
#include "scpd/repr/representations.hpp"

namespace scpd::detect {

/// A source file together with every representation the detectors need.
/// Representations that fail to build are left empty and the failure is
/// kept as a diagnostic.
class AnalyzedFile {
 public:
  explicit AnalyzedFile(lang::SourceText src);

  [[nodiscard]] const lang::SourceText& source() const noexcept { return src_; }
  [[nodiscard]] const std::string& path() const noexcept { return src_.path(); }

  [[nodiscard]] const repr::TokenString* tokens() const noexcept {
    return tokens_ ? &*tokens_ : nullptr;
  }
  [[nodiscard]] const lang::CompilationUnit* unit() const noexcept {
    return unit_ ? &*unit_ : nullptr;
  }
  [[nodiscard]] const repr::LabeledTree* tree() const noexcept { return tree_ ? &*tree_ : nullptr; }
  [[nodiscard]] const std::vector<repr::Pdg>* pdgs() const noexcept {
    return pdgs_ ? &*pdgs_ : nullptr;
  }
  /// Rendered `path:line:col: message` when lexing or parsing failed.
  [[nodiscard]] const std::string& diagnostic() const noexcept { return diagnostic_; }

 private:
  lang::SourceText src_;
  std::optional<repr::TokenString> tokens_;
  std::optional<lang::CompilationUnit> unit_;
  std::optional<repr::LabeledTree> tree_;
  std::optional<std::vector<repr::Pdg>> pdgs_;
  std::string diagnostic_;
};

/// One submission: an id and at least one file with unique paths.
struct Submission {
  std::string id;
  std::vector<std::shared_ptr<const AnalyzedFile>> files;

  static Submission from_sources(std::string id, std::vector<lang::SourceText> sources);
  /// Loads every `.mj` file of a directory (sorted by name), or a single
  /// `.mj` file.
  static Submission load(const std::filesystem::path& path);
};

}  // namespace scpd::detect
