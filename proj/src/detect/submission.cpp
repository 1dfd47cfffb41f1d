#include "scpd/detect/submission.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "scpd/lang/parser.hpp"

namespace scpd::detect {

namespace fs = std::filesystem;

AnalyzedFile::AnalyzedFile(lang::SourceText src) : src_(std::move(src)) {
  try {
    tokens_ = repr::token_string_of(src_);
  } catch (const lang::LexError& e) {
    diagnostic_ = lang::render_diagnostic(src_, e);
    return;
  }
  try {
    unit_ = lang::parse(src_);
  } catch (const lang::ParseError& e) {
    diagnostic_ = lang::render_diagnostic(src_, e);
    return;
  }
  tree_ = repr::ast_tree_of(*unit_);
  pdgs_ = repr::pdgs_of(*unit_);
}

Submission Submission::from_sources(std::string id, std::vector<lang::SourceText> sources) {
  if (sources.empty()) throw std::invalid_argument("submission " + id + " has no files");
  Submission s;
  s.id = std::move(id);
  std::set<std::string> paths;
  for (auto& src : sources) {
    if (!paths.insert(src.path()).second) {
      throw std::invalid_argument("duplicate file " + src.path() + " in submission " + s.id);
    }
    s.files.push_back(std::make_shared<const AnalyzedFile>(std::move(src)));
  }
  return s;
}

Submission Submission::load(const fs::path& path) {
  std::vector<fs::path> files;
  if (fs::is_regular_file(path)) {
    files.push_back(path);
  } else if (fs::is_directory(path)) {
    for (const auto& entry : fs::directory_iterator(path)) {
      if (entry.is_regular_file() && entry.path().extension() == ".mj") {
        files.push_back(entry.path());
      }
    }
    std::sort(files.begin(), files.end());
  } else {
    throw std::runtime_error("cannot read submission " + path.string());
  }
  if (files.empty()) throw std::runtime_error("no .mj files in " + path.string());
  std::vector<lang::SourceText> sources;
  sources.reserve(files.size());
  for (const auto& f : files) sources.push_back(lang::SourceText::load(f));
  const fs::path normalized = path.lexically_normal();
  std::string id = normalized.filename().string();
  if (id.empty()) id = normalized.parent_path().filename().string();
  if (fs::is_regular_file(path)) id = path.stem().string();
  return from_sources(std::move(id), std::move(sources));
}

}  // namespace scpd::detect
