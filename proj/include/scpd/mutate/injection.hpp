#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "scpd/lang/ast.hpp"
#include "scpd/mutate/config.hpp"
#include "scpd/mutate/modlog.hpp"
#include "scpd/mutate/rng.hpp"

namespace scpd::mutate {

struct NamedUnit {
  std::string name;  // file name, e.g. "Main.mj"
  lang::CompilationUnit unit;
};

/// Donor fragments per scope.
struct SeedPool {
  std::vector<NamedUnit> files;
  std::vector<lang::ClassDecl> classes;
  std::vector<lang::MethodDecl> methods;
  std::vector<lang::Stmt> statements;  // non-block statements reached through blocks only
  std::vector<std::string> warnings;   // donors that failed to parse

  [[nodiscard]] std::size_t count(InjectionScope scope) const;

  static SeedPool from_units(std::vector<NamedUnit> units);
};

/// Parses every `.mj` file of `dir` (sorted by name). Files that fail to
/// parse are skipped and reported in `warnings`.
SeedPool index_seed_pool(const std::filesystem::path& dir);

/// One injection filter over the variant's files.
///   File:      one roll; on success exactly f donor files are appended.
///   Class:     c rolls per file.
///   Method:    m rolls per class.
///   Statement: min(s, lloc(method)) rolls per method.
/// Throws EmptySeedPool when a roll succeeds and the pool has nothing to give.
std::vector<ModificationRecord> inject(std::vector<NamedUnit>& files, InjectionScope scope,
                                       const MutationConfig& config, Rng& rng,
                                       const SeedPool& pool);

}  // namespace scpd::mutate
