#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "scpd/mutate/config.hpp"
#include "scpd/mutate/injection.hpp"
#include "scpd/mutate/modlog.hpp"

namespace scpd::mutate {

struct BaseProgram {
  std::string id;
  std::vector<NamedUnit> files;

  /// A directory of `.mj` files, or one `.mj` file. Throws std::runtime_error
  /// with a `path:line:col` diagnostic when a file does not parse.
  static BaseProgram load(const std::filesystem::path& path);
  static BaseProgram from_sources(std::string id,
                                  const std::vector<std::pair<std::string, std::string>>& files);

  /// Canonically formatted files.
  [[nodiscard]] std::vector<std::pair<std::string, std::string>> formatted() const;
  /// FNV-1a over the formatted files, as 16 hex digits.
  [[nodiscard]] std::string hash() const;
};

/// Base programs below `dir`: every sub-directory holding `.mj` files and
/// every top-level `.mj` file is one base. A directory without such
/// sub-directories is itself a single base.
std::vector<BaseProgram> load_bases(const std::filesystem::path& dir);

struct Variant {
  std::string base_id;
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<std::pair<std::string, std::string>> files;  // name, formatted content
  ModificationLog log;
};

/// Variant k uses the substream seeded with config.seed ^ k.
Variant generate_variant(const BaseProgram& base, const MutationConfig& config,
                         const SeedPool& pool, std::size_t k);

std::vector<Variant> generate_variants(const BaseProgram& base, const MutationConfig& config,
                                       const SeedPool& pool, std::size_t threads = 1);

/// Writes `<out>/<base_id>/v<k>/` with the files, modlog.json and manifest.json.
/// `run_seed` is the user-facing seed the per-base config seed came from.
void write_variant(const Variant& v, const BaseProgram& base, const MutationConfig& config,
                   const std::filesystem::path& out, std::uint64_t run_seed);

nlohmann::ordered_json config_json(const MutationConfig& config);

}  // namespace scpd::mutate
