#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace scpd::mutate {

enum class TransformId {
  tAC, tRC, tMC, tRI, tRS, tRM, tSO, tUD, tFW, tEA, tEU, tSV, tAD, tSD
};

/// Fixed application order.
inline constexpr std::array<TransformId, 14> kAllTransforms = {
    TransformId::tAC, TransformId::tRC, TransformId::tMC, TransformId::tRI, TransformId::tRS,
    TransformId::tRM, TransformId::tSO, TransformId::tUD, TransformId::tFW, TransformId::tEA,
    TransformId::tEU, TransformId::tSV, TransformId::tAD, TransformId::tSD};

inline constexpr std::array<TransformId, 5> kFiveSet = {
    TransformId::tRS, TransformId::tRM, TransformId::tSO, TransformId::tFW, TransformId::tSD};

inline constexpr std::array<TransformId, 3> kCosmeticSet = {TransformId::tAC, TransformId::tRC,
                                                            TransformId::tMC};

enum class InjectionScope { File, Class, Method, Statement };

inline constexpr std::array<InjectionScope, 4> kAllScopes = {
    InjectionScope::File, InjectionScope::Class, InjectionScope::Method,
    InjectionScope::Statement};

std::string_view name_of(TransformId t);
std::string_view name_of(InjectionScope s);  // "file", "class", ...
std::optional<TransformId> parse_transform(std::string_view s);
std::optional<InjectionScope> parse_scope(std::string_view s);

struct Limits {
  std::size_t files = 4;       // f, per variant
  std::size_t classes = 1;     // c, per file
  std::size_t methods = 9;     // m, per class
  std::size_t statements = 12; // s, per method
};

/// "f=4,c=1,m=9,s=12"; missing keys keep their defaults. Throws ConfigError.
Limits parse_limits(std::string_view text);
std::string to_string(const Limits& l);

struct MutationConfig {
  double transform_chance = 0.0;
  double inject_chance = 0.0;
  std::vector<TransformId> transforms;     // kept in application order
  std::vector<InjectionScope> injections;  // kept in scope order
  Limits limits;
  std::uint64_t seed = 0;
  std::filesystem::path seed_pool;
  std::size_t variants_per_base = 1;
  bool safe_swap = false;

  /// Throws ConfigError on out-of-range values.
  void validate() const;
  /// Sorts and deduplicates transforms and injections into canonical order.
  void canonicalize();
};

}  // namespace scpd::mutate
