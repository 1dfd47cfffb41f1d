#include "scpd/mutate/config.hpp"

#include <algorithm>
#include <charconv>

#include "scpd/errors.hpp"
#include "scpd/mutate/rng.hpp"

namespace scpd::mutate {

namespace {

constexpr std::array<std::string_view, 14> kTransformNames = {
    "tAC", "tRC", "tMC", "tRI", "tRS", "tRM", "tSO",
    "tUD", "tFW", "tEA", "tEU", "tSV", "tAD", "tSD"};

constexpr std::array<std::string_view, 4> kScopeNames = {"file", "class", "method", "statement"};

}  // namespace

std::uint64_t derive_seed(std::initializer_list<std::uint64_t> parts) {
  std::uint64_t h = 0x6a09e667f3bcc909ULL;
  for (auto p : parts) {
    h += p + 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = h;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    h = z ^ (z >> 31);
  }
  return h;
}

std::string_view name_of(TransformId t) { return kTransformNames[static_cast<std::size_t>(t)]; }
std::string_view name_of(InjectionScope s) { return kScopeNames[static_cast<std::size_t>(s)]; }

std::optional<TransformId> parse_transform(std::string_view s) {
  for (std::size_t i = 0; i < kTransformNames.size(); ++i) {
    if (kTransformNames[i] == s) return static_cast<TransformId>(i);
  }
  if (s == "rSO") return TransformId::tSO;
  return std::nullopt;
}

std::optional<InjectionScope> parse_scope(std::string_view s) {
  for (std::size_t i = 0; i < kScopeNames.size(); ++i) {
    if (kScopeNames[i] == s) return static_cast<InjectionScope>(i);
  }
  return std::nullopt;
}

Limits parse_limits(std::string_view text) {
  Limits l;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ConfigError("bad limit '" + std::string(item) + "'");
    const auto key = item.substr(0, eq);
    const auto val = item.substr(eq + 1);
    std::size_t n = 0;
    const auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), n);
    if (ec != std::errc{} || ptr != val.data() + val.size()) {
      throw ConfigError("bad limit value '" + std::string(item) + "'");
    }
    if (key == "f") {
      l.files = n;
    } else if (key == "c") {
      l.classes = n;
    } else if (key == "m") {
      l.methods = n;
    } else if (key == "s") {
      l.statements = n;
    } else {
      throw ConfigError("unknown limit key '" + std::string(key) + "'");
    }
  }
  return l;
}

std::string to_string(const Limits& l) {
  return "f=" + std::to_string(l.files) + ",c=" + std::to_string(l.classes) +
         ",m=" + std::to_string(l.methods) + ",s=" + std::to_string(l.statements);
}

void MutationConfig::validate() const {
  auto in_unit = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!in_unit(transform_chance)) throw ConfigError("transform chance must be in [0,1]");
  if (!in_unit(inject_chance)) throw ConfigError("inject chance must be in [0,1]");
  if (variants_per_base < 1) throw ConfigError("variants per base must be at least 1");
}

void MutationConfig::canonicalize() {
  std::sort(transforms.begin(), transforms.end());
  transforms.erase(std::unique(transforms.begin(), transforms.end()), transforms.end());
  std::sort(injections.begin(), injections.end());
  injections.erase(std::unique(injections.begin(), injections.end()), injections.end());
}

}  // namespace scpd::mutate
