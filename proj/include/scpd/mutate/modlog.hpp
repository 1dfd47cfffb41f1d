#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

namespace scpd::mutate {

struct ModificationRecord {
  std::string kind;  // transform code ("tSO") or injection scope ("method")
  bool injection = false;
  std::string file;
  std::string path;  // e.g. "Main.run#14"
  std::size_t count = 1;
  std::size_t lloc_injected = 0;
};

struct ModificationLog {
  std::vector<ModificationRecord> records;

  [[nodiscard]] std::size_t n_transforms() const;
  [[nodiscard]] std::size_t l_lloc_injected() const;
  void append(std::vector<ModificationRecord> more);

  [[nodiscard]] nlohmann::ordered_json to_json() const;
  static ModificationLog from_json(const nlohmann::json& j);
};

}  // namespace scpd::mutate
