#pragma once

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#ifndef SCPD_SOURCE_DIR
#error "SCPD_SOURCE_DIR must point at the repository root"
#endif

namespace testutil {

inline std::filesystem::path repo() { return SCPD_SOURCE_DIR; }
inline std::filesystem::path bases_dir() { return repo() / "fixtures" / "bases"; }
inline std::filesystem::path seedpool_dir() { return repo() / "fixtures" / "seedpool"; }

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

// Every .mj file below the fixture bases, sorted.
inline std::vector<std::filesystem::path> fixture_files() {
  std::vector<std::filesystem::path> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(bases_dir())) {
    if (e.is_regular_file() && e.path().extension() == ".mj") out.push_back(e.path());
  }
  std::sort(out.begin(), out.end());
  return out;
}

// Fresh empty directory under the system temp dir.
inline std::filesystem::path scratch(const std::string& name) {
  auto p = std::filesystem::temp_directory_path() / ("scpd_test_" + name);
  std::filesystem::remove_all(p);
  std::filesystem::create_directories(p);
  return p;
}

}  // namespace testutil
