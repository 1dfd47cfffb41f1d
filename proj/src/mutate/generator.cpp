#include "scpd/mutate/generator.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "scpd/lang/formatter.hpp"
#include "scpd/lang/parser.hpp"
#include "scpd/mutate/transforms.hpp"
#include "scpd/parallel.hpp"

namespace scpd::mutate {

namespace fs = std::filesystem;

namespace {

constexpr int kSchemaVersion = 1;

NamedUnit parse_file(const lang::SourceText& src, const std::string& name) {
  try {
    return {name, lang::parse(src)};
  } catch (const lang::LexError& e) {
    throw std::runtime_error(lang::render_diagnostic(src, e));
  } catch (const lang::ParseError& e) {
    throw std::runtime_error(lang::render_diagnostic(src, e));
  }
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

}  // namespace

BaseProgram BaseProgram::load(const fs::path& path) {
  std::vector<fs::path> paths;
  BaseProgram base;
  if (fs::is_directory(path)) {
    for (const auto& e : fs::directory_iterator(path)) {
      if (e.is_regular_file() && e.path().extension() == ".mj") paths.push_back(e.path());
    }
    std::sort(paths.begin(), paths.end());
    base.id = path.lexically_normal().filename().string();
    if (base.id.empty()) base.id = path.lexically_normal().parent_path().filename().string();
  } else if (fs::is_regular_file(path)) {
    paths.push_back(path);
    base.id = path.stem().string();
  } else {
    throw std::runtime_error("cannot read base program " + path.string());
  }
  if (paths.empty()) throw std::runtime_error("no .mj files in " + path.string());
  for (const auto& p : paths) {
    base.files.push_back(parse_file(lang::SourceText::load(p), p.filename().string()));
  }
  return base;
}

BaseProgram BaseProgram::from_sources(
    std::string id, const std::vector<std::pair<std::string, std::string>>& files) {
  BaseProgram base;
  base.id = std::move(id);
  for (const auto& [name, content] : files) {
    base.files.push_back(parse_file(lang::SourceText(name, content), name));
  }
  return base;
}

std::vector<std::pair<std::string, std::string>> BaseProgram::formatted() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& f : files) out.emplace_back(f.name, lang::format(f.unit));
  return out;
}

std::string BaseProgram::hash() const {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto feed = [&](const std::string& s) {
    for (unsigned char c : s) {
      h ^= c;
      h *= 0x100000001b3ULL;
    }
    h ^= 0xffU;  // separator
    h *= 0x100000001b3ULL;
  };
  for (const auto& [name, content] : formatted()) {
    feed(name);
    feed(content);
  }
  return hex64(h);
}

std::vector<BaseProgram> load_bases(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("base directory not found: " + dir.string());
  auto has_sources = [](const fs::path& d) {
    for (const auto& e : fs::directory_iterator(d)) {
      if (e.is_regular_file() && e.path().extension() == ".mj") return true;
    }
    return false;
  };
  std::vector<fs::path> subdirs;
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_directory() && has_sources(e.path())) subdirs.push_back(e.path());
    if (e.is_regular_file() && e.path().extension() == ".mj") files.push_back(e.path());
  }
  std::vector<BaseProgram> bases;
  if (subdirs.empty()) {
    bases.push_back(BaseProgram::load(dir));
    return bases;
  }
  std::vector<fs::path> entries = subdirs;
  entries.insert(entries.end(), files.begin(), files.end());
  std::sort(entries.begin(), entries.end());
  for (const auto& p : entries) bases.push_back(BaseProgram::load(p));
  return bases;
}

Variant generate_variant(const BaseProgram& base, const MutationConfig& config,
                         const SeedPool& pool, std::size_t k) {
  Variant v;
  v.base_id = base.id;
  v.index = k;
  v.seed = config.seed ^ static_cast<std::uint64_t>(k);
  Rng rng(v.seed);

  std::vector<NamedUnit> files = base.files;
  const TransformOptions options{config.safe_swap};
  for (auto& f : files) {
    v.log.append(apply_all_transforms(config.transforms, f.unit, config.transform_chance, rng,
                                      f.name, options));
  }
  for (auto scope : kAllScopes) {
    if (std::find(config.injections.begin(), config.injections.end(), scope) ==
        config.injections.end()) {
      continue;
    }
    v.log.append(inject(files, scope, config, rng, pool));
  }
  for (auto& f : files) {
    std::string text = lang::format(f.unit);
    try {
      (void)lang::parse(text);
    } catch (const std::exception& e) {
      throw std::logic_error("variant " + std::to_string(k) + " of " + base.id + ", file " +
                             f.name + " does not re-parse: " + e.what());
    }
    v.files.emplace_back(f.name, std::move(text));
  }
  return v;
}

std::vector<Variant> generate_variants(const BaseProgram& base, const MutationConfig& config,
                                       const SeedPool& pool, std::size_t threads) {
  config.validate();
  std::vector<Variant> out(config.variants_per_base);
  parallel_for(out.size(), threads,
               [&](std::size_t k) { out[k] = generate_variant(base, config, pool, k); });
  return out;
}

nlohmann::ordered_json config_json(const MutationConfig& config) {
  nlohmann::ordered_json j;
  j["transform_chance"] = config.transform_chance;
  j["inject_chance"] = config.inject_chance;
  auto ts = nlohmann::ordered_json::array();
  for (auto t : config.transforms) ts.push_back(std::string(name_of(t)));
  j["transforms"] = std::move(ts);
  auto is = nlohmann::ordered_json::array();
  for (auto s : config.injections) is.push_back(std::string(name_of(s)));
  j["injections"] = std::move(is);
  j["limits"] = {{"f", config.limits.files},
                 {"c", config.limits.classes},
                 {"m", config.limits.methods},
                 {"s", config.limits.statements}};
  j["seed"] = config.seed;
  j["seed_pool"] = config.seed_pool.generic_string();
  j["variants_per_base"] = config.variants_per_base;
  j["safe_swap"] = config.safe_swap;
  return j;
}

void write_variant(const Variant& v, const BaseProgram& base, const MutationConfig& config,
                   const fs::path& out, std::uint64_t run_seed) {
  const fs::path dir = out / v.base_id / ("v" + std::to_string(v.index));
  fs::create_directories(dir);
  for (const auto& [name, content] : v.files) write_text(dir / name, content);

  nlohmann::ordered_json log;
  log["schema_version"] = kSchemaVersion;
  log["base_id"] = v.base_id;
  log["variant"] = v.index;
  const auto body = v.log.to_json();
  for (const auto& [key, value] : body.items()) log[key] = value;
  write_text(dir / "modlog.json", log.dump(2) + "\n");

  nlohmann::ordered_json manifest;
  manifest["schema_version"] = kSchemaVersion;
  manifest["base_id"] = v.base_id;
  manifest["variant"] = v.index;
  manifest["run_seed"] = run_seed;
  manifest["seed"] = v.seed;
  manifest["base_hash"] = base.hash();
  auto files = nlohmann::ordered_json::array();
  for (const auto& f : v.files) files.push_back(f.first);
  manifest["files"] = std::move(files);
  manifest["config"] = config_json(config);
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
}

}  // namespace scpd::mutate
