#include "scpd/mutate/injection.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "scpd/errors.hpp"
#include "scpd/lang/lloc.hpp"
#include "scpd/lang/parser.hpp"

namespace scpd::mutate {

namespace fs = std::filesystem;
using namespace lang;

namespace {

void collect_statements(const Block& b, std::vector<Stmt>& out) {
  for (const auto& s : b.stmts) {
    if (const auto* inner = s.as<Block>()) {
      collect_statements(*inner, out);
    } else {
      out.push_back(s);
    }
  }
}

std::string stem_of(const std::string& name) { return fs::path(name).stem().string(); }

[[noreturn]] void empty_pool(InjectionScope scope) {
  throw EmptySeedPool("seed pool has no " + std::string(name_of(scope)) + " fragments");
}

template <typename T>
const T& pick(const std::vector<T>& v, Rng& rng, InjectionScope scope) {
  if (v.empty()) empty_pool(scope);
  return v[rng.below(v.size())];
}

ModificationRecord injected(InjectionScope scope, const std::string& file, std::string path,
                            std::size_t lloc_injected) {
  return {std::string(name_of(scope)), true, file, std::move(path), 1, lloc_injected};
}

std::vector<ModificationRecord> inject_files(std::vector<NamedUnit>& files,
                                             const MutationConfig& config, Rng& rng,
                                             const SeedPool& pool) {
  std::vector<ModificationRecord> out;
  if (!rng.roll(config.inject_chance) || config.limits.files == 0) return out;
  if (pool.files.empty()) empty_pool(InjectionScope::File);
  // Without replacement; a pool smaller than f is cycled through again.
  std::vector<std::size_t> order;
  std::size_t next = 0;
  std::size_t serial = 0;
  for (const auto& f : files) {
    if (f.name.rfind("inj", 0) == 0) ++serial;
  }
  for (std::size_t n = 0; n < config.limits.files; ++n) {
    if (next == order.size()) {
      order.resize(pool.files.size());
      for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
      rng.shuffle(order);
      next = 0;
    }
    const NamedUnit& donor = pool.files[order[next++]];
    NamedUnit copy{"inj" + std::to_string(++serial) + "_" + stem_of(donor.name) + ".mj",
                   donor.unit};
    out.push_back(injected(InjectionScope::File, copy.name, copy.name, lloc(copy.unit)));
    files.push_back(std::move(copy));
  }
  return out;
}

std::vector<ModificationRecord> inject_classes(std::vector<NamedUnit>& files,
                                               const MutationConfig& config, Rng& rng,
                                               const SeedPool& pool) {
  std::vector<ModificationRecord> out;
  for (auto& f : files) {
    for (std::size_t n = 0; n < config.limits.classes; ++n) {
      if (!rng.roll(config.inject_chance)) continue;
      const ClassDecl& donor = pick(pool.classes, rng, InjectionScope::Class);
      out.push_back(injected(InjectionScope::Class, f.name,
                             donor.name + "@" + std::to_string(f.unit.type_decls.size()),
                             lloc(donor)));
      f.unit.type_decls.push_back(donor);
    }
  }
  return out;
}

std::vector<ModificationRecord> inject_methods(std::vector<NamedUnit>& files,
                                               const MutationConfig& config, Rng& rng,
                                               const SeedPool& pool) {
  std::vector<ModificationRecord> out;
  for (auto& f : files) {
    for (auto& c : f.unit.type_decls) {
      for (std::size_t n = 0; n < config.limits.methods; ++n) {
        if (!rng.roll(config.inject_chance)) continue;
        const MethodDecl& donor = pick(pool.methods, rng, InjectionScope::Method);
        const auto pos = static_cast<std::ptrdiff_t>(rng.below(c.members.size() + 1));
        out.push_back(injected(InjectionScope::Method, f.name,
                               c.name + "." + donor.name + "@" + std::to_string(pos),
                               lloc(donor)));
        c.members.insert(c.members.begin() + pos, Member(donor));
      }
    }
  }
  return out;
}

std::vector<ModificationRecord> inject_statements(std::vector<NamedUnit>& files,
                                                  const MutationConfig& config, Rng& rng,
                                                  const SeedPool& pool) {
  std::vector<ModificationRecord> out;
  for (auto& f : files) {
    for (auto& c : f.unit.type_decls) {
      for (auto& m : c.members) {
        auto* md = std::get_if<MethodDecl>(&m);
        if (md == nullptr) continue;
        // Never more than doubles the method.
        const std::size_t cap = std::min(config.limits.statements, lloc(*md));
        for (std::size_t n = 0; n < cap; ++n) {
          if (!rng.roll(config.inject_chance)) continue;
          const Stmt& donor = pick(pool.statements, rng, InjectionScope::Statement);
          const auto pos = static_cast<std::ptrdiff_t>(rng.below(md->body.stmts.size() + 1));
          out.push_back(injected(InjectionScope::Statement, f.name,
                                 c.name + "." + md->name + "@" + std::to_string(pos),
                                 lloc(donor)));
          md->body.stmts.insert(md->body.stmts.begin() + pos, donor);
        }
      }
    }
  }
  return out;
}

}  // namespace

std::size_t SeedPool::count(InjectionScope scope) const {
  switch (scope) {
    case InjectionScope::File:
      return files.size();
    case InjectionScope::Class:
      return classes.size();
    case InjectionScope::Method:
      return methods.size();
    case InjectionScope::Statement:
      return statements.size();
  }
  return 0;
}

SeedPool SeedPool::from_units(std::vector<NamedUnit> units) {
  SeedPool pool;
  for (auto& f : units) {
    for (const auto& c : f.unit.type_decls) {
      pool.classes.push_back(c);
      for (const auto& m : c.members) {
        if (const auto* md = std::get_if<MethodDecl>(&m)) {
          pool.methods.push_back(*md);
          collect_statements(md->body, pool.statements);
        }
      }
    }
    pool.files.push_back(std::move(f));
  }
  return pool;
}

SeedPool index_seed_pool(const fs::path& dir) {
  if (!fs::is_directory(dir)) throw std::runtime_error("seed pool is not a directory: " + dir.string());
  std::vector<fs::path> paths;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".mj") paths.push_back(e.path());
  }
  std::sort(paths.begin(), paths.end());
  std::vector<NamedUnit> units;
  std::vector<std::string> warnings;
  for (const auto& p : paths) {
    const SourceText src = SourceText::load(p);
    try {
      units.push_back({p.filename().string(), parse(src)});
    } catch (const LexError& e) {
      warnings.push_back(render_diagnostic(src, e));
    } catch (const ParseError& e) {
      warnings.push_back(render_diagnostic(src, e));
    }
  }
  SeedPool pool = SeedPool::from_units(std::move(units));
  pool.warnings = std::move(warnings);
  return pool;
}

std::vector<ModificationRecord> inject(std::vector<NamedUnit>& files, InjectionScope scope,
                                       const MutationConfig& config, Rng& rng,
                                       const SeedPool& pool) {
  std::vector<ModificationRecord> out;
  switch (scope) {
    case InjectionScope::File:
      out = inject_files(files, config, rng, pool);
      break;
    case InjectionScope::Class:
      out = inject_classes(files, config, rng, pool);
      break;
    case InjectionScope::Method:
      out = inject_methods(files, config, rng, pool);
      break;
    case InjectionScope::Statement:
      out = inject_statements(files, config, rng, pool);
      break;
  }
  for (auto& f : files) assign_ids(f.unit);
  return out;
}

}  // namespace scpd::mutate
