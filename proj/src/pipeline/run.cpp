#include "scpd/pipeline/run.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <memory>
#include <tuple>

#include "scpd/errors.hpp"
#include "scpd/mutate/generator.hpp"
#include "scpd/mutate/rng.hpp"
#include "scpd/parallel.hpp"
#include "scpd/pipeline/metrics.hpp"

namespace scpd::pipeline {

namespace fs = std::filesystem;
using detect::DetectorId;
using mutate::InjectionScope;
using mutate::TransformId;

namespace {

constexpr std::array<std::string_view, 5> kKindNames = {
    "per-transformation", "fixed-set", "random-sets", "per-injection", "all-injection"};

constexpr std::uint64_t kRandomSetSalt = 0x72616e642d736574ULL;

std::string join_transforms(const std::vector<TransformId>& ts) {
  std::string s;
  for (auto t : ts) {
    if (!s.empty()) s += '+';
    s += mutate::name_of(t);
  }
  return s;
}

detect::Submission submission_of(const std::string& id,
                                 const std::vector<std::pair<std::string, std::string>>& files) {
  std::vector<lang::SourceText> sources;
  for (const auto& [name, content] : files) sources.emplace_back(name, content);
  return detect::Submission::from_sources(id, std::move(sources));
}

std::vector<TransformId> random_set(std::uint64_t seed, std::size_t rep, std::size_t base) {
  mutate::Rng rng(mutate::derive_seed({seed, kRandomSetSalt, rep, base}));
  std::vector<TransformId> all(mutate::kAllTransforms.begin(), mutate::kAllTransforms.end());
  rng.shuffle(all);
  const std::size_t k = 2 + static_cast<std::size_t>(rng.below(12));
  all.resize(k);
  std::sort(all.begin(), all.end());
  return all;
}

std::size_t index_of_chance(const std::vector<double>& chances, double c) {
  for (std::size_t i = 0; i < chances.size(); ++i) {
    if (chances[i] == c) return i;
  }
  return chances.size();
}

nlohmann::ordered_json config_echo(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["experiment"] = std::string(name_of(c.kind));
  j["base_dir"] = c.base_dir.generic_string();
  j["seed_pool"] = c.seed_pool_dir ? nlohmann::ordered_json(c.seed_pool_dir->generic_string())
                                   : nlohmann::ordered_json(nullptr);
  j["chances"] = c.chances;
  auto ds = nlohmann::ordered_json::array();
  for (auto d : c.detectors) ds.push_back(std::string(detect::name_of(d)));
  j["detectors"] = std::move(ds);
  j["reps"] = c.reps;
  j["set_label"] = c.set_label;
  j["mutation"] = mutate::config_json(c.mutation);
  j["detector_options"] = {{"string_min_match", c.detector_options.string_min_match},
                           {"token_min_match", c.detector_options.token_min_match},
                           {"tree_node_pair_cap", c.detector_options.tree_node_pair_cap}};
  return j;
}

}  // namespace

std::string_view name_of(ExperimentKind k) { return kKindNames[static_cast<std::size_t>(k)]; }

std::optional<ExperimentKind> parse_experiment(std::string_view s) {
  for (std::size_t i = 0; i < kKindNames.size(); ++i) {
    if (kKindNames[i] == s) return static_cast<ExperimentKind>(i);
  }
  return std::nullopt;
}

bool is_injection(ExperimentKind k) {
  return k == ExperimentKind::PerInjection || k == ExperimentKind::AllInjection;
}

void RunConfig::validate() const {
  if (detectors.empty()) throw ConfigError("at least one detector is required");
  if (chances.empty()) throw ConfigError("at least one chance is required");
  for (double c : chances) {
    if (!(c > 0.0 && c <= 1.0)) throw ConfigError("chances must lie in (0,1]");
  }
  if (mutation.variants_per_base < 1) throw ConfigError("variants per base must be at least 1");
  if (kind == ExperimentKind::RandomSets && reps < 1) throw ConfigError("reps must be at least 1");
  if (kind == ExperimentKind::FixedSet && mutation.transforms.empty()) {
    throw ConfigError("fixed-set experiment needs at least one transformation");
  }
  if (is_injection(kind) && !seed_pool_dir) throw ConfigError("injection experiments need a seed pool");
}

std::string chance_label(double chance) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", chance * 100.0);
  return buf;
}

std::uint64_t cell_seed(std::uint64_t run_seed, std::size_t base, std::size_t set,
                        std::size_t chance) {
  return mutate::derive_seed({run_seed, base, set, chance});
}

std::vector<ModificationSet> experiment_sets(const RunConfig& config) {
  std::vector<ModificationSet> sets;
  const auto& m = config.mutation;
  switch (config.kind) {
    case ExperimentKind::PerTransformation: {
      std::vector<TransformId> ids = m.transforms;
      if (ids.empty()) ids.assign(mutate::kAllTransforms.begin(), mutate::kAllTransforms.end());
      for (auto t : ids) sets.push_back({std::string(mutate::name_of(t)), {t}, {}});
      break;
    }
    case ExperimentKind::FixedSet:
      sets.push_back(
          {config.set_label.empty() ? join_transforms(m.transforms) : config.set_label,
           m.transforms,
           {}});
      break;
    case ExperimentKind::RandomSets:
      for (std::size_t r = 0; r < config.reps; ++r) {
        sets.push_back({"random-" + std::to_string(r + 1), {}, {}});
      }
      break;
    case ExperimentKind::PerInjection: {
      std::vector<InjectionScope> scopes = m.injections;
      if (scopes.empty()) scopes.assign(mutate::kAllScopes.begin(), mutate::kAllScopes.end());
      for (auto s : scopes) sets.push_back({std::string(mutate::name_of(s)), {}, {s}});
      break;
    }
    case ExperimentKind::AllInjection: {
      std::vector<InjectionScope> scopes = m.injections;
      if (scopes.empty()) scopes.assign(mutate::kAllScopes.begin(), mutate::kAllScopes.end());
      sets.push_back({config.set_label.empty() ? "all-injection" : config.set_label, {}, scopes});
      break;
    }
  }
  return sets;
}

const RobustnessScore* RunReport::cell(DetectorId d, const std::string& set, double chance) const {
  for (const auto& g : grid) {
    if (g.detector == d && g.set == set && g.chance == chance) return &g;
  }
  return nullptr;
}

std::vector<RobustnessScore> aggregate(const std::vector<PairResult>& pairs,
                                       const std::vector<ModificationSet>& sets,
                                       const std::vector<double>& chances,
                                       const std::vector<DetectorId>& detectors,
                                       bool injection) {
  std::map<std::string, std::size_t> set_index;
  for (std::size_t i = 0; i < sets.size(); ++i) set_index.emplace(sets[i].label, i);
  const std::size_t nd = detectors.size();
  const std::size_t nc = chances.size();
  auto detector_index = [&](DetectorId d) {
    return static_cast<std::size_t>(std::find(detectors.begin(), detectors.end(), d) -
                                    detectors.begin());
  };

  struct Acc {
    std::vector<double> sims;
    std::vector<double> ratios;
    std::size_t saturated = 0;
    std::size_t zero = 0;
  };
  std::vector<Acc> acc(sets.size() * nc * nd);
  for (const auto& p : pairs) {
    const auto s = set_index.find(p.set);
    const std::size_t c = index_of_chance(chances, p.chance);
    const std::size_t d = detector_index(p.detector);
    if (s == set_index.end() || c == nc || d == nd) continue;
    Acc& a = acc[(s->second * nc + c) * nd + d];
    a.sims.push_back(p.sim);
    const double count = injection ? static_cast<double>(p.l_lloc_injected)
                                   : static_cast<double>(p.n_transforms);
    if (p.sim >= 100.0) {
      ++a.saturated;
    } else if (count <= 0.0) {
      ++a.zero;
    } else {
      a.ratios.push_back(injection ? rci(count, p.sim) : rct(count, p.sim));
    }
  }

  std::vector<RobustnessScore> grid;
  for (std::size_t s = 0; s < sets.size(); ++s) {
    for (std::size_t c = 0; c < nc; ++c) {
      for (std::size_t d = 0; d < nd; ++d) {
        const Acc& a = acc[(s * nc + c) * nd + d];
        if (a.sims.empty()) continue;
        RobustnessScore r;
        r.detector = detectors[d];
        r.set = sets[s].label;
        r.chance = chances[c];
        r.avg_sim = avg_sim(a.sims);
        if (!a.ratios.empty()) {
          double total = 0.0;
          for (double x : a.ratios) total += x;
          (injection ? r.rci : r.rct) = total / static_cast<double>(a.ratios.size());
        }
        r.n_pairs = a.sims.size();
        r.n_skipped_saturated = a.saturated;
        r.n_skipped_zero = a.zero;
        grid.push_back(std::move(r));
      }
    }
  }
  return grid;
}

RunReport run(const RunConfig& config_in) {
  RunConfig config = config_in;
  std::sort(config.detectors.begin(), config.detectors.end());
  config.detectors.erase(std::unique(config.detectors.begin(), config.detectors.end()),
                         config.detectors.end());
  config.mutation.canonicalize();
  config.validate();
  const auto started = std::chrono::steady_clock::now();

  RunReport report;
  report.config = config_echo(config);
  report.kind = config.kind;
  report.chances = config.chances;
  report.detectors = config.detectors;
  report.sets = experiment_sets(config);

  const auto bases = mutate::load_bases(config.base_dir);
  mutate::SeedPool pool;
  if (config.seed_pool_dir) {
    pool = mutate::index_seed_pool(*config.seed_pool_dir);
    report.warnings = pool.warnings;
  }

  // Base submissions are analyzed once and shared by every cell.
  std::vector<detect::Submission> base_subs;
  for (const auto& b : bases) {
    report.bases.push_back(b.id);
    base_subs.push_back(submission_of(b.id, b.formatted()));
  }

  const bool injection = is_injection(config.kind);
  const std::size_t nb = bases.size();
  const std::size_t nc = config.chances.size();
  const std::size_t jobs = report.sets.size() * nc * nb;
  std::vector<std::vector<PairResult>> results(jobs);
  std::vector<std::vector<std::string>> job_warnings(jobs);

  parallel_for(jobs, config.threads, [&](std::size_t job) {
    const std::size_t si = job / (nc * nb);
    const std::size_t ci = (job / nb) % nc;
    const std::size_t bi = job % nb;
    const ModificationSet& set = report.sets[si];
    const double chance = config.chances[ci];

    mutate::MutationConfig m = config.mutation;
    m.transforms = config.kind == ExperimentKind::RandomSets
                       ? random_set(config.mutation.seed, si, bi)
                       : set.transforms;
    m.injections = set.injections;
    m.transform_chance = injection ? 0.0 : chance;
    m.inject_chance = injection ? chance : 0.0;
    m.seed = cell_seed(config.mutation.seed, bi, si, ci);

    const auto variants = mutate::generate_variants(bases[bi], m, pool, 1);
    for (const auto& v : variants) {
      if (!config.out_dir.empty()) {
        mutate::write_variant(v, bases[bi], m,
                              config.out_dir / "variants" / set.label / ("c" + chance_label(chance)),
                              config.mutation.seed);
      }
      const auto sub = submission_of(v.base_id + "/v" + std::to_string(v.index), v.files);
      for (auto d : config.detectors) {
        PairResult p;
        p.base_id = bases[bi].id;
        p.set = set.label;
        p.chance = chance;
        p.variant = v.index;
        p.detector = d;
        p.n_transforms = v.log.n_transforms();
        p.l_lloc_injected = v.log.l_lloc_injected();
        p.transforms = m.transforms;
        try {
          const auto r = detect::submission_sim(d, base_subs[bi], sub, config.detector_options);
          p.sim = r.percent;
          p.flagged = r.flagged;
        } catch (const std::exception& e) {
          p.sim = 0.0;
          p.flagged = 1;
          job_warnings[job].push_back(p.base_id + " v" + std::to_string(v.index) + " " +
                                      std::string(detect::name_of(d)) + ": " + e.what());
        }
        results[job].push_back(std::move(p));
      }
    }
  });

  for (std::size_t j = 0; j < jobs; ++j) {
    for (auto& p : results[j]) report.pairs.push_back(std::move(p));
    for (auto& w : job_warnings[j]) report.warnings.push_back(std::move(w));
  }
  report.grid = aggregate(report.pairs, report.sets, report.chances, report.detectors, injection);
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  return report;
}

// ------------------------------------------------------------------ json

namespace {

nlohmann::ordered_json optional_number(const std::optional<double>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

DetectorId detector_from(const nlohmann::ordered_json& j) {
  const auto d = detect::parse_detector(j.get<std::string>());
  if (!d) throw std::runtime_error("unknown detector in report: " + j.dump());
  return *d;
}

std::vector<TransformId> transforms_from(const nlohmann::ordered_json& j) {
  std::vector<TransformId> out;
  for (const auto& t : j) {
    const auto id = mutate::parse_transform(t.get<std::string>());
    if (!id) throw std::runtime_error("unknown transformation in report: " + t.dump());
    out.push_back(*id);
  }
  return out;
}

nlohmann::ordered_json transforms_json(const std::vector<TransformId>& ts) {
  auto a = nlohmann::ordered_json::array();
  for (auto t : ts) a.push_back(std::string(mutate::name_of(t)));
  return a;
}

}  // namespace

nlohmann::ordered_json to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["experiment"] = std::string(name_of(r.kind));
  j["config"] = r.config;
  j["chances"] = r.chances;
  auto ds = nlohmann::ordered_json::array();
  for (auto d : r.detectors) ds.push_back(std::string(detect::name_of(d)));
  j["detectors"] = std::move(ds);
  j["bases"] = r.bases;

  auto sets = nlohmann::ordered_json::array();
  for (const auto& s : r.sets) {
    nlohmann::ordered_json o;
    o["label"] = s.label;
    o["transforms"] = transforms_json(s.transforms);
    auto scopes = nlohmann::ordered_json::array();
    for (auto sc : s.injections) scopes.push_back(std::string(mutate::name_of(sc)));
    o["injections"] = std::move(scopes);
    sets.push_back(std::move(o));
  }
  j["sets"] = std::move(sets);

  auto grid = nlohmann::ordered_json::array();
  for (const auto& g : r.grid) {
    nlohmann::ordered_json o;
    o["detector"] = std::string(detect::name_of(g.detector));
    o["set"] = g.set;
    o["chance"] = g.chance;
    o["avg_sim"] = g.avg_sim;
    o["rct"] = optional_number(g.rct);
    o["rci"] = optional_number(g.rci);
    o["n_pairs"] = g.n_pairs;
    o["n_skipped_saturated"] = g.n_skipped_saturated;
    o["n_skipped_zero"] = g.n_skipped_zero;
    grid.push_back(std::move(o));
  }
  j["grid"] = std::move(grid);

  auto pairs = nlohmann::ordered_json::array();
  for (const auto& p : r.pairs) {
    nlohmann::ordered_json o;
    o["base_id"] = p.base_id;
    o["set"] = p.set;
    o["chance"] = p.chance;
    o["variant"] = p.variant;
    o["detector"] = std::string(detect::name_of(p.detector));
    o["sim"] = p.sim;
    o["n_transforms"] = p.n_transforms;
    o["l_lloc_injected"] = p.l_lloc_injected;
    o["flagged"] = p.flagged;
    o["transforms"] = transforms_json(p.transforms);
    pairs.push_back(std::move(o));
  }
  j["pairs"] = std::move(pairs);
  j["warnings"] = r.warnings;
  j["timing"] = {{"elapsed_seconds", r.elapsed_seconds}};
  return j;
}

RunReport report_from_json(const nlohmann::ordered_json& j) {
  if (j.at("schema_version").get<int>() != kReportSchemaVersion) {
    throw std::runtime_error("unsupported report schema_version");
  }
  RunReport r;
  r.config = j.at("config");
  const auto kind = parse_experiment(j.at("experiment").get<std::string>());
  if (!kind) throw std::runtime_error("unknown experiment kind in report");
  r.kind = *kind;
  r.chances = j.at("chances").get<std::vector<double>>();
  for (const auto& d : j.at("detectors")) r.detectors.push_back(detector_from(d));
  r.bases = j.at("bases").get<std::vector<std::string>>();
  for (const auto& s : j.at("sets")) {
    ModificationSet set;
    set.label = s.at("label").get<std::string>();
    set.transforms = transforms_from(s.at("transforms"));
    for (const auto& sc : s.at("injections")) {
      const auto scope = mutate::parse_scope(sc.get<std::string>());
      if (!scope) throw std::runtime_error("unknown injection scope in report");
      set.injections.push_back(*scope);
    }
    r.sets.push_back(std::move(set));
  }
  for (const auto& g : j.at("grid")) {
    RobustnessScore s;
    s.detector = detector_from(g.at("detector"));
    s.set = g.at("set").get<std::string>();
    s.chance = g.at("chance").get<double>();
    s.avg_sim = g.at("avg_sim").get<double>();
    if (!g.at("rct").is_null()) s.rct = g.at("rct").get<double>();
    if (!g.at("rci").is_null()) s.rci = g.at("rci").get<double>();
    s.n_pairs = g.at("n_pairs").get<std::size_t>();
    s.n_skipped_saturated = g.at("n_skipped_saturated").get<std::size_t>();
    s.n_skipped_zero = g.at("n_skipped_zero").get<std::size_t>();
    r.grid.push_back(std::move(s));
  }
  for (const auto& p : j.at("pairs")) {
    PairResult x;
    x.base_id = p.at("base_id").get<std::string>();
    x.set = p.at("set").get<std::string>();
    x.chance = p.at("chance").get<double>();
    x.variant = p.at("variant").get<std::size_t>();
    x.detector = detector_from(p.at("detector"));
    x.sim = p.at("sim").get<double>();
    x.n_transforms = p.at("n_transforms").get<std::size_t>();
    x.l_lloc_injected = p.at("l_lloc_injected").get<std::size_t>();
    x.flagged = p.at("flagged").get<std::size_t>();
    x.transforms = transforms_from(p.at("transforms"));
    r.pairs.push_back(std::move(x));
  }
  r.warnings = j.at("warnings").get<std::vector<std::string>>();
  r.elapsed_seconds = j.at("timing").at("elapsed_seconds").get<double>();
  return r;
}

}  // namespace scpd::pipeline
