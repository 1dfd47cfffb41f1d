// scpd: generate plagiarised variants, score them, and report robustness.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "scpd/detect/detector.hpp"
#include "scpd/errors.hpp"
#include "scpd/mutate/generator.hpp"
#include "scpd/parallel.hpp"
#include "scpd/pipeline/run.hpp"
#include "scpd/report/render.hpp"

namespace fs = std::filesystem;
using namespace scpd;

namespace {

constexpr int kOk = 0;
constexpr int kFailure = 1;
constexpr int kUsage = 2;
constexpr int kDetectSchemaVersion = 1;

// Bad flags or unreadable inputs: exit 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<mutate::TransformId> parse_transforms(const std::string& arg, std::string* label) {
  if (arg == "all") return {mutate::kAllTransforms.begin(), mutate::kAllTransforms.end()};
  if (arg == "five") {
    if (label != nullptr) *label = "five";
    return {mutate::kFiveSet.begin(), mutate::kFiveSet.end()};
  }
  if (arg == "cosmetic") {
    if (label != nullptr) *label = "cosmetic";
    return {mutate::kCosmeticSet.begin(), mutate::kCosmeticSet.end()};
  }
  std::vector<mutate::TransformId> out;
  for (const auto& item : split(arg)) {
    const auto t = mutate::parse_transform(item);
    if (!t) throw UsageError("unknown transformation '" + item + "'");
    out.push_back(*t);
  }
  return out;
}

std::vector<mutate::InjectionScope> parse_scopes(const std::string& arg) {
  if (arg == "all") return {mutate::kAllScopes.begin(), mutate::kAllScopes.end()};
  std::vector<mutate::InjectionScope> out;
  for (const auto& item : split(arg)) {
    const auto s = mutate::parse_scope(item);
    if (!s) throw UsageError("unknown injection scope '" + item + "'");
    out.push_back(*s);
  }
  return out;
}

std::vector<detect::DetectorId> parse_detectors(const std::string& arg) {
  if (arg == "all") return {detect::kAllDetectors.begin(), detect::kAllDetectors.end()};
  std::vector<detect::DetectorId> out;
  for (const auto& item : split(arg)) {
    const auto d = detect::parse_detector(item);
    if (!d) throw UsageError("unknown detector '" + item + "'");
    out.push_back(*d);
  }
  return out;
}

std::vector<double> parse_chances(const std::string& arg) {
  std::vector<double> out;
  for (const auto& item : split(arg)) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw UsageError("bad chance '" + item + "'");
    }
  }
  return out;
}

void require_path(const fs::path& p, const char* what) {
  if (!fs::exists(p)) throw UsageError(std::string(what) + " not found: " + p.string());
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  const std::uint64_t s = (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
  std::cerr << "seed: " << s << "\n";
  return s;
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

// ------------------------------------------------------------------ generate

struct GenerateArgs {
  std::string base;
  std::string seed_pool;
  std::string transforms;
  std::string inject;
  double chance = 1.0;
  std::optional<double> inject_chance;
  std::size_t variants = 5;
  std::string limits;
  std::optional<std::uint64_t> seed;
  std::string out;
  bool safe_swap = false;
};

int cmd_generate(const GenerateArgs& a) {
  require_path(a.base, "base");
  mutate::MutationConfig m;
  if (!a.transforms.empty()) m.transforms = parse_transforms(a.transforms, nullptr);
  if (!a.inject.empty()) m.injections = parse_scopes(a.inject);
  m.transform_chance = a.chance;
  m.inject_chance = a.inject_chance.value_or(a.chance);
  m.variants_per_base = a.variants;
  if (!a.limits.empty()) m.limits = mutate::parse_limits(a.limits);
  m.safe_swap = a.safe_swap;
  m.canonicalize();
  m.validate();

  mutate::SeedPool pool;
  if (!a.seed_pool.empty()) {
    require_path(a.seed_pool, "seed pool");
    m.seed_pool = a.seed_pool;
    pool = mutate::index_seed_pool(a.seed_pool);
    for (const auto& w : pool.warnings) std::cerr << "warning: skipped donor " << w << "\n";
  } else if (!m.injections.empty()) {
    throw UsageError("--inject needs --seed-pool");
  }
  const std::uint64_t run_seed = resolve_seed(a.seed);

  const auto bases = mutate::load_bases(a.base);
  const std::size_t threads = default_thread_count();
  for (std::size_t b = 0; b < bases.size(); ++b) {
    mutate::MutationConfig cfg = m;
    cfg.seed = mutate::derive_seed({run_seed, b});
    const auto variants = mutate::generate_variants(bases[b], cfg, pool, threads);
    for (const auto& v : variants) mutate::write_variant(v, bases[b], cfg, a.out, run_seed);
    std::cout << bases[b].id << ": " << variants.size() << " variants\n";
  }
  return kOk;
}

// ------------------------------------------------------------------ detect

struct DetectArgs {
  std::string a;
  std::string b;
  std::string run;
  std::string base;
  std::string detectors = "all";
  std::string format = "text";
};

nlohmann::ordered_json pair_json(const detect::SubmissionPairResult& r) {
  nlohmann::ordered_json o;
  o["detector"] = std::string(detect::name_of(r.detector));
  o["a"] = r.sub_a;
  o["b"] = r.sub_b;
  o["percent"] = r.percent;
  o["flagged"] = r.flagged;
  auto files = nlohmann::ordered_json::array();
  for (const auto& f : r.file_matrix) {
    files.push_back({{"file_a", f.file_a},
                     {"file_b", f.file_b},
                     {"score", f.score},
                     {"flagged", f.flagged},
                     {"note", f.note}});
  }
  o["files"] = std::move(files);
  return o;
}

int cmd_detect(const DetectArgs& a) {
  const auto detectors = parse_detectors(a.detectors);
  if (detectors.empty()) throw UsageError("no detector selected");
  if (a.format != "text" && a.format != "json" && a.format != "csv") {
    throw UsageError("--format must be text, json or csv");
  }

  std::vector<std::pair<detect::Submission, detect::Submission>> pairs;
  if (!a.run.empty()) {
    // Every <run>/<base_id>/v<k>/ against its base below --base.
    if (a.base.empty()) throw UsageError("--run needs --base");
    require_path(a.run, "run directory");
    require_path(a.base, "base");
    for (const auto& base : mutate::load_bases(a.base)) {
      const fs::path dir = fs::path(a.run) / base.id;
      if (!fs::is_directory(dir)) continue;
      std::vector<fs::path> variant_dirs;
      for (const auto& e : fs::directory_iterator(dir)) {
        if (e.is_directory()) variant_dirs.push_back(e.path());
      }
      std::sort(variant_dirs.begin(), variant_dirs.end());
      std::vector<lang::SourceText> sources;
      for (const auto& [name, content] : base.formatted()) sources.emplace_back(name, content);
      const auto base_sub = detect::Submission::from_sources(base.id, std::move(sources));
      for (const auto& v : variant_dirs) {
        auto sub = detect::Submission::load(v);
        sub.id = base.id + "/" + v.filename().string();
        pairs.emplace_back(base_sub, std::move(sub));
      }
    }
  } else {
    if (a.a.empty() || a.b.empty()) throw UsageError("detect needs --a and --b, or --run and --base");
    require_path(a.a, "submission");
    require_path(a.b, "submission");
    pairs.emplace_back(detect::Submission::load(a.a), detect::Submission::load(a.b));
  }

  std::vector<detect::SubmissionPairResult> results;
  for (auto d : detectors) {
    for (auto& r : detect::batch_sim(d, pairs, {}, default_thread_count())) {
      results.push_back(std::move(r));
    }
  }

  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["schema_version"] = kDetectSchemaVersion;
    auto arr = nlohmann::ordered_json::array();
    for (const auto& r : results) arr.push_back(pair_json(r));
    j["results"] = std::move(arr);
    std::cout << j.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "detector,a,b,percent,flagged\n";
    for (const auto& r : results) {
      std::cout << detect::name_of(r.detector) << ',' << r.sub_a << ',' << r.sub_b << ','
                << report::fixed2(r.percent) << ',' << r.flagged << "\n";
    }
  } else {
    for (const auto& r : results) {
      std::cout << detect::name_of(r.detector);
      if (pairs.size() > 1) std::cout << ' ' << r.sub_a << ' ' << r.sub_b;
      std::cout << ' ' << report::fixed2(r.percent);
      if (r.flagged > 0) std::cout << " (" << r.flagged << " file pairs flagged)";
      std::cout << "\n";
    }
  }
  return kOk;
}

// ------------------------------------------------------------------ evaluate / report

struct EvaluateArgs {
  std::string base;
  std::string seed_pool;
  std::string experiment;
  std::string transforms;
  std::string inject;
  std::string chances;
  std::size_t variants = 5;
  std::string limits;
  std::string detectors = "all";
  std::optional<std::uint64_t> seed;
  std::string out;
  std::size_t reps = 10;
  std::string set_label;
  bool safe_swap = false;
  bool ansi = false;
  bool keep_variants = true;
};

void print_heatmaps(const pipeline::RunReport& r) {
  for (double c : r.chances) std::cout << report::ansi_heatmap(r, c) << "\n";
}

int cmd_evaluate(const EvaluateArgs& a) {
  require_path(a.base, "base");
  pipeline::RunConfig cfg;
  cfg.base_dir = a.base;
  std::string label = a.set_label;
  std::string derived_label;
  if (!a.transforms.empty()) cfg.mutation.transforms = parse_transforms(a.transforms, &derived_label);
  if (!a.inject.empty()) cfg.mutation.injections = parse_scopes(a.inject);
  if (label.empty()) label = derived_label;
  cfg.set_label = label;
  if (!a.experiment.empty()) {
    const auto k = pipeline::parse_experiment(a.experiment);
    if (!k) throw UsageError("unknown experiment '" + a.experiment + "'");
    cfg.kind = *k;
  } else if (!a.inject.empty() && a.transforms.empty()) {
    cfg.kind = pipeline::ExperimentKind::PerInjection;
  }
  if (!a.chances.empty()) cfg.chances = parse_chances(a.chances);
  cfg.mutation.variants_per_base = a.variants;
  if (!a.limits.empty()) cfg.mutation.limits = mutate::parse_limits(a.limits);
  cfg.mutation.safe_swap = a.safe_swap;
  cfg.detectors = parse_detectors(a.detectors);
  cfg.reps = a.reps;
  if (!a.seed_pool.empty()) {
    require_path(a.seed_pool, "seed pool");
    cfg.seed_pool_dir = a.seed_pool;
    cfg.mutation.seed_pool = a.seed_pool;
  }
  cfg.mutation.seed = resolve_seed(a.seed);
  cfg.threads = default_thread_count();
  if (a.keep_variants) cfg.out_dir = a.out;
  cfg.validate();

  const auto result = pipeline::run(cfg);
  for (const auto& w : result.warnings) std::cerr << "warning: " << w << "\n";
  report::write_all(result, a.out);
  std::cout << "wrote " << (fs::path(a.out) / "report.json").string() << " ("
            << result.pairs.size() << " scored pairs, " << result.grid.size() << " cells)\n";
  if (a.ansi) print_heatmaps(result);
  return kOk;
}

struct ReportArgs {
  std::string report;
  std::string out;
  bool ansi = false;
};

int cmd_report(const ReportArgs& a) {
  require_path(a.report, "report");
  std::ifstream in(a.report, std::ios::binary);
  nlohmann::ordered_json j;
  try {
    j = nlohmann::ordered_json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("cannot parse report: ") + e.what());
  }
  const auto r = pipeline::report_from_json(j);
  const fs::path out = a.out.empty() ? fs::path(a.report).parent_path() : fs::path(a.out);
  fs::create_directories(out);
  for (const auto& [name, content] : report::render_surfaces(r)) write_text(out / name, content);
  if (a.ansi) print_heatmaps(r);
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"scpd: simulated plagiarism generation and detector robustness"};
  app.require_subcommand(1);

  GenerateArgs g;
  auto* gen = app.add_subcommand("generate", "write mutated variants of base programs");
  gen->add_option("--base", g.base, "base directory (one sub-directory per base)")->required();
  gen->add_option("--seed-pool", g.seed_pool, "donor sources for injection");
  gen->add_option("--transforms", g.transforms, "ids, all, five or cosmetic");
  gen->add_option("--inject", g.inject, "file,class,method,statement or all");
  gen->add_option("--chance", g.chance, "transformation chance")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--inject-chance", g.inject_chance, "injection chance (defaults to --chance)")
      ->check(CLI::Range(0.0, 1.0));
  gen->add_option("--variants", g.variants, "variants per base")->check(CLI::PositiveNumber);
  gen->add_option("--limits", g.limits, "injection limits, e.g. f=4,c=1,m=9,s=12");
  gen->add_option("--seed", g.seed, "run seed (random and printed when omitted)");
  gen->add_option("--out", g.out, "output directory")->required();
  gen->add_flag("--safe-swap", g.safe_swap, "tSO only swaps commutative operators");

  DetectArgs d;
  auto* det = app.add_subcommand("detect", "score submission pairs");
  det->add_option("--a", d.a, "first submission (directory or .mj file)");
  det->add_option("--b", d.b, "second submission");
  det->add_option("--run", d.run, "generated variant directory");
  det->add_option("--base", d.base, "bases the --run variants came from");
  det->add_option("--detector,--detectors", d.detectors, "detector names or all");
  det->add_option("--format", d.format, "text, json or csv");

  EvaluateArgs e;
  auto* eva = app.add_subcommand("evaluate", "generate, detect and report in one run");
  eva->add_option("--base", e.base, "base directory")->required();
  eva->add_option("--seed-pool", e.seed_pool, "donor sources for injection");
  eva->add_option("--experiment", e.experiment,
                  "per-transformation, fixed-set, random-sets, per-injection or all-injection");
  eva->add_option("--transforms", e.transforms, "ids, all, five or cosmetic");
  eva->add_option("--inject", e.inject, "file,class,method,statement or all");
  eva->add_option("--chances,--chance", e.chances, "comma separated chances in (0,1]");
  eva->add_option("--variants", e.variants, "variants per base and cell")->check(CLI::PositiveNumber);
  eva->add_option("--limits", e.limits, "injection limits, e.g. f=4,c=1,m=9,s=12");
  eva->add_option("--detectors,--detector", e.detectors, "detector names or all");
  eva->add_option("--seed", e.seed, "run seed (random and printed when omitted)");
  eva->add_option("--out", e.out, "output directory")->required();
  eva->add_option("--reps", e.reps, "random-sets repetitions");
  eva->add_option("--set-label", e.set_label, "label of a fixed set");
  eva->add_flag("--safe-swap", e.safe_swap, "tSO only swaps commutative operators");
  eva->add_flag("--ansi-heatmap", e.ansi, "print shaded AvgSim tables");
  eva->add_flag("!--no-variants", e.keep_variants, "do not write the variant tree");

  ReportArgs r;
  auto* rep = app.add_subcommand("report", "re-render CSV and markdown from report.json");
  rep->add_option("--report", r.report, "report.json")->required();
  rep->add_option("--out", r.out, "output directory (defaults to the report's)");
  rep->add_flag("--ansi-heatmap", r.ansi, "print shaded AvgSim tables");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& s) {
    return app.exit(s);
  } catch (const CLI::ParseError& err) {
    app.exit(err);
    return kUsage;
  }

  try {
    if (gen->parsed()) return cmd_generate(g);
    if (det->parsed()) return cmd_detect(d);
    if (eva->parsed()) return cmd_evaluate(e);
    if (rep->parsed()) return cmd_report(r);
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const ConfigError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kFailure;
  }
  return kUsage;
}
