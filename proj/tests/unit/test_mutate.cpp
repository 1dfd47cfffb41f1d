#include <doctest.h>

#include <map>
#include <set>

#include "common.hpp"
#include "oracles/interp.hpp"
#include "scpd/errors.hpp"
#include "scpd/lang/formatter.hpp"
#include "scpd/lang/lloc.hpp"
#include "scpd/lang/parser.hpp"
#include "scpd/mutate/generator.hpp"
#include "scpd/mutate/transforms.hpp"

using namespace scpd;
using mutate::TransformId;

namespace {

std::string run_transform(TransformId t, const std::string& src, double chance = 1.0,
                          std::uint64_t seed = 1, std::size_t* records = nullptr) {
  auto u = lang::parse(src);
  mutate::Rng rng(seed);
  const auto r = mutate::apply_transform(t, u, chance, rng, "A.mj");
  if (records != nullptr) *records = r.size();
  return lang::format(u);
}

std::string canon(const std::string& src) { return lang::format(lang::parse(src)); }

std::string main_class(const mutate::BaseProgram& b) {
  for (const auto& f : b.files) {
    for (const auto& c : f.unit.type_decls) {
      for (const auto& m : c.members) {
        const auto* md = std::get_if<lang::MethodDecl>(&m);
        if (md != nullptr && md->name == "main") return c.name;
      }
    }
  }
  return {};
}

// Output of the program, or nullopt when the interpreter cannot run it.
std::optional<std::string> behavior(const std::vector<mutate::NamedUnit>& files,
                                    const std::string& cls) {
  std::vector<const lang::CompilationUnit*> us;
  for (const auto& f : files) us.push_back(&f.unit);
  try {
    oracle::Interpreter in(us);
    return in.run(cls);
  } catch (const oracle::Unsupported&) {
    return std::nullopt;
  }
}

const std::string kLoops =
    "class P {\n"
    "  static int total;\n"
    "  static int[] data;\n"
    "  static int sum(int n) {\n"
    "    int s = 0, k;\n"
    "    k = 2;\n"
    "    for (int i = 0; i < n; i++) {\n"
    "      s += i * k;\n"
    "      total -= 1;\n"
    "    }\n"
    "    int j = n;\n"
    "    while (j > 0) {\n"
    "      j--;\n"
    "      s *= 2;\n"
    "      s /= 2;\n"
    "    }\n"
    "    return s;\n"
    "  }\n"
    "  static void main(String[] args) {\n"
    "    double d;\n"
    "    boolean flag;\n"
    "    data = new int[4];\n"
    "    for (int i = 0; i < 4; ++i) data[i] = i * i;\n"
    "    d = 1.5;\n"
    "    d += 2;\n"
    "    flag = d > 3.0;\n"
    "    System.out.println(sum(5) + \" \" + total + \" \" + data[3] + \" \" + d + \" \" + flag);\n"
    "  }\n"
    "}\n";

}  // namespace

TEST_SUITE("mutate") {
  TEST_CASE("rng is reproducible and below() stays in range") {
    mutate::Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) CHECK(a.next() == b.next());
    mutate::Rng c(7);
    for (int k = 0; k < 1000; ++k) {
      CHECK(c.below(3) < 3);
      const double u = c.uniform();
      CHECK(u >= 0.0);
      CHECK(u < 1.0);
    }
    CHECK(mutate::derive_seed({1, 2}) != mutate::derive_seed({2, 1}));
    CHECK(mutate::derive_seed({1, 2}) == mutate::derive_seed({1, 2}));
    mutate::Rng z(3);
    CHECK_FALSE(z.roll(0.0));
    CHECK(z.roll(1.0));
  }

  TEST_CASE("names and limits") {
    for (auto t : mutate::kAllTransforms) CHECK(mutate::parse_transform(mutate::name_of(t)) == t);
    for (auto s : mutate::kAllScopes) CHECK(mutate::parse_scope(mutate::name_of(s)) == s);
    const auto l = mutate::parse_limits("f=2,s=3");
    CHECK(l.files == 2);
    CHECK(l.classes == 1);
    CHECK(l.methods == 9);
    CHECK(l.statements == 3);
    CHECK(mutate::to_string(mutate::Limits{}) == "f=4,c=1,m=9,s=12");
    CHECK_THROWS_AS(mutate::parse_limits("q=1"), ConfigError);
    CHECK_THROWS_AS(mutate::parse_limits("f=-1"), ConfigError);
    mutate::MutationConfig bad;
    bad.transform_chance = 1.5;
    CHECK_THROWS_AS(bad.validate(), ConfigError);
  }

  TEST_CASE("chance 0 leaves the unit alone") {
    const std::string src = canon(kLoops);
    for (auto t : mutate::kAllTransforms) {
      std::size_t n = 99;
      CHECK(run_transform(t, src, 0.0, 5, &n) == src);
      CHECK(n == 0);
    }
  }

  TEST_CASE("tFW rewrite") {
    const auto out = run_transform(
        TransformId::tFW, "class A { void m() { for (int i = 0; i < 3; i++) { f(i); } } }");
    CHECK(out == canon("class A { void m() { int i = 0; while (i < 3) { f(i); i++; } } }"));
    // A missing condition becomes `true`.
    CHECK(run_transform(TransformId::tFW, "class A { void m() { for (;;) { f(); } } }")
              .find("while (true)") != std::string::npos);
  }

  TEST_CASE("tSV, tSD, tAD, tEA, tEU, tUD rewrites") {
    CHECK(run_transform(TransformId::tSV, "class A { void m() { int a, b; } }") ==
          canon("class A { void m() { int a; int b; } }"));
    CHECK(run_transform(TransformId::tSD, "class A { void m() { int x = 1 + y; } }") ==
          canon("class A { void m() { int x; x = 1 + y; } }"));
    CHECK(run_transform(TransformId::tAD,
                        "class A { void m() { int a; long b; float c; double d; boolean e; "
                        "char f; String g; int[] h; } }") ==
          canon("class A { void m() { int a = 0; long b = 0L; float c = 0.0f; double d = 0.0; "
                "boolean e = false; char f = '\\0'; String g = null; int[] h = null; } }"));
    CHECK(run_transform(TransformId::tEA, "class A { void m() { x *= y + 1; } }") ==
          canon("class A { void m() { x = x * (y + 1); } }"));
    CHECK(run_transform(TransformId::tEU, "class A { void m() { i++; --j; } }") ==
          canon("class A { void m() { i = i + 1; j = j - 1; } }"));
    CHECK(run_transform(TransformId::tUD, "class A { int a; float b; void m(int c) { } }") ==
          canon("class A { long a; double b; void m(long c) { } }"));
  }

  TEST_CASE("tSO swaps operands") {
    CHECK(run_transform(TransformId::tSO, "class A { void m() { x = a - b; } }") ==
          canon("class A { void m() { x = b - a; } }"));
    auto u = lang::parse("class A { void m() { x = a - b; y = c * d; } }");
    mutate::Rng rng(1);
    (void)mutate::apply_transform(TransformId::tSO, u, 1.0, rng, "A.mj", {true});
    CHECK(lang::format(u) == canon("class A { void m() { x = a - b; y = d * c; } }"));
  }

  TEST_CASE("comment filters") {
    const std::string src = "// a\nclass A {\n  // b\n  int x;\n  void m() {\n    // c\n    x = 1;\n    // d\n  }\n}\n";
    CHECK(lang::comment_count(lang::parse(run_transform(TransformId::tRC, src))) == 0);
    const auto mc = lang::parse(run_transform(TransformId::tMC, src));
    CHECK(lang::comment_count(mc) == 4);
    CHECK(run_transform(TransformId::tMC, src) != canon(src));
    const auto ac = lang::parse(run_transform(TransformId::tAC, "class A { int x; void m() { x = 1; } }"));
    CHECK(lang::comment_count(ac) == 4);  // class, field, method, statement
    // tAC then tRC at 1.0 removes everything.
    auto u = lang::parse(src);
    mutate::Rng rng(3);
    (void)mutate::apply_all_transforms({TransformId::tAC, TransformId::tRC}, u, 1.0, rng, "A.mj");
    CHECK(lang::comment_count(u) == 0);
  }

  TEST_CASE("tRI renames user identifiers and leaves library names") {
    const auto out = run_transform(
        TransformId::tRI,
        "class Main { static int count; static void main(String[] args) { int x = count; "
        "System.out.println(x + args.length); } }");
    CHECK(out.find("count") == std::string::npos);
    CHECK(out.find(" x ") == std::string::npos);
    CHECK(out.find("System.out.println") != std::string::npos);
    CHECK(out.find("String[]") != std::string::npos);
    CHECK(out.find(".length") != std::string::npos);
    CHECK(out.find("void main") != std::string::npos);
  }

  TEST_CASE("tRS on a one-statement block is the identity") {
    const std::string src = canon("class A { void m() { x = 1; } }");
    CHECK(run_transform(TransformId::tRS, src) == src);
  }

  TEST_CASE("tRS and tRM permute without losing anything") {
    const std::string src = canon(kLoops);
    for (auto t : {TransformId::tRS, TransformId::tRM}) {
      for (std::uint64_t seed = 1; seed < 6; ++seed) {
        const auto out = run_transform(t, src, 1.0, seed);
        CHECK(lang::lloc(lang::parse(out)) == lang::lloc(lang::parse(src)));
        std::string a = out, b = src;
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        CHECK(a == b);
      }
    }
  }

  TEST_CASE("apply_all equals the filters run one by one") {
    const auto base = mutate::BaseProgram::load(testutil::bases_dir() / "09_inventory");
    for (std::uint64_t seed = 0; seed < 3; ++seed) {
      auto u1 = base.files[0].unit;
      auto u2 = base.files[0].unit;
      mutate::Rng r1(seed), r2(seed);
      const std::vector<TransformId> all(mutate::kAllTransforms.begin(), mutate::kAllTransforms.end());
      const auto recs = mutate::apply_all_transforms(all, u1, 1.0, r1, "f");
      std::map<std::string, std::size_t> per_filter, logged;
      for (auto t : mutate::kAllTransforms) {
        per_filter[std::string(mutate::name_of(t))] = mutate::apply_transform(t, u2, 1.0, r2, "f").size();
      }
      for (const auto& r : recs) ++logged[r.kind];
      for (const auto& [kind, n] : per_filter) {
        CAPTURE(kind);
        CHECK(logged[kind] == n);
      }
      CHECK(lang::format(u1) == lang::format(u2));
    }
  }

  TEST_CASE("behavior preserved by the semantics-preserving filters") {
    std::vector<mutate::BaseProgram> programs = mutate::load_bases(testutil::bases_dir());
    programs.push_back(mutate::BaseProgram::from_sources("loops", {{"P.mj", kLoops}}));
    std::size_t checked = 0;
    for (const auto& base : programs) {
      const std::string cls = base.id == "loops" ? "P" : main_class(base);
      const auto expected = behavior(base.files, cls);
      if (!expected) continue;
      for (auto t : {TransformId::tEA, TransformId::tEU, TransformId::tSV, TransformId::tAD,
                     TransformId::tSD, TransformId::tFW, TransformId::tUD, TransformId::tAC,
                     TransformId::tRC, TransformId::tMC}) {
        for (double chance : {0.5, 1.0}) {
          auto files = base.files;
          mutate::Rng rng(17);
          for (auto& f : files) (void)mutate::apply_transform(t, f.unit, chance, rng, f.name);
          // Go through text so the printer is exercised too.
          for (auto& f : files) f.unit = lang::parse(lang::format(f.unit));
          CAPTURE(base.id);
          CAPTURE(mutate::name_of(t));
          const auto got = behavior(files, cls);
          REQUIRE(got.has_value());
          CHECK(*got == *expected);
          ++checked;
        }
      }
      // The whole semantics-preserving chain at once.
      auto files = base.files;
      mutate::Rng rng(23);
      for (auto& f : files) {
        (void)mutate::apply_all_transforms(
            {TransformId::tUD, TransformId::tFW, TransformId::tEA, TransformId::tEU,
             TransformId::tSV, TransformId::tAD, TransformId::tSD},
            f.unit, 1.0, rng, f.name);
      }
      CHECK(behavior(files, cls) == expected);
    }
    CHECK(checked >= 200);
  }

  TEST_CASE("default values") {
    CHECK(mutate::default_value({"int", 0}).text == "0");
    CHECK(mutate::default_value({"long", 0}).text == "0L");
    CHECK(mutate::default_value({"int", 1}).text == "null");
    CHECK(mutate::default_value({"int", 0}, 1).text == "null");
    CHECK(mutate::default_value({"Item", 0}).kind == lang::LiteralKind::Null);
  }
}

TEST_SUITE("inject") {
  TEST_CASE("seed pool indexing") {
    const auto empty = testutil::scratch("empty_pool");
    const auto p0 = mutate::index_seed_pool(empty);
    for (auto s : mutate::kAllScopes) CHECK(p0.count(s) == 0);

    const auto dir = testutil::scratch("one_pool");
    {
      std::ofstream(dir / "D.mj")
          << "class D {\n  int f;\n  void a() {\n    int x = 1;\n    if (x > 0) {\n"
             "      x = 2;\n      x++;\n    }\n  }\n  int b() {\n    return f;\n  }\n}\n";
      std::ofstream(dir / "broken.mj") << "class {";
    }
    const auto p = mutate::index_seed_pool(dir);
    CHECK(p.count(mutate::InjectionScope::File) == 1);
    CHECK(p.count(mutate::InjectionScope::Class) == 1);
    CHECK(p.count(mutate::InjectionScope::Method) == 2);
    // `int x = 1;`, the whole `if`, `return f;`. Statements inside the if
    // are not reached through blocks alone, so they are not donors.
    CHECK(p.count(mutate::InjectionScope::Statement) == 3);
    CHECK(p.warnings.size() == 1);
    const auto again = mutate::index_seed_pool(dir);
    CHECK(again.count(mutate::InjectionScope::Statement) == 3);
    CHECK_THROWS(mutate::index_seed_pool(dir / "missing"));
  }

  TEST_CASE("file scope appends exactly f files") {
    const auto pool = mutate::index_seed_pool(testutil::seedpool_dir());
    const auto base = mutate::BaseProgram::load(testutil::bases_dir() / "03_primes");
    mutate::MutationConfig cfg;
    cfg.inject_chance = 1.0;
    for (std::size_t f : {1U, 4U, 11U}) {
      cfg.limits.files = f;
      auto files = base.files;
      mutate::Rng rng(1);
      const auto recs = mutate::inject(files, mutate::InjectionScope::File, cfg, rng, pool);
      CHECK(files.size() == base.files.size() + f);
      CHECK(recs.size() == f);
      std::set<std::string> names;
      for (const auto& nf : files) names.insert(nf.name);
      CHECK(names.size() == files.size());
    }
  }

  TEST_CASE("statement scope respects the per-method cap") {
    const auto pool = mutate::index_seed_pool(testutil::seedpool_dir());
    auto files = std::vector<mutate::NamedUnit>{
        {"A.mj", lang::parse("class A { void m() { a = 1; b = 2; c = 3; d = 4; } }")}};
    mutate::MutationConfig cfg;
    cfg.inject_chance = 1.0;
    cfg.limits.statements = 12;
    mutate::Rng rng(4);
    const auto recs = mutate::inject(files, mutate::InjectionScope::Statement, cfg, rng, pool);
    CHECK(recs.size() == 4);
    const auto& body = std::get<lang::MethodDecl>(files[0].unit.type_decls[0].members[0]).body;
    CHECK(body.stmts.size() == 8);
  }

  TEST_CASE("chance 0 injects nothing; an empty pool throws on success") {
    const auto pool = mutate::index_seed_pool(testutil::seedpool_dir());
    const auto base = mutate::BaseProgram::load(testutil::bases_dir() / "01_bank");
    mutate::MutationConfig cfg;
    for (auto s : mutate::kAllScopes) {
      auto files = base.files;
      mutate::Rng rng(1);
      CHECK(mutate::inject(files, s, cfg, rng, pool).empty());
      CHECK(lang::format(files[0].unit) == lang::format(base.files[0].unit));
    }
    cfg.inject_chance = 1.0;
    const mutate::SeedPool none;
    for (auto s : mutate::kAllScopes) {
      auto files = base.files;
      mutate::Rng rng(1);
      CHECK_THROWS_AS(mutate::inject(files, s, cfg, rng, none), EmptySeedPool);
    }
  }
}

TEST_SUITE("generate") {
  TEST_CASE("chances 0 reproduce the formatted base") {
    const auto pool = mutate::index_seed_pool(testutil::seedpool_dir());
    mutate::MutationConfig cfg;
    cfg.transforms.assign(mutate::kAllTransforms.begin(), mutate::kAllTransforms.end());
    cfg.injections.assign(mutate::kAllScopes.begin(), mutate::kAllScopes.end());
    cfg.variants_per_base = 2;
    for (const auto& base : mutate::load_bases(testutil::bases_dir())) {
      for (const auto& v : mutate::generate_variants(base, cfg, pool)) {
        CHECK(v.files == base.formatted());
        CHECK(v.log.records.empty());
      }
    }
  }

  TEST_CASE("same seed, same bytes, any thread count") {
    const auto pool = mutate::index_seed_pool(testutil::seedpool_dir());
    const auto base = mutate::BaseProgram::load(testutil::bases_dir() / "20_shapes");
    mutate::MutationConfig cfg;
    cfg.transforms.assign(mutate::kAllTransforms.begin(), mutate::kAllTransforms.end());
    cfg.injections.assign(mutate::kAllScopes.begin(), mutate::kAllScopes.end());
    cfg.transform_chance = 0.4;
    cfg.inject_chance = 0.4;
    cfg.seed = 99;
    cfg.variants_per_base = 6;
    const auto a = mutate::generate_variants(base, cfg, pool, 1);
    const auto b = mutate::generate_variants(base, cfg, pool, 4);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k) {
      CHECK(a[k].files == b[k].files);
      CHECK(a[k].log.to_json() == b[k].log.to_json());
    }
    CHECK(a[0].files != a[1].files);
  }

  TEST_CASE("full set at 1.0 changes every base and re-parses") {
    mutate::MutationConfig cfg;
    cfg.transforms.assign(mutate::kAllTransforms.begin(), mutate::kAllTransforms.end());
    cfg.transform_chance = 1.0;
    const mutate::SeedPool pool;
    for (const auto& base : mutate::load_bases(testutil::bases_dir())) {
      const auto v = mutate::generate_variant(base, cfg, pool, 0);
      CHECK(v.log.n_transforms() > 0);
      for (const auto& [n, c] : v.files) CHECK_NOTHROW(lang::parse(c));
    }
  }

  TEST_CASE("injected lloc matches the log") {
    const auto pool = mutate::index_seed_pool(testutil::seedpool_dir());
    for (auto s : mutate::kAllScopes) {
      mutate::MutationConfig cfg;
      cfg.injections = {s};
      cfg.inject_chance = 0.6;
      cfg.seed = 5;
      cfg.variants_per_base = 3;
      for (const auto& base : mutate::load_bases(testutil::bases_dir())) {
        std::size_t base_lloc = 0;
        for (const auto& f : base.files) base_lloc += lang::lloc(f.unit);
        for (const auto& v : mutate::generate_variants(base, cfg, pool)) {
          std::size_t lloc = 0;
          for (const auto& [n, c] : v.files) lloc += lang::lloc(lang::parse(c));
          CHECK(lloc - base_lloc == v.log.l_lloc_injected());
        }
      }
    }
  }

  TEST_CASE("modification log json round-trip") {
    mutate::ModificationLog log;
    log.append({{"tSO", false, "A.mj", "A.m#4", 1, 0}, {"method", true, "A.mj", "A@2", 1, 7}});
    CHECK(log.n_transforms() == 1);
    CHECK(log.l_lloc_injected() == 7);
    const auto back = mutate::ModificationLog::from_json(nlohmann::json::parse(log.to_json().dump()));
    CHECK(back.to_json() == log.to_json());
  }

  TEST_CASE("written variants carry manifest and log") {
    const auto out = testutil::scratch("write_variant");
    const auto base = mutate::BaseProgram::load(testutil::bases_dir() / "12_stack");
    mutate::MutationConfig cfg;
    cfg.transforms = {TransformId::tRI};
    cfg.transform_chance = 1.0;
    cfg.seed = 7;
    const auto v = mutate::generate_variant(base, cfg, {}, 0);
    mutate::write_variant(v, base, cfg, out, 7);
    const auto dir = out / "12_stack" / "v0";
    for (const auto& [n, c] : v.files) CHECK(testutil::slurp(dir / n) == c);
    const auto m = nlohmann::json::parse(testutil::slurp(dir / "manifest.json"));
    CHECK(m["schema_version"] == 1);
    CHECK(m["run_seed"] == 7);
    CHECK(m["base_hash"] == base.hash());
    const auto log = nlohmann::json::parse(testutil::slurp(dir / "modlog.json"));
    CHECK(log["n_transforms"] == v.log.n_transforms());
  }
}
