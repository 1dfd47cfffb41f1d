#include <doctest.h>

#include <random>
#include <string>

#include "oracles/ged_exact.hpp"
#include "oracles/levenshtein_dp.hpp"
#include "oracles/tiling_naive.hpp"
#include "oracles/ted_mapping.hpp"
#include "scpd/errors.hpp"
#include "scpd/sim/formulas.hpp"
#include "scpd/sim/graph_edit.hpp"
#include "scpd/sim/sequence.hpp"
#include "scpd/sim/tree_edit.hpp"

using namespace scpd;

namespace {

std::size_t lev(const std::string& a, const std::string& b) {
  return sim::levenshtein(std::span<const char>(a), std::span<const char>(b)).distance;
}

std::string random_string(std::mt19937& g, std::size_t max_len, int alphabet) {
  std::uniform_int_distribution<std::size_t> len(0, max_len);
  std::uniform_int_distribution<int> ch(0, alphabet - 1);
  std::string s(len(g), 'a');
  for (auto& c : s) c = static_cast<char>('a' + ch(g));
  return s;
}

// Random ordered tree: node k > 0 hangs under a random earlier node, and
// children are listed in pre-order afterwards.
std::pair<repr::LabeledTree, oracle::SmallTree> random_tree(std::mt19937& g, std::size_t n) {
  std::vector<std::size_t> parent(n);
  std::vector<std::uint32_t> label(n);
  std::uniform_int_distribution<std::uint32_t> lab(0, 2);
  for (std::size_t k = 0; k < n; ++k) {
    label[k] = lab(g);
    if (k > 0) parent[k] = std::uniform_int_distribution<std::size_t>(0, k - 1)(g);
  }
  std::vector<std::vector<std::size_t>> kids(n);
  for (std::size_t k = 1; k < n; ++k) kids[parent[k]].push_back(k);
  // Re-number in pre-order.
  repr::LabeledTree t;
  oracle::SmallTree o;
  auto walk = [&](auto&& self, std::size_t v) -> std::size_t {
    const std::size_t id = t.add(label[v]);
    o.labels.push_back(label[v]);
    o.children.emplace_back();
    for (auto c : kids[v]) {
      const std::size_t cid = self(self, c);
      t.children[id].push_back(static_cast<std::uint32_t>(cid));
      o.children[id].push_back(cid);
    }
    return id;
  };
  if (n > 0) walk(walk, 0);
  return {t, o};
}

std::pair<repr::Pdg, oracle::SmallGraph> random_pdg(std::mt19937& g, std::size_t n) {
  static const char* const kLabels[] = {"stmt:ExprStmt", "stmt:If", "data:a", "data:b"};
  repr::Pdg p;
  oracle::SmallGraph o;
  p.method = "m";
  p.nodes.push_back({repr::PdgNodeKind::Entry, "entry"});
  o.labels.push_back("entry");
  std::uniform_int_distribution<int> lab(0, 3);
  for (std::size_t k = 1; k < n; ++k) {
    const char* l = kLabels[lab(g)];
    const bool data = std::string(l).rfind("data:", 0) == 0;
    p.nodes.push_back({data ? repr::PdgNodeKind::Data : repr::PdgNodeKind::Statement, l});
    o.labels.emplace_back(l);
  }
  std::bernoulli_distribution coin(0.3);
  for (std::size_t f = 0; f < n; ++f) {
    for (std::size_t t = 0; t < n; ++t) {
      if (f == t) continue;
      if (coin(g)) {
        p.control_edges.emplace_back(f, t);
        o.edges.emplace_back(f, t, 0);
      }
      if (coin(g)) {
        p.data_edges.emplace_back(f, t);
        o.edges.emplace_back(f, t, 1);
      }
    }
  }
  return {p, o};
}

}  // namespace

TEST_SUITE("sim") {
  TEST_CASE("levenshtein examples") {
    CHECK(lev("abc", "abc") == 0);
    CHECK(lev("", "abc") == 3);
    CHECK(lev("kitten", "sitting") == 3);
    CHECK(oracle::levenshtein_dp(std::vector<char>{'k', 'i', 't', 't', 'e', 'n'},
                                 std::vector<char>{'s', 'i', 't', 't', 'i', 'n', 'g'}) == 3);
  }

  TEST_CASE("levenshtein against the DP oracle, exhaustively up to length 4") {
    // Every string over {a,b} of length <= 4 against every other.
    std::vector<std::string> all{""};
    for (std::size_t len = 1; len <= 4; ++len) {
      for (unsigned bits = 0; bits < (1U << len); ++bits) {
        std::string s;
        for (std::size_t k = 0; k < len; ++k) s += (bits >> k) & 1U ? 'b' : 'a';
        all.push_back(s);
      }
    }
    for (const auto& a : all) {
      for (const auto& b : all) {
        REQUIRE(lev(a, b) == oracle::levenshtein_dp(std::vector<char>(a.begin(), a.end()),
                                                    std::vector<char>(b.begin(), b.end())));
      }
    }
  }

  TEST_CASE("levenshtein is symmetric and obeys the triangle inequality") {
    std::mt19937 g(11);
    for (int k = 0; k < 300; ++k) {
      const auto a = random_string(g, 10, 3);
      const auto b = random_string(g, 10, 3);
      const auto c = random_string(g, 10, 3);
      CHECK(lev(a, b) == lev(b, a));
      CHECK(lev(a, c) <= lev(a, b) + lev(b, c));
    }
  }

  TEST_CASE("tiling examples") {
    const std::vector<int> same(40, 7);
    std::vector<int> seq(40);
    for (int k = 0; k < 40; ++k) seq[static_cast<std::size_t>(k)] = k;
    CHECK(sim::greedy_tiles(std::span<const int>(seq), std::span<const int>(seq), 12).covered == 40);
    const std::string a1 = "aaaaaaaaaaaaaaaa", b1 = "bbbbbbbbbbbbbbbb";
    CHECK(sim::greedy_tiles(std::span<const char>(a1), std::span<const char>(b1), 1).covered == 0);
    const std::string a = "XXXXXXXXXXXXYYYYYYYYYYYY";
    const std::string b = "YYYYYYYYYYYYXXXXXXXXXXXX";
    const auto cov = sim::greedy_tiles(std::span<const char>(a), std::span<const char>(b), 12);
    CHECK(cov.covered == 24);
    CHECK(cov.tiles.size() == 2);
    const auto naive = oracle::tiles_naive(std::vector<char>(a.begin(), a.end()),
                                           std::vector<char>(b.begin(), b.end()), 12);
    CHECK(naive.size() == 2);
    CHECK(sim::fsim_gst(24, 24, cov.covered) == 1.0);
  }

  TEST_CASE("tiling against the one-at-a-time oracle") {
    std::mt19937 g(5);
    for (int k = 0; k < 400; ++k) {
      const auto a = random_string(g, 30, 2);
      const auto b = random_string(g, 30, 2);
      const std::size_t mm = 1 + static_cast<std::size_t>(k % 4);
      const auto fast = sim::greedy_tiles(std::span<const char>(a), std::span<const char>(b), mm);
      const auto slow = oracle::tiles_naive(std::vector<char>(a.begin(), a.end()),
                                            std::vector<char>(b.begin(), b.end()), mm);
      REQUIRE(fast.tiles.size() == slow.size());
      std::size_t covered = 0;
      for (std::size_t t = 0; t < slow.size(); ++t) {
        CHECK(fast.tiles[t].start_a == slow[t].a);
        CHECK(fast.tiles[t].start_b == slow[t].b);
        CHECK(fast.tiles[t].length == slow[t].len);
        covered += slow[t].len;
      }
      CHECK(fast.covered == covered);
      // Coverage, not the tile list, is what the similarity depends on.
      const auto rev = sim::greedy_tiles(std::span<const char>(b), std::span<const char>(a), mm);
      CHECK(rev.covered <= std::min(a.size(), b.size()));
    }
  }

  TEST_CASE("tree edit distance examples") {
    repr::LabeledTree one;
    one.add(1);
    const repr::LabeledTree none;
    CHECK(sim::tree_edit_distance(one, one).distance == 0);
    CHECK(sim::tree_edit_distance(one, none).distance == 1);
    CHECK(sim::tree_edit_distance(none, none).distance == 0);
  }

  TEST_CASE("tree edit distance matches mapping enumeration") {
    std::mt19937 g(3);
    for (int k = 0; k < 150; ++k) {
      const auto [ta, oa] = random_tree(g, 1 + static_cast<std::size_t>(g() % 6));
      const auto [tb, ob] = random_tree(g, 1 + static_cast<std::size_t>(g() % 6));
      REQUIRE(sim::tree_edit_distance(ta, tb).distance == oracle::ted_by_mapping(oa, ob));
      CHECK(sim::tree_edit_distance(ta, tb).distance == sim::tree_edit_distance(tb, ta).distance);
    }
  }

  TEST_CASE("tree edit distance refuses oversize inputs") {
    std::mt19937 g(1);
    const auto [ta, oa] = random_tree(g, 40);
    CHECK_THROWS_AS(sim::tree_edit_distance(ta, ta, 100), ResourceLimit);
    CHECK(sim::tree_edit_distance(ta, ta, 1600).distance == 0);
  }

  TEST_CASE("greedy graph edit distance bounds exact GED") {
    std::mt19937 g(9);
    for (int k = 0; k < 80; ++k) {
      const auto [pa, oa] = random_pdg(g, 1 + static_cast<std::size_t>(g() % 5));
      const auto [pb, ob] = random_pdg(g, 1 + static_cast<std::size_t>(g() % 5));
      const auto r = sim::graph_ed_greedy(pa, pb);
      CHECK(r.distance >= oracle::ged_exact(oa, ob));
      CHECK(r.size_a == pa.size());
      CHECK(sim::graph_ed_greedy(pa, pa).distance == 0);
      CHECK(oracle::ged_exact(oa, oa) == 0);
    }
  }

  TEST_CASE("graph vs empty graph costs every node and edge") {
    std::mt19937 g(2);
    const auto [p, o] = random_pdg(g, 5);
    const repr::Pdg empty;
    CHECK(sim::graph_ed_greedy(p, empty).distance == p.size());
  }

  TEST_CASE("similarity formulas") {
    CHECK(sim::fsim_ed(10, 10, 0) == 1.0);
    CHECK(sim::fsim_ed(10, 10, 5) == 0.5);
    CHECK(sim::fsim_ed(10, 4, 10) == 0.0);
    CHECK(sim::fsim_ed(3, 3, 9) == 0.0);  // clamped
    CHECK(sim::fsim_gst(40, 40, 40) == 1.0);
    CHECK(sim::fsim_gst(40, 10, 0) == 0.0);
    CHECK_THROWS_AS(sim::fsim_ed(0, 0, 0), DegenerateInput);
    CHECK_THROWS_AS(sim::fsim_gst(0, 0, 0), DegenerateInput);
  }
}
