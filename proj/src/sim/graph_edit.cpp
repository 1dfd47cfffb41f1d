#include "scpd/sim/graph_edit.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>

namespace scpd::sim {

using repr::Pdg;
using repr::PdgNodeKind;

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = h ^ (v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

struct View {
  std::vector<int> label;
  std::vector<PdgNodeKind> kind;
  std::vector<std::vector<std::size_t>> succ;
  std::vector<std::vector<std::size_t>> neighbors;       // every adjacent node
  std::vector<std::vector<int>> neighbor_labels;         // sorted
  std::vector<std::vector<std::uint64_t>> data_sigs;     // scratch
  std::vector<std::uint64_t> signature;

  View(const Pdg& g, std::map<std::string, int>& interned) {
    const std::size_t n = g.nodes.size();
    label.resize(n);
    kind.resize(n);
    succ.resize(n);
    neighbors.resize(n);
    neighbor_labels.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      const auto [it, inserted] =
          interned.emplace(g.nodes[i].label, static_cast<int>(interned.size()));
      (void)inserted;
      label[i] = it->second;
      kind[i] = g.nodes[i].kind;
    }
    for (const auto& [from, to] : g.control_edges) {
      succ[from].push_back(to);
      neighbors[from].push_back(to);
      neighbors[to].push_back(from);
    }
    for (const auto& [from, to] : g.data_edges) {
      neighbors[from].push_back(to);
      neighbors[to].push_back(from);
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (auto nb : neighbors[i]) neighbor_labels[i].push_back(label[nb]);
      std::sort(neighbor_labels[i].begin(), neighbor_labels[i].end());
    }

    // Iterated label refinement: a node's signature folds in the ordered
    // signatures of its control successors and the sorted signatures of all
    // other neighbors.
    signature.resize(n);
    for (std::size_t i = 0; i < n; ++i) signature[i] = mix(0, static_cast<std::uint64_t>(label[i]));
    for (int round = 0; round < 3; ++round) {
      std::vector<std::uint64_t> next(n);
      for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t h = mix(signature[i], 1);
        for (auto s : succ[i]) h = mix(h, signature[s]);
        std::vector<std::uint64_t> others;
        for (auto nb : neighbors[i]) others.push_back(signature[nb]);
        std::sort(others.begin(), others.end());
        h = mix(h, 2);
        for (auto o : others) h = mix(h, o);
        next[i] = h;
      }
      signature = std::move(next);
    }
  }
};

std::size_t multiset_overlap(const std::vector<int>& x, const std::vector<int>& y) {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t common = 0;
  while (i < x.size() && j < y.size()) {
    if (x[i] == y[j]) {
      ++common;
      ++i;
      ++j;
    } else if (x[i] < y[j]) {
      ++i;
    } else {
      ++j;
    }
  }
  return common;
}

class Matcher {
 public:
  Matcher(const View& a, const View& b) : a_(a), b_(b) {
    m_.a_to_b.assign(a.label.size(), -1);
    m_.b_to_a.assign(b.label.size(), -1);
  }

  GraphMatching run() {
    walk_from_entries();
    pair_remaining(/*data=*/false);
    pair_remaining(/*data=*/true);
    relabel_leftovers();
    return std::move(m_);
  }

 private:
  bool free_a(std::size_t x) const { return m_.a_to_b[x] < 0; }
  bool free_b(std::size_t y) const { return m_.b_to_a[y] < 0; }

  void link(std::size_t x, std::size_t y) {
    m_.a_to_b[x] = static_cast<std::ptrdiff_t>(y);
    m_.b_to_a[y] = static_cast<std::ptrdiff_t>(x);
  }

  // Neighbors of x whose partners are neighbors of y.
  std::size_t agreeing_neighbors(std::size_t x, std::size_t y) const {
    std::size_t n = 0;
    for (auto nx : a_.neighbors[x]) {
      const auto partner = m_.a_to_b[nx];
      if (partner < 0) continue;
      const auto& ny = b_.neighbors[y];
      if (std::find(ny.begin(), ny.end(), static_cast<std::size_t>(partner)) != ny.end()) ++n;
    }
    return n;
  }

  // Larger is better.
  using Score = std::tuple<int, std::size_t, std::size_t, std::ptrdiff_t>;

  Score score(std::size_t x, std::size_t y, std::size_t pos_x, std::size_t pos_y) const {
    const int same_sig = a_.signature[x] == b_.signature[y] ? 1 : 0;
    const std::ptrdiff_t distance =
        -std::abs(static_cast<std::ptrdiff_t>(pos_x) - static_cast<std::ptrdiff_t>(pos_y));
    return {same_sig, agreeing_neighbors(x, y),
            multiset_overlap(a_.neighbor_labels[x], b_.neighbor_labels[y]), distance};
  }

  void walk_from_entries() {
    std::deque<std::pair<std::size_t, std::size_t>> queue;
    const auto ea = std::find(a_.kind.begin(), a_.kind.end(), PdgNodeKind::Entry);
    const auto eb = std::find(b_.kind.begin(), b_.kind.end(), PdgNodeKind::Entry);
    if (ea == a_.kind.end() || eb == b_.kind.end()) return;
    const auto root_a = static_cast<std::size_t>(ea - a_.kind.begin());
    const auto root_b = static_cast<std::size_t>(eb - b_.kind.begin());
    link(root_a, root_b);
    queue.emplace_back(root_a, root_b);

    while (!queue.empty()) {
      const auto [u, v] = queue.front();
      queue.pop_front();
      std::vector<std::size_t> sa;
      std::vector<std::size_t> sb;
      for (auto x : a_.succ[u]) {
        if (free_a(x)) sa.push_back(x);
      }
      for (auto y : b_.succ[v]) {
        if (free_b(y)) sb.push_back(y);
      }
      for (std::size_t i = 0; i < sa.size(); ++i) {
        const std::size_t x = sa[i];
        if (!free_a(x)) continue;
        std::ptrdiff_t best = -1;
        Score best_score{};
        for (std::size_t j = 0; j < sb.size(); ++j) {
          const std::size_t y = sb[j];
          if (!free_b(y) || a_.label[x] != b_.label[y]) continue;
          const Score s = score(x, y, i, j);
          if (best < 0 || s > best_score) {
            best = static_cast<std::ptrdiff_t>(y);
            best_score = s;
          }
        }
        if (best >= 0) {
          link(x, static_cast<std::size_t>(best));
          queue.emplace_back(x, static_cast<std::size_t>(best));
        }
      }
    }
  }

  void pair_remaining(bool data) {
    for (std::size_t x = 0; x < a_.label.size(); ++x) {
      if (!free_a(x) || (a_.kind[x] == PdgNodeKind::Data) != data) continue;
      std::ptrdiff_t best = -1;
      Score best_score{};
      for (std::size_t y = 0; y < b_.label.size(); ++y) {
        if (!free_b(y) || a_.label[x] != b_.label[y]) continue;
        const Score s = score(x, y, x, y);
        if (best < 0 || s > best_score) {
          best = static_cast<std::ptrdiff_t>(y);
          best_score = s;
        }
      }
      if (best >= 0) link(x, static_cast<std::size_t>(best));
    }
  }

  void relabel_leftovers() {
    for (std::size_t x = 0; x < a_.label.size(); ++x) {
      if (!free_a(x)) continue;
      std::ptrdiff_t best = -1;
      Score best_score{};
      for (std::size_t y = 0; y < b_.label.size(); ++y) {
        if (!free_b(y) || a_.kind[x] != b_.kind[y]) continue;
        const Score s = score(x, y, x, y);
        if (best < 0 || s > best_score) {
          best = static_cast<std::ptrdiff_t>(y);
          best_score = s;
        }
      }
      if (best >= 0) link(x, static_cast<std::size_t>(best));
    }
  }

  const View& a_;
  const View& b_;
  GraphMatching m_;
};

}  // namespace

GraphMatching greedy_graph_matching(const Pdg& a, const Pdg& b) {
  std::map<std::string, int> interned;
  const View va(a, interned);
  const View vb(b, interned);
  return Matcher(va, vb).run();
}

std::size_t matching_cost(const Pdg& a, const Pdg& b, const GraphMatching& m) {
  std::size_t cost = 0;
  for (std::size_t x = 0; x < a.nodes.size(); ++x) {
    const auto y = m.a_to_b[x];
    if (y < 0) {
      ++cost;
    } else if (a.nodes[x].label != b.nodes[static_cast<std::size_t>(y)].label) {
      ++cost;
    }
  }
  for (std::size_t y = 0; y < b.nodes.size(); ++y) {
    if (m.b_to_a[y] < 0) ++cost;
  }

  using TypedEdge = std::tuple<std::size_t, std::size_t, int>;
  std::set<TypedEdge> edges_b;
  for (const auto& [f, t] : b.control_edges) edges_b.emplace(f, t, 0);
  for (const auto& [f, t] : b.data_edges) edges_b.emplace(f, t, 1);
  std::set<TypedEdge> edges_a;
  for (const auto& [f, t] : a.control_edges) edges_a.emplace(f, t, 0);
  for (const auto& [f, t] : a.data_edges) edges_a.emplace(f, t, 1);

  std::size_t preserved = 0;
  for (const auto& [f, t, type] : edges_a) {
    const auto mf = m.a_to_b[f];
    const auto mt = m.a_to_b[t];
    if (mf >= 0 && mt >= 0 &&
        edges_b.count({static_cast<std::size_t>(mf), static_cast<std::size_t>(mt), type}) != 0) {
      ++preserved;
    }
  }
  cost += (edges_a.size() - preserved) + (edges_b.size() - preserved);
  return cost;
}

EditDistanceResult graph_ed_greedy(const Pdg& a, const Pdg& b) {
  const GraphMatching m = greedy_graph_matching(a, b);
  return {matching_cost(a, b, m), a.size(), b.size()};
}

}  // namespace scpd::sim
