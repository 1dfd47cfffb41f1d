#include "scpd/report/render.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace scpd::report {

namespace fs = std::filesystem;
using pipeline::RobustnessScore;
using pipeline::RunReport;

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string opt2(const std::optional<double>& v) { return v ? fixed2(*v) : std::string(); }

std::string heatmap(const RunReport& r, double chance, bool ratio) {
  const bool inj = pipeline::is_injection(r.kind);
  std::ostringstream out;
  out << "detector";
  for (const auto& s : r.sets) out << ',' << csv_field(s.label);
  out << '\n';
  for (auto d : r.detectors) {
    out << detect::title_of(d);
    for (const auto& s : r.sets) {
      out << ',';
      const RobustnessScore* c = r.cell(d, s.label, chance);
      if (c == nullptr) continue;
      out << (ratio ? opt2(inj ? c->rci : c->rct) : fixed2(c->avg_sim));
    }
    out << '\n';
  }
  return out.str();
}

std::string robustness_csv(const RunReport& r) {
  std::ostringstream out;
  out << "detector,set,chance,avg_sim,rct,rci,n_pairs,n_skipped_saturated,n_skipped_zero\n";
  for (const auto& g : r.grid) {
    out << detect::title_of(g.detector) << ',' << csv_field(g.set) << ','
        << pipeline::chance_label(g.chance) << ',' << fixed2(g.avg_sim) << ',' << opt2(g.rct)
        << ',' << opt2(g.rci) << ',' << g.n_pairs << ',' << g.n_skipped_saturated << ','
        << g.n_skipped_zero << '\n';
  }
  return out.str();
}

std::vector<const RobustnessScore*> ordered(std::vector<const RobustnessScore*> cells,
                                            bool ascending) {
  std::stable_sort(cells.begin(), cells.end(), [&](const auto* a, const auto* b) {
    return ascending ? a->avg_sim < b->avg_sim : a->avg_sim > b->avg_sim;
  });
  return cells;
}

std::string ranking_md(const RunReport& r) {
  const bool inj = pipeline::is_injection(r.kind);
  std::ostringstream out;
  out << "# Detector rankings\n\n";
  out << "Experiment: " << pipeline::name_of(r.kind) << ". Bases: " << r.bases.size()
      << ". AvgSim in percent; higher means the detector kept more of the similarity.\n";
  for (double chance : r.chances) {
    out << "\n## Chance " << pipeline::chance_label(chance) << "%\n\n";
    out << "### Detectors per set (highest AvgSim first)\n\n";
    out << "| Set | Ordering |\n|---|---|\n";
    for (const auto& s : r.sets) {
      std::vector<const RobustnessScore*> cells;
      for (auto d : r.detectors) {
        if (const auto* c = r.cell(d, s.label, chance)) cells.push_back(c);
      }
      out << "| " << s.label << " | ";
      bool first = true;
      for (const auto* c : ordered(cells, false)) {
        if (!first) out << " > ";
        first = false;
        out << detect::title_of(c->detector) << " (" << fixed2(c->avg_sim) << ")";
      }
      out << " |\n";
    }
    out << "\n### Sets per detector (largest drop first)\n\n";
    out << "| Detector | Ordering |\n|---|---|\n";
    for (auto d : r.detectors) {
      std::vector<const RobustnessScore*> cells;
      for (const auto& s : r.sets) {
        if (const auto* c = r.cell(d, s.label, chance)) cells.push_back(c);
      }
      out << "| " << detect::title_of(d) << " | ";
      bool first = true;
      for (const auto* c : ordered(cells, true)) {
        if (!first) out << ' ';
        first = false;
        out << c->set << " (" << fixed2(c->avg_sim) << ")";
      }
      out << " |\n";
    }
    out << "\n### Mean " << (inj ? "RCI" : "RCT") << " per detector (higher is more robust)\n\n";
    out << "| Detector |";
    for (const auto& s : r.sets) out << ' ' << s.label << " |";
    out << "\n|---|";
    for (std::size_t i = 0; i < r.sets.size(); ++i) out << "---|";
    out << '\n';
    for (auto d : r.detectors) {
      out << "| " << detect::title_of(d) << " |";
      for (const auto& s : r.sets) {
        const auto* c = r.cell(d, s.label, chance);
        const std::string v = c == nullptr ? std::string() : opt2(inj ? c->rci : c->rct);
        out << ' ' << (v.empty() ? "-" : v) << " |";
      }
      out << '\n';
    }
  }
  return out.str();
}

void write_text(const fs::path& p, const std::string& text) {
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + p.string());
  out << text;
}

}  // namespace

std::string fixed2(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s = buf;
  if (s == "-0.00") s = "0.00";
  return s;
}

std::vector<Surface> render_surfaces(const RunReport& r) {
  std::vector<Surface> out;
  const std::string ratio = pipeline::is_injection(r.kind) ? "rci" : "rct";
  for (double chance : r.chances) {
    const std::string pct = pipeline::chance_label(chance);
    out.emplace_back("heatmap_avgsim_" + pct + ".csv", heatmap(r, chance, false));
    out.emplace_back("heatmap_" + ratio + "_" + pct + ".csv", heatmap(r, chance, true));
  }
  out.emplace_back("robustness.csv", robustness_csv(r));
  out.emplace_back("ranking.md", ranking_md(r));
  return out;
}

std::string render_report_json(const RunReport& report) {
  return pipeline::to_json(report).dump(2) + "\n";
}

void write_all(const RunReport& report, const fs::path& dir) {
  fs::create_directories(dir);
  write_text(dir / "report.json", render_report_json(report));
  for (const auto& [name, content] : render_surfaces(report)) write_text(dir / name, content);
}

std::string ansi_heatmap(const RunReport& r, double chance) {
  // red (low similarity) through yellow to green (high)
  static constexpr int kRamp[] = {196, 202, 208, 214, 220, 226, 190, 154, 118, 82, 46};
  std::ostringstream out;
  out << "AvgSim at chance " << pipeline::chance_label(chance) << "%\n";
  out << "            ";
  for (const auto& s : r.sets) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%8.8s", s.label.c_str());
    out << buf;
  }
  out << '\n';
  for (auto d : r.detectors) {
    char name[16];
    std::snprintf(name, sizeof name, "%-12.12s", std::string(detect::title_of(d)).c_str());
    out << name;
    for (const auto& s : r.sets) {
      const auto* c = r.cell(d, s.label, chance);
      if (c == nullptr) {
        out << "       -";
        continue;
      }
      const int idx = std::clamp(static_cast<int>(c->avg_sim / 10.0), 0, 10);
      char buf[48];
      std::snprintf(buf, sizeof buf, "\x1b[48;5;%dm\x1b[30m%8.2f\x1b[0m", kRamp[idx], c->avg_sim);
      out << buf;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace scpd::report
