#pragma once

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "scpd/pipeline/run.hpp"

namespace scpd::report {

/// Two decimals, ties to even on the exact binary value.
std::string fixed2(double v);

using Surface = std::pair<std::string, std::string>;  // file name, content

/// heatmap_avgsim_<pct>.csv and heatmap_<rct|rci>_<pct>.csv per chance,
/// robustness.csv and ranking.md. Rows follow the report's detector order,
/// columns its set order.
std::vector<Surface> render_surfaces(const pipeline::RunReport& report);

/// report.json as written by evaluate (two-space indent, trailing newline).
std::string render_report_json(const pipeline::RunReport& report);

/// Writes report.json and every surface into dir.
void write_all(const pipeline::RunReport& report, const std::filesystem::path& dir);

/// AvgSim grid for one chance, shaded with 256-colour ANSI backgrounds.
std::string ansi_heatmap(const pipeline::RunReport& report, double chance);

}  // namespace scpd::report
