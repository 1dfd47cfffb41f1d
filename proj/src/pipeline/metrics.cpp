#include "scpd/pipeline/metrics.hpp"

#include <stdexcept>
#include <string>

#include "scpd/errors.hpp"

namespace scpd::pipeline {

namespace {

double per_point(double count, double sim, const char* what) {
  if (sim >= 100.0) throw Saturated(std::string(what) + ": similarity did not drop");
  if (!(count > 0.0)) throw std::invalid_argument(std::string(what) + ": count must be positive");
  return count / (100.0 - sim);
}

}  // namespace

double avg_sim(const std::vector<double>& scores) {
  if (scores.empty()) throw EmptySample("avg_sim of an empty sample");
  double total = 0.0;
  for (double s : scores) total += s;
  return total / static_cast<double>(scores.size());
}

double rct(double n, double sim) { return per_point(n, sim, "rct"); }

double rci(double l, double sim) { return per_point(l, sim, "rci"); }

}  // namespace scpd::pipeline
