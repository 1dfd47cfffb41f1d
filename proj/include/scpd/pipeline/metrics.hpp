#pragma once

#include <vector>

namespace scpd::pipeline {

/// Arithmetic mean of percent scores. Throws EmptySample.
double avg_sim(const std::vector<double>& scores);

/// Modifications per 1% of similarity lost: n / (100 - sim).
/// Throws Saturated when sim >= 100 and std::invalid_argument when n <= 0.
double rct(double n, double sim);
double rci(double l, double sim);

}  // namespace scpd::pipeline
