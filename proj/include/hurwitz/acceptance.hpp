#pragma once

// The twelve acceptance criteria as lists of check reports.

#include "hurwitz/report.hpp"

namespace hurwitz {

inline constexpr int kCriteria = 12;

const char* criterion_title(int k);
// Runs criterion k (1-based); every report must pass.
std::vector<CheckReport> run_criterion(int k);

}  // namespace hurwitz
