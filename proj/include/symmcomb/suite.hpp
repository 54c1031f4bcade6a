#pragma once

// The invariant suite run by `symmcomb accept` on one diagram.

#include "symmcomb/satake.hpp"

#include <string>
#include <vector>

namespace symmcomb {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct SuiteOptions {
  int bound = 2;   // theta-coordinate bound for sweeps
  int box = 3;     // fundamental-coordinate bound for lattice sweeps
  int jobs = 1;
};

std::vector<CheckResult> diagram_suite(const SymmetricSpace& s, const SuiteOptions& options = {});

}  // namespace symmcomb
