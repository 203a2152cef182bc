#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ringlat/nagata.hpp"

namespace ringlat::app {

struct CheckOptions {
  LatticeOptions lattice;
  std::uint64_t scan_budget = std::uint64_t{1} << 20;
  std::uint64_t oracle_budget = std::uint64_t{1} << 24;
  std::size_t chain_budget = 2000;
};

struct CheckResult {
  std::string name;
  bool passed = true;
  /// Set when the check could not run (budget, hypotheses absent).
  bool skipped = false;
  std::string detail;
};

/// Proper ideals of S used for the quotient correspondence: zero, the
/// nilradical and its powers, maximal ideals and the conductor.
std::vector<Subspace> sample_ideals(const Extension& ext);

/// The named invariant suite for one extension. Budget overruns inside a
/// check mark it skipped; InvariantViolation marks it failed.
std::vector<CheckResult> run_checks(const Extension& ext, const CheckOptions& options = {});

}  // namespace ringlat::app
