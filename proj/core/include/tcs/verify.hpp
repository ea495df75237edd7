#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tcs/fan.hpp"

namespace tcs {

struct VerifyResult {
  std::string name;
  bool pass = false;
  double seconds = 0;
  std::string detail;
};

/// Named deterministic checks, each rebuilding its own inputs:
///   permutahedron    quotient of the minimal scaffold vs the reference fan
///   square           quotient of the square scaffold vs the product fan
///   bipermutahedron  quotient of the sliced scaffold vs the reference fan
///   sqrt-stack       the index-two quotient of the half-mark refinement
///   chain-stratum    the three-component chain stratum report
///   square-stratum   the patchwork-quilt stratum report
///   biperm-stratum   the hexagon stratum report
///   certificates     semistability/terminality/anchor/gluing across the corpus
///   properties       seeded randomized property suites
std::vector<std::string> verify_target_names();

/// Runs one target, or all of them for "all". max_n bounds the sweep of the
/// theorem-style targets (capped per target); seed drives the randomized
/// suites.
std::vector<VerifyResult> run_verify(const std::string& name_or_all, int max_n = 4,
                                     uint64_t seed = kDefaultSeed);

}  // namespace tcs
