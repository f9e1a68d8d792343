#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace germ::testing {

/// Outcome of one randomized property suite.
struct PropertyTally {
  std::string name;
  long cases = 0;
  long failures = 0;
  std::string first_failure;

  void record(bool ok, const std::string& what);
};

PropertyTally groebner_s_pair_suite(std::uint64_t seed, int ideals);
PropertyTally leibniz_suite(std::uint64_t seed, int cases);
PropertyTally elimination_probe_suite(std::uint64_t seed, int maps, int probes_per_map);
PropertyTally puiseux_residual_suite(std::uint64_t seed, int curves);
PropertyTally saturation_suite(std::uint64_t seed, int ideals);
PropertyTally numeric_determinism_suite(std::uint64_t seed, int fibres);
/// Every symbolic verdict of every corpus fixture survives orthogonal changes
/// of the source coordinates (rotations, swaps, reflections).
PropertyTally linear_change_suite(const std::string& corpus_dir);

}  // namespace germ::testing
