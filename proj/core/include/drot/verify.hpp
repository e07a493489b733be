#pragma once

#include "drot/partition.hpp"

#include <cstdint>
#include <string>

namespace drot {

struct VerifyOptions {
  std::size_t probes_per_interval = 2;  // interior rationals re-detected per entry
  std::size_t tail_pieces = 3;          // Z_k pieces checked from the first occurrence index
  std::uint64_t cycle_cap = kDefaultStepCap;
};

struct VerificationReport {
  bool passed = true;
  std::string failure;  // first counterexample, empty on success
  std::size_t detections = 0;
};

/// Independent re-check of a computed atlas: exact tiling of the bridge
/// and body ranges, re-detection of every stored word at closed ends and interior
/// probes, word/interval consistency, pairwise distinct cycles, and the
/// tail formulas for the first few pieces. Failures are report content.
VerificationReport verify_atlas(const PartitionAtlas& atlas, const VerifyOptions& options = {});

inline VerificationReport verify_atlas(const PartitionAtlas& atlas, std::size_t probes_per_interval) {
  VerifyOptions options;
  options.probes_per_interval = probes_per_interval;
  return verify_atlas(atlas, options);
}

}  // namespace drot
