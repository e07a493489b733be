#pragma once

#include "drot/partition.hpp"
#include "drot/sweep.hpp"

#include <string>
#include <string_view>

namespace drot {

/// One JSON document per atlas with fields a0, a1, s, d, K, first_index,
/// tail {lo, hi, kind}, and bridge and body lists of {interval, lo,
/// lo_closed, hi, hi_closed, cycle, length}. Rationals are strings in canonical "p/q" form.
/// Output is byte-identical for identical atlases.
std::string atlas_to_json(const PartitionAtlas& atlas);

/// Inverse of atlas_to_json. Recomputes the tail and statistics and
/// rejects documents whose redundant fields disagree.
/// Throws std::invalid_argument.
PartitionAtlas atlas_from_json(std::string_view text);

/// "atlas_A_B.json"
std::string atlas_file_name(std::int64_t a0, std::int64_t a1);

/// Columns m,a0,a1,intervals,singletons,max_len,avg_len; one row per point.
std::string sweep_summary_csv(const SweepReport& report);

}  // namespace drot
