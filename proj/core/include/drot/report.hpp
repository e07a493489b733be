#pragma once

#include "drot/partition.hpp"
#include "drot/sweep.hpp"

#include <span>
#include <string>

namespace drot {

/// Body boundary points in ascending order. A point owned by the proper
/// interval on its right is prefixed '>', by the one on its left '<';
/// unmarked points are singletons (or the open right end 2).
std::string render_endpoint_listing(const PartitionAtlas& atlas);

/// One line per entry: interval, cycle length, cycle word.
std::string render_entries(std::span<const AtlasEntry> entries);
inline std::string render_entries(const PartitionAtlas& atlas) { return render_entries(atlas.body); }

enum class TableFormat { text, csv };

/// "m, (a0,a1), cardinality, singletons"
std::string cardinality_row(const RingRow& row);
/// "m, (a0,a1), interval, max length, pooled average, mean of per-point averages"
std::string length_row(const RingRow& row);

/// Both statistics tables (cardinality, then cycle lengths).
std::string render_tables(const SweepReport& report, TableFormat format);

/// Number-line figure of ]-2,2[ as SVG: proper body intervals are colored
/// rects keyed to cycle length, singletons are tick lines, a triangular
/// or constant tail is a hatched rect, and a bridge is underlined. Geometry is derived from the exact
/// endpoints and rounded only when printed.
std::string emit_diagram(const PartitionAtlas& atlas);

}  // namespace drot
