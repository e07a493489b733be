#pragma once

#include "drot/partition.hpp"
#include "drot/verify.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace drot {

/// Per-point digest of an atlas; everything the tables need.
struct PointSummary {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::size_t intervals = 0;
  std::size_t singletons = 0;
  std::size_t max_length = 0;
  std::optional<Interval> max_length_interval;
  Rational total_length;
  Rational average_length;
  bool verified = false;
  std::string failure;  // verification failure or atlas error text

  std::int64_t ring() const;  // max(|a0|, |a1|)
};

PointSummary summarize(const PartitionAtlas& atlas, const VerificationReport& verification);

/// Aggregates over the points with max(|a0|,|a1|) == m.
struct RingRow {
  std::int64_t m = 0;
  std::size_t points = 0;
  LatticePoint cardinality_argmax;
  std::size_t cardinality = 0;
  std::size_t singletons = 0;  // of the cardinality argmax
  LatticePoint length_argmax;
  std::size_t max_length = 0;
  std::optional<Interval> max_length_interval;
  Rational pooled_average;  // all body entries of the ring pooled together
  Rational mean_of_means;   // unweighted mean of the per-point averages
  bool all_verified = true;
};

struct SweepReport {
  std::int64_t m = 0;
  std::vector<PointSummary> points;  // sorted by (ring, a0, a1)
  std::vector<RingRow> rows;         // m = 1..M

  bool all_verified() const;
  /// Row for ring m, or nullptr.
  const RingRow* row(std::int64_t m) const;
};

/// Rebuilds the ring aggregates from point summaries. Ties go to the
/// point with the larger a0, then the larger a1.
SweepReport aggregate(std::int64_t m, std::vector<PointSummary> points);

struct SweepOptions {
  Limits limits;
  VerifyOptions verify;
  unsigned jobs = 0;  // 0: hardware concurrency
  /// Called once per computed atlas from worker threads; must be thread-safe.
  std::function<void(const PartitionAtlas&, const VerificationReport&)> on_atlas;
};

/// Computes and verifies the atlas of every (a0, a1) with
/// max(|a0|,|a1|) <= m. Atlas errors are recorded in the failing point's
/// summary rather than thrown.
SweepReport sweep(std::int64_t m, const SweepOptions& options = {});

}  // namespace drot
