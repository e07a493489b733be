#pragma once

#include "drot/cycle.hpp"
#include "drot/dynamics.hpp"
#include "drot/interval.hpp"
#include "drot/interval_set.hpp"
#include "drot/tail.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace drot {

struct Limits {
  std::uint64_t cycle_cap = kDefaultStepCap;         // steps per orbit
  std::uint64_t max_rounds = 10'000;                 // refinement rounds per atlas
  std::uint64_t max_total_steps = 1'000'000'000;     // orbit steps per atlas
};

struct AtlasEntry {
  Interval interval;
  Cycle cycle;
};

struct AtlasStats {
  std::size_t intervals = 0;
  std::size_t singletons = 0;
  std::size_t max_length = 0;
  std::optional<Interval> max_length_interval;  // lowest interval attaining max_length
  Rational total_length;                        // sum of cycle lengths over the body
  Rational average_length;                      // total_length / intervals

  friend bool operator==(const AtlasStats&, const AtlasStats&) = default;
};

AtlasStats compute_stats(std::span<const AtlasEntry> body);

/// Complete description of ]-2,2[ for one initial point: the closed-form
/// tail near -2, an optional bridge, and finitely many body intervals, each
/// carrying the cycle word read from (a0, a1). Statistics cover the body
/// only.
struct PartitionAtlas {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  TailDescription tail;
  Interval body_range;
  std::vector<AtlasEntry> body;  // sorted by lower end
  AtlasStats stats;
  std::optional<Interval> bridge_range;  // tail.bridge()
  std::vector<AtlasEntry> bridge;        // sorted by lower end

  // Work counters; not part of the partition and ignored by operator==.
  std::uint64_t rounds = 0;
  std::uint64_t orbit_steps = 0;

  /// Same point, same entries (literal words, exact intervals), same stats.
  friend bool operator==(const PartitionAtlas& a, const PartitionAtlas& b);
};

/// [-2+1/(s+Kd), 2[, [-2+1/s, 2[, or ]-2,2[ for (0,0).
Interval body_range_of(const TailDescription& tail);

class AtlasError : public std::runtime_error {
 public:
  AtlasError(const std::string& what, LatticePoint start) : std::runtime_error(what), start_(start) {}
  LatticePoint start() const { return start_; }

 private:
  LatticePoint start_;
};

/// Refinement did not finish within Limits; `residual` is the uncovered set.
class BudgetExceeded : public AtlasError {
 public:
  BudgetExceeded(const std::string& what, LatticePoint start, IntervalSet residual)
      : AtlasError(what, start), residual_(std::move(residual)) {}
  const IntervalSet& residual() const { return residual_; }

 private:
  IntervalSet residual_;
};

/// An orbit at a sample λ did not close within the per-orbit cap.
class CycleCapExceeded : public AtlasError {
 public:
  CycleCapExceeded(const std::string& what, LatticePoint start, Rational lambda)
      : AtlasError(what, start), lambda_(std::move(lambda)) {}
  const Rational& lambda() const { return lambda_; }

 private:
  Rational lambda_;
};

/// Partitions the bridge and body ranges by repeated sampling: every sample λ yields
/// a cycle, the cycle yields its exact λ-interval, and the interval is
/// removed from the uncovered set until nothing remains.
/// Throws BudgetExceeded or CycleCapExceeded.
PartitionAtlas compute_atlas(std::int64_t a0, std::int64_t a1, const Limits& limits = {});

}  // namespace drot
