#pragma once

#include "drot/interval.hpp"

#include <span>
#include <vector>

namespace drot {

/// Finite union of pairwise-disjoint intervals kept sorted by lower end.
/// Consecutive parts may touch at a point only if at most one of them
/// contains it.
class IntervalSet {
 public:
  IntervalSet() = default;
  explicit IntervalSet(Interval whole) : parts_{std::move(whole)} {}

  /// Union of arbitrary (possibly overlapping) intervals, with overlapping
  /// or gaplessly touching parts merged.
  static IntervalSet from_union(std::vector<Interval> intervals);

  /// Takes the parts as given. Throws std::invalid_argument unless they
  /// already satisfy the ordering/disjointness invariant.
  static IntervalSet from_parts(std::vector<Interval> parts);

  std::span<const Interval> parts() const { return parts_; }
  bool empty() const { return parts_.empty(); }
  std::size_t size() const { return parts_.size(); }
  bool contains(const Rational& x) const;

  /// True if the parts satisfy the ordering/disjointness invariant.
  bool well_formed() const;

  friend bool operator==(const IntervalSet&, const IntervalSet&) = default;

 private:
  friend IntervalSet subtract(const IntervalSet& x, const Interval& y);
  std::vector<Interval> parts_;
};

IntervalSet subtract(const IntervalSet& x, const Interval& y);
IntervalSet unite(const IntervalSet& a, const IntervalSet& b);

/// One sample per part, in part order: the midpoint, or the point itself
/// for a singleton.
std::vector<Rational> sample_points(const IntervalSet& x);

std::string to_string(const IntervalSet& x);

}  // namespace drot
