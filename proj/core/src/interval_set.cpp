#include "drot/interval_set.hpp"

#include <algorithm>
#include <stdexcept>

namespace drot {

namespace {

// True when some point lies strictly between a and b (or the touching
// point is excluded from both), so a and b cannot be merged.
bool separated(const Interval& a, const Interval& b) {
  if (a.hi() < b.lo()) {
    return true;
  }
  return a.hi() == b.lo() && !a.hi_closed() && !b.lo_closed();
}

Interval merge_hull(const Interval& a, const Interval& b) {
  // a.lo <= b.lo under lower_end_less
  if (b.hi() < a.hi()) {
    return a;
  }
  if (a.hi() < b.hi()) {
    return Interval(a.lo(), a.lo_closed(), b.hi(), b.hi_closed());
  }
  return Interval(a.lo(), a.lo_closed(), a.hi(), a.hi_closed() || b.hi_closed());
}

}  // namespace

IntervalSet IntervalSet::from_union(std::vector<Interval> intervals) {
  std::sort(intervals.begin(), intervals.end(), lower_end_less);
  IntervalSet out;
  for (auto& i : intervals) {
    if (out.parts_.empty() || separated(out.parts_.back(), i)) {
      out.parts_.push_back(std::move(i));
    } else {
      out.parts_.back() = merge_hull(out.parts_.back(), i);
    }
  }
  return out;
}

bool IntervalSet::contains(const Rational& x) const {
  // first part whose upper end is not below x
  auto it = std::partition_point(parts_.begin(), parts_.end(),
                                 [&](const Interval& p) { return p.hi() < x; });
  for (; it != parts_.end() && it->lo() <= x; ++it) {
    if (it->contains(x)) {
      return true;
    }
  }
  return false;
}

IntervalSet IntervalSet::from_parts(std::vector<Interval> parts) {
  IntervalSet out;
  out.parts_ = std::move(parts);
  if (!out.well_formed()) {
    throw std::invalid_argument("interval set parts overlap or are out of order: " + to_string(out));
  }
  return out;
}

bool IntervalSet::well_formed() const {
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (!entirely_before(parts_[i - 1], parts_[i])) {
      return false;
    }
  }
  return true;
}

IntervalSet subtract(const IntervalSet& x, const Interval& y) {
  const auto& parts = x.parts_;
  // parts entirely below y are untouched
  auto first = std::partition_point(parts.begin(), parts.end(),
                                    [&](const Interval& p) { return entirely_before(p, y); });
  auto last = first;
  while (last != parts.end() && !entirely_before(y, *last)) {
    ++last;
  }

  IntervalSet out;
  out.parts_.reserve(parts.size() + 1);
  out.parts_.insert(out.parts_.end(), parts.begin(), first);
  for (auto it = first; it != last; ++it) {
    if (auto left = clip_below(*it, y.lo(), !y.lo_closed())) {
      out.parts_.push_back(std::move(*left));
    }
    if (auto right = clip_above(*it, y.hi(), !y.hi_closed())) {
      out.parts_.push_back(std::move(*right));
    }
  }
  out.parts_.insert(out.parts_.end(), last, parts.end());
  return out;
}

IntervalSet unite(const IntervalSet& a, const IntervalSet& b) {
  std::vector<Interval> all(a.parts().begin(), a.parts().end());
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return IntervalSet::from_union(std::move(all));
}

std::vector<Rational> sample_points(const IntervalSet& x) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto& p : x.parts()) {
    out.push_back(p.sample_point());
  }
  return out;
}

std::string to_string(const IntervalSet& x) {
  std::string out = "{";
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (i > 0) {
      out += ", ";
    }
    out += x.parts()[i].to_string();
  }
  return out + "}";
}

}  // namespace drot
