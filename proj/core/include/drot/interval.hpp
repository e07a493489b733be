#pragma once

#include "drot/rational.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

namespace drot {

/// A non-empty rational interval with independently open or closed ends.
/// A singleton is lo == hi with both ends closed. Empty sets never appear
/// as an Interval; operations that can produce one return std::nullopt.
class Interval {
 public:
  /// Throws std::invalid_argument if the described set is empty.
  Interval(Rational lo, bool lo_closed, Rational hi, bool hi_closed);

  static std::optional<Interval> make(Rational lo, bool lo_closed, Rational hi, bool hi_closed);

  static Interval closed(Rational lo, Rational hi) { return {std::move(lo), true, std::move(hi), true}; }
  static Interval open(Rational lo, Rational hi) { return {std::move(lo), false, std::move(hi), false}; }
  static Interval closed_open(Rational lo, Rational hi) { return {std::move(lo), true, std::move(hi), false}; }
  static Interval open_closed(Rational lo, Rational hi) { return {std::move(lo), false, std::move(hi), true}; }
  static Interval singleton(const Rational& r) { return {r, true, r, true}; }

  /// Parses the canonical text form: "[lo,hi]", "[lo,hi)", "(lo,hi]",
  /// "(lo,hi)" or "[r]". Throws std::invalid_argument.
  static Interval parse(std::string_view text);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  bool lo_closed() const { return lo_closed_; }
  bool hi_closed() const { return hi_closed_; }
  bool is_singleton() const { return lo_ == hi_; }

  bool contains(const Rational& x) const;

  /// Arithmetic mean of the ends; the point itself for a singleton.
  Rational sample_point() const;

  std::string to_string() const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  Rational lo_;
  bool lo_closed_;
  Rational hi_;
  bool hi_closed_;
};

std::ostream& operator<<(std::ostream& os, const Interval& i);

std::optional<Interval> intersect(const Interval& a, const Interval& b);

/// Part of `i` strictly below `bound` (or at it, when `inclusive`).
std::optional<Interval> clip_below(const Interval& i, const Rational& bound, bool inclusive);

/// Part of `i` strictly above `bound` (or at it, when `inclusive`).
std::optional<Interval> clip_above(const Interval& i, const Rational& bound, bool inclusive);

/// True when every point of `a` is smaller than every point of `b`.
bool entirely_before(const Interval& a, const Interval& b);

/// True when a and b are disjoint and their union is an interval.
bool abuts(const Interval& left, const Interval& right);

/// Strict weak order by lower end (closed before open at equal values),
/// then by upper end.
bool lower_end_less(const Interval& a, const Interval& b);

}  // namespace drot
