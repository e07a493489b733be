#include "drot/interval.hpp"

#include <ostream>
#include <stdexcept>

namespace drot {

namespace {

bool describes_nonempty(const Rational& lo, bool lo_closed, const Rational& hi, bool hi_closed) {
  if (lo < hi) {
    return true;
  }
  return lo == hi && lo_closed && hi_closed;
}

}  // namespace

Interval::Interval(Rational lo, bool lo_closed, Rational hi, bool hi_closed)
    : lo_(std::move(lo)), lo_closed_(lo_closed), hi_(std::move(hi)), hi_closed_(hi_closed) {
  if (!describes_nonempty(lo_, lo_closed_, hi_, hi_closed_)) {
    throw std::invalid_argument("empty interval " + std::string(lo_closed_ ? "[" : "(") +
                                lo_.to_string() + "," + hi_.to_string() + (hi_closed_ ? "]" : ")"));
  }
}

std::optional<Interval> Interval::make(Rational lo, bool lo_closed, Rational hi, bool hi_closed) {
  if (!describes_nonempty(lo, lo_closed, hi, hi_closed)) {
    return std::nullopt;
  }
  return Interval(std::move(lo), lo_closed, std::move(hi), hi_closed);
}

Interval Interval::parse(std::string_view text) {
  auto fail = [&] { return std::invalid_argument("malformed interval: '" + std::string(text) + "'"); };
  if (text.size() < 3) {
    throw fail();
  }
  const char open = text.front();
  const char close = text.back();
  if ((open != '[' && open != '(') || (close != ']' && close != ')')) {
    throw fail();
  }
  const std::string_view body = text.substr(1, text.size() - 2);
  const auto comma = body.find(',');
  if (comma == std::string_view::npos) {
    if (open != '[' || close != ']') {
      throw fail();
    }
    return singleton(Rational::parse(body));
  }
  auto result = make(Rational::parse(body.substr(0, comma)), open == '[',
                     Rational::parse(body.substr(comma + 1)), close == ']');
  if (!result || result->is_singleton()) {
    // singletons have exactly one spelling
    throw fail();
  }
  return *result;
}

bool Interval::contains(const Rational& x) const {
  const bool above_lo = lo_closed_ ? lo_ <= x : lo_ < x;
  const bool below_hi = hi_closed_ ? x <= hi_ : x < hi_;
  return above_lo && below_hi;
}

Rational Interval::sample_point() const { return is_singleton() ? lo_ : midpoint(lo_, hi_); }

std::string Interval::to_string() const {
  if (is_singleton()) {
    return "[" + lo_.to_string() + "]";
  }
  return (lo_closed_ ? "[" : "(") + lo_.to_string() + "," + hi_.to_string() + (hi_closed_ ? "]" : ")");
}

std::ostream& operator<<(std::ostream& os, const Interval& i) { return os << i.to_string(); }

std::optional<Interval> intersect(const Interval& a, const Interval& b) {
  auto lower = clip_above(a, b.lo(), b.lo_closed());
  if (!lower) {
    return std::nullopt;
  }
  return clip_below(*lower, b.hi(), b.hi_closed());
}

std::optional<Interval> clip_below(const Interval& i, const Rational& bound, bool inclusive) {
  if (i.hi() < bound) {
    return i;
  }
  if (i.hi() == bound) {
    return Interval::make(i.lo(), i.lo_closed(), i.hi(), i.hi_closed() && inclusive);
  }
  return Interval::make(i.lo(), i.lo_closed(), bound, inclusive);
}

std::optional<Interval> clip_above(const Interval& i, const Rational& bound, bool inclusive) {
  if (bound < i.lo()) {
    return i;
  }
  if (i.lo() == bound) {
    return Interval::make(i.lo(), i.lo_closed() && inclusive, i.hi(), i.hi_closed());
  }
  return Interval::make(bound, inclusive, i.hi(), i.hi_closed());
}

bool entirely_before(const Interval& a, const Interval& b) {
  if (a.hi() < b.lo()) {
    return true;
  }
  return a.hi() == b.lo() && !(a.hi_closed() && b.lo_closed());
}

bool abuts(const Interval& left, const Interval& right) {
  return left.hi() == right.lo() && left.hi_closed() != right.lo_closed();
}

bool lower_end_less(const Interval& a, const Interval& b) {
  if (a.lo() != b.lo()) {
    return a.lo() < b.lo();
  }
  if (a.lo_closed() != b.lo_closed()) {
    return a.lo_closed();
  }
  if (a.hi() != b.hi()) {
    return a.hi() < b.hi();
  }
  return !a.hi_closed() && b.hi_closed();
}

}  // namespace drot
