#include "drot/constraints.hpp"

#include <cstdint>

namespace drot {

namespace {

__extension__ typedef __int128 i128;
__extension__ typedef unsigned __int128 u128;

// Words whose entries stay below this bound use the exact small-fraction
// kernel; cross products then stay below 2^123.
constexpr std::int64_t kKernelBound = std::int64_t{1} << 60;

struct Fraction {
  i128 num;
  i128 den;  // > 0
};

// sign of a - b
int compare(const Fraction& a, const Fraction& b) {
  const i128 lhs = a.num * b.den;
  const i128 rhs = b.num * a.den;
  return (lhs > rhs) - (lhs < rhs);
}

Rational to_rational(const Fraction& f) {
  auto to_big = [](i128 v) {
    const bool negative = v < 0;
    u128 mag = negative ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v);
    BigInt out = static_cast<std::uint64_t>(mag >> 64);
    out <<= 64;
    out += static_cast<std::uint64_t>(mag);
    return negative ? BigInt(-out) : out;
  };
  return Rational(to_big(f.num), to_big(f.den));
}

struct End {
  Fraction value;
  bool closed;
};

void tighten_lower(End& lo, const Fraction& v, bool closed) {
  const int c = compare(v, lo.value);
  if (c > 0) {
    lo = {v, closed};
  } else if (c == 0) {
    lo.closed = lo.closed && closed;
  }
}

void tighten_upper(End& hi, const Fraction& v, bool closed) {
  const int c = compare(v, hi.value);
  if (c < 0) {
    hi = {v, closed};
  } else if (c == 0) {
    hi.closed = hi.closed && closed;
  }
}

bool within_kernel_bound(const Cycle& word) {
  for (const std::int64_t b : word.word()) {
    if (b >= kKernelBound || b <= -kKernelBound) {
      return false;
    }
  }
  return true;
}

}  // namespace

std::string_view to_string(Sense sense) {
  switch (sense) {
    case Sense::ge:
      return ">=";
    case Sense::gt:
      return ">";
    case Sense::le:
      return "<=";
    case Sense::lt:
      return "<";
  }
  return "?";
}

bool HalfLineConstraint::admits(const Rational& lambda) const {
  switch (sense) {
    case Sense::ge:
      return lambda >= bound;
    case Sense::gt:
      return lambda > bound;
    case Sense::le:
      return lambda <= bound;
    case Sense::lt:
      return lambda < bound;
  }
  return false;
}

std::optional<std::vector<HalfLineConstraint>> constraints_for_cycle(const Cycle& word) {
  const std::size_t n = word.length();
  std::vector<HalfLineConstraint> out;
  out.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const BigInt prev = word[i];
    const BigInt mid = word[i + 1];
    const BigInt next = word[i + 2];
    if (mid == 0) {
      if (next != -prev) {
        return std::nullopt;
      }
      continue;
    }
    // 0 <= next + λ mid + prev < 1
    Rational at_zero(-prev - next, mid);
    Rational at_one(1 - prev - next, mid);
    if (mid > 0) {
      out.push_back({std::move(at_zero), Sense::ge});
      out.push_back({std::move(at_one), Sense::lt});
    } else {
      out.push_back({std::move(at_zero), Sense::le});
      out.push_back({std::move(at_one), Sense::gt});
    }
  }
  return out;
}

std::optional<Interval> interval_for_cycle(const Cycle& word) {
  if (!within_kernel_bound(word)) {
    return interval_for_cycle_reference(word);
  }
  End lo{{-2, 1}, false};
  End hi{{2, 1}, false};
  const std::size_t n = word.length();
  for (std::size_t i = 0; i < n; ++i) {
    const i128 prev = word[i];
    const i128 mid = word[i + 1];
    const i128 next = word[i + 2];
    if (mid == 0) {
      if (next != -prev) {
        return std::nullopt;
      }
      continue;
    }
    if (mid > 0) {
      tighten_lower(lo, {-prev - next, mid}, true);
      tighten_upper(hi, {1 - prev - next, mid}, false);
    } else {
      tighten_upper(hi, {prev + next, -mid}, true);
      tighten_lower(lo, {prev + next - 1, -mid}, false);
    }
  }
  return Interval::make(to_rational(lo.value), lo.closed, to_rational(hi.value), hi.closed);
}

std::optional<Interval> interval_for_cycle_reference(const Cycle& word) {
  const auto constraints = constraints_for_cycle(word);
  if (!constraints) {
    return std::nullopt;
  }
  std::optional<Interval> acc = Interval::open(-2, 2);
  for (const auto& c : *constraints) {
    switch (c.sense) {
      case Sense::ge:
        acc = clip_above(*acc, c.bound, true);
        break;
      case Sense::gt:
        acc = clip_above(*acc, c.bound, false);
        break;
      case Sense::le:
        acc = clip_below(*acc, c.bound, true);
        break;
      case Sense::lt:
        acc = clip_below(*acc, c.bound, false);
        break;
    }
    if (!acc) {
      return std::nullopt;
    }
  }
  return acc;
}

bool realizes(const Cycle& word, const Rational& lambda) {
  const std::size_t n = word.length();
  const auto pq = lambda.to_int64_pair();
  if (pq && within_kernel_bound(word)) {
    // q·(next + prev) + p·mid in [0, q)
    const i128 p = pq->first;
    const i128 q = pq->second;
    for (std::size_t i = 0; i < n; ++i) {
      const i128 v = q * (static_cast<i128>(word[i + 2]) + word[i]) + p * word[i + 1];
      if (v < 0 || v >= q) {
        return false;
      }
    }
    return true;
  }
  for (std::size_t i = 0; i < n; ++i) {
    const Rational v = Rational(word[i + 2]) + lambda * Rational(word[i + 1]) + Rational(word[i]);
    if (v < Rational(0) || v >= Rational(1)) {
      return false;
    }
  }
  return true;
}

}  // namespace drot
