#include "drot/dynamics.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace drot {

namespace {

__extension__ typedef __int128 i128;

constexpr std::int64_t kNarrow = std::int64_t{1} << 31;

bool narrow(std::int64_t v) { return v > -kNarrow && v < kNarrow; }

// ceil(num / den) for den > 0
template <typename Int>
Int ceil_div(Int num, Int den) {
  Int q = num / den;
  if (num % den != 0 && num > 0) {
    ++q;
  }
  return q;
}

std::int64_t checked(i128 z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("orbit value exceeds the 64-bit lattice range");
  }
  return static_cast<std::int64_t>(z);
}

bool side_bump(Side side, std::int64_t middle, bool divisible) {
  switch (side) {
    case Side::exact:
      return false;
    case Side::plus_zero:
      return middle < 0 && divisible;
    case Side::minus_zero:
      return middle > 0 && divisible;
  }
  return false;
}

// The unique integer z with 0 <= z + λ·middle + other < 1, adjusted for the
// one-sided limit. The rule is symmetric in `other` and the result, which
// is what makes step_inverse a relabeling of step.
std::int64_t next_term(const ParamSpec& spec, std::int64_t other, std::int64_t middle) {
  if (const auto& pq = spec.small()) {
    const auto [p, q] = *pq;
    if (narrow(p) && narrow(q) && narrow(other) && narrow(middle)) {
      const std::int64_t z = ceil_div<std::int64_t>(-p * middle - q * other, q);
      return z + (side_bump(spec.side(), middle, middle % q == 0) ? 1 : 0);
    }
    const i128 num = -static_cast<i128>(p) * middle - static_cast<i128>(q) * other;
    i128 z = ceil_div<i128>(num, q);
    if (side_bump(spec.side(), middle, middle % q == 0)) {
      ++z;
    }
    return checked(z);
  }

  const BigInt p = spec.value().numerator();
  const BigInt q = spec.value().denominator();
  const BigInt num = -p * middle - q * BigInt(other);
  BigInt z = num / q;
  if (num > 0 && z * q != num) {
    ++z;
  }
  if (side_bump(spec.side(), middle, BigInt(middle) % q == 0)) {
    ++z;
  }
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min()) {
    throw std::overflow_error("orbit value exceeds the 64-bit lattice range");
  }
  return z.convert_to<std::int64_t>();
}

std::int64_t magnitude(std::int64_t v) {
  return v == std::numeric_limits<std::int64_t>::min() ? std::numeric_limits<std::int64_t>::max()
                                                       : (v < 0 ? -v : v);
}

}  // namespace

std::string_view to_string(Side side) {
  switch (side) {
    case Side::exact:
      return "exact";
    case Side::plus_zero:
      return "plus";
    case Side::minus_zero:
      return "minus";
  }
  return "?";
}

Side parse_side(std::string_view text) {
  if (text == "exact") return Side::exact;
  if (text == "plus" || text == "plus_zero") return Side::plus_zero;
  if (text == "minus" || text == "minus_zero") return Side::minus_zero;
  throw std::invalid_argument("unknown side '" + std::string(text) + "' (expected exact|plus|minus)");
}

ParamSpec::ParamSpec(Side side, Rational value) : side_(side), value_(std::move(value)) {
  const Rational two(2);
  const Rational minus_two(-2);
  bool ok = false;
  switch (side_) {
    case Side::exact:
      ok = minus_two < value_ && value_ < two;
      break;
    case Side::plus_zero:
      ok = minus_two <= value_ && value_ < two;
      break;
    case Side::minus_zero:
      ok = minus_two < value_ && value_ <= two;
      break;
  }
  if (!ok) {
    throw std::invalid_argument("rotation parameter " + value_.to_string() + " out of range for side " +
                                std::string(to_string(side_)));
  }
  small_ = value_.to_int64_pair();
}

LatticePoint step(const ParamSpec& spec, LatticePoint p) { return {p.y, next_term(spec, p.x, p.y)}; }

LatticePoint step_inverse(const ParamSpec& spec, LatticePoint p) { return {next_term(spec, p.y, p.x), p.x}; }

std::string_view to_string(OrbitOutcome outcome) {
  switch (outcome) {
    case OrbitOutcome::cycle:
      return "cycle";
    case OrbitOutcome::cap_exceeded:
      return "cap_exceeded";
    case OrbitOutcome::diverged:
      return "diverged";
  }
  return "?";
}

OrbitResult detect_cycle(const ParamSpec& spec, LatticePoint start, std::uint64_t cap) {
  if (cap == 0) {
    throw std::invalid_argument("detect_cycle: cap must be >= 1");
  }
  const bool h_map = spec.side() == Side::plus_zero && spec.value() == Rational(-2);

  OrbitResult result;
  result.max_abs = std::max(magnitude(start.x), magnitude(start.y));
  std::vector<std::int64_t> word;
  word.reserve(64);

  LatticePoint cur = start;
  for (std::uint64_t n = 0; n < cap; ++n) {
    if (h_map && cur.x < cur.y) {
      // x - y never increases under this map, so the sequence stays
      // strictly increasing from here on.
      result.outcome = OrbitOutcome::diverged;
      result.steps_used = n;
      return result;
    }
    word.push_back(cur.x);
    cur = step(spec, cur);
    result.max_abs = std::max(result.max_abs, magnitude(cur.y));
    if (cur == start) {
      result.outcome = OrbitOutcome::cycle;
      result.steps_used = n + 1;
      result.cycle.emplace(std::move(word));
      return result;
    }
  }
  result.outcome = OrbitOutcome::cap_exceeded;
  result.steps_used = cap;
  return result;
}

}  // namespace drot
