#pragma once

#include "drot/cycle.hpp"
#include "drot/rational.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <string_view>

namespace drot {

/// The state (a_n, a_{n+1}).
struct LatticePoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const LatticePoint&, const LatticePoint&) = default;
};

/// How the rotation parameter enters the step rule: exactly, or as the
/// one-sided limit from above (plus_zero) or below (minus_zero).
enum class Side { exact, plus_zero, minus_zero };

std::string_view to_string(Side side);
/// Accepts "exact", "plus", "minus" (and the long names). Throws std::invalid_argument.
Side parse_side(std::string_view text);

/// Validated rotation parameter. exact needs -2 < value < 2; plus_zero
/// needs -2 <= value < 2; minus_zero needs -2 < value <= 2.
class ParamSpec {
 public:
  /// Throws std::invalid_argument when value is outside the admissible range.
  ParamSpec(Side side, Rational value);

  static ParamSpec exact(Rational value) { return {Side::exact, std::move(value)}; }
  static ParamSpec plus_zero(Rational value) { return {Side::plus_zero, std::move(value)}; }
  static ParamSpec minus_zero(Rational value) { return {Side::minus_zero, std::move(value)}; }

  Side side() const { return side_; }
  const Rational& value() const { return value_; }

  /// λ = p/q with both parts in int64 (q > 0), when representable.
  const std::optional<std::pair<std::int64_t, std::int64_t>>& small() const { return small_; }

 private:
  Side side_;
  Rational value_;
  std::optional<std::pair<std::int64_t, std::int64_t>> small_;
};

/// (x, y) -> (y, z) with z the next term of the sequence. Throws
/// std::overflow_error if z does not fit in int64.
LatticePoint step(const ParamSpec& spec, LatticePoint p);

/// Inverse of step: (x, y) -> (w, x).
LatticePoint step_inverse(const ParamSpec& spec, LatticePoint p);

enum class OrbitOutcome { cycle, cap_exceeded, diverged };

std::string_view to_string(OrbitOutcome outcome);

struct OrbitResult {
  OrbitOutcome outcome = OrbitOutcome::cap_exceeded;
  std::optional<Cycle> cycle;
  std::uint64_t steps_used = 0;
  std::int64_t max_abs = 0;
};

inline constexpr std::uint64_t kDefaultStepCap = 10'000'000;

/// Iterates from `start` until the state returns to `start` (the map is a
/// bijection, so every bounded orbit is purely periodic) or `cap` steps
/// elapse. The only divergence certificate is the monotone invariant of
/// the λ = -2+0 map: once x - y < 0 the sequence is strictly increasing.
OrbitResult detect_cycle(const ParamSpec& spec, LatticePoint start, std::uint64_t cap = kDefaultStepCap);

}  // namespace drot
