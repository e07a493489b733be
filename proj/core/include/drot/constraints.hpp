#pragma once

#include "drot/cycle.hpp"
#include "drot/interval.hpp"
#include "drot/rational.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace drot {

enum class Sense { ge, gt, le, lt };

std::string_view to_string(Sense sense);

/// The half-line {λ : λ ⋛ bound}.
struct HalfLineConstraint {
  Rational bound;
  Sense sense;

  bool admits(const Rational& lambda) const;

  friend bool operator==(const HalfLineConstraint&, const HalfLineConstraint&) = default;
};

/// The 2n half-lines cut out by 0 <= b_{i+2} + λ b_{i+1} + b_i < 1,
/// i = 0..n-1 (cyclic). Terms with b_{i+1} = 0 contribute nothing but
/// require b_{i+2} = -b_i; std::nullopt means no λ can realize the word.
std::optional<std::vector<HalfLineConstraint>> constraints_for_cycle(const Cycle& word);

/// Exact set of λ in ]-2,2[ for which `word` is a periodic sequence of the
/// rotation, or std::nullopt when that set is empty.
std::optional<Interval> interval_for_cycle(const Cycle& word);

/// Same set computed by intersecting the half-lines of
/// constraints_for_cycle with Interval algebra. Slower; kept as the
/// reference route.
std::optional<Interval> interval_for_cycle_reference(const Cycle& word);

/// True when every inequality 0 <= b_{i+2} + λ b_{i+1} + b_i < 1 holds.
bool realizes(const Cycle& word, const Rational& lambda);

}  // namespace drot
