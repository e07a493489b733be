#pragma once

#include "drot/cycle.hpp"
#include "drot/interval.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace drot {

/// n(n+1)/2
std::int64_t triangular(std::int64_t n);

/// Classification of an initial point that fixes which triangular cycles
/// contain it near λ = -2. `K` is present exactly when d > 0.
struct Label {
  std::int64_t s = 0;
  std::int64_t d = 0;
  std::optional<std::int64_t> K;

  friend bool operator==(const Label&, const Label&) = default;
};

/// Initial points are limited to |a| <= kMaxInitial so that every derived
/// quantity (triangular numbers of d, s + k d, ...) fits in int64.
inline constexpr std::int64_t kMaxInitial = std::int64_t{1} << 28;

/// Throws std::out_of_range when |a0| or |a1| exceeds kMaxInitial.
Label label_of(std::int64_t a0, std::int64_t a1);

namespace detail {
/// Both negative: t = |a0 - a1|, m = max(a0, a1) < 0. Least r >= 0 with
/// m + r t + T_r >= 0, by linear scan.
std::int64_t descent_index_scan(std::int64_t m, std::int64_t t);
/// Same index from the quadratic formula, evaluated with an exact integer
/// square root.
std::int64_t descent_index_closed_form(std::int64_t m, std::int64_t t);
std::int64_t isqrt(std::int64_t n);
}  // namespace detail

/// The word A B rev(B) rev(A) C rev(C) with A = (s, s+d, ..., s+kd),
/// B_j = s + kd + T_d - T_{d-j}, C_j = s - (T_d - T_{d-j}), j = 1..d.
/// Requires 0 <= s < d and k >= 1; throws std::invalid_argument otherwise.
Cycle triangular_cycle(std::int64_t s, std::int64_t d, std::int64_t k);

/// [-2 + 1/(s+(k+1)d), -2 + 1/(s+kd)[. Requires k d >= T_d - s.
Interval z_interval(std::int64_t s, std::int64_t d, std::int64_t k);

enum class TailKind {
  whole,       // (0, 0): the zero cycle on all of ]-2,2[
  constant,    // d = 0, s > 0: the cycle (s) on ]-2, -2+1/s[
  triangular,  // d > 0: triangular cycles on Z_k, k >= K
};

std::string_view to_string(TailKind kind);

struct TailPiece {
  std::int64_t k;
  Interval interval;
  Cycle cycle;
};

/// Closed-form description of the partition near λ = -2. Pieces are built
/// on demand; the family is infinite for d > 0.
class TailDescription {
 public:
  TailDescription(std::int64_t a0, std::int64_t a1);

  const Label& label() const { return label_; }
  TailKind kind() const;
  const Interval& interval() const { return interval_; }

  /// The single cycle on the tail when d = 0.
  std::optional<Cycle> constant_cycle() const;

  /// Least k >= K whose triangular cycle contains (a0, a1) as a cyclically
  /// adjacent pair; for d = 0 this is 0. Exceeds K only when both entries
  /// are non-negative and min(a0, a1) > s + K d.
  std::int64_t first_index() const { return first_index_; }

  /// (Z_k, C_{s,d,k}) for k >= first_index(). Only valid for the triangular kind.
  TailPiece piece(std::int64_t k) const;
  std::vector<TailPiece> first_pieces(std::size_t count) const;

  /// Left end of the body, -2 + 1/(s + K d) (or -2 + 1/s); nullopt for (0,0).
  std::optional<Rational> body_start() const;

  /// [-2 + 1/(s + k d), -2 + 1/(s + K d)[ with k = first_index(), when
  /// k > K: the stretch between the tail and the body that the triangular
  /// family does not describe for this point.
  std::optional<Interval> bridge() const;

 private:
  Label label_;
  std::int64_t first_index_;
  Interval interval_;
};

/// Least k >= K with (a0, a1) adjacent in C_{s,d,k}, found by building the
/// cycles. Reference for TailDescription::first_index().
std::int64_t first_index_scan(std::int64_t a0, std::int64_t a1);

TailDescription tail_of(std::int64_t a0, std::int64_t a1);

}  // namespace drot
