#include "drot/tail.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace drot {

std::int64_t triangular(std::int64_t n) {
  if (n < 0) {
    throw std::invalid_argument("triangular: negative index");
  }
  return n * (n + 1) / 2;
}

namespace detail {

std::int64_t descent_index_scan(std::int64_t m, std::int64_t t) {
  std::int64_t r = 0;
  while (m + r * t + triangular(r) < 0) {
    ++r;
  }
  return r;
}

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) {
    throw std::domain_error("isqrt of a negative number");
  }
  if (n < 2) {
    return n;
  }
  // Newton iteration from above converges to floor(sqrt(n)).
  std::int64_t x = n;
  std::int64_t y = (x + 1) / 2;
  while (y < x) {
    x = y;
    y = (x + n / x) / 2;
  }
  return x;
}

std::int64_t descent_index_closed_form(std::int64_t m, std::int64_t t) {
  // least integer l >= (-(2t+1) + sqrt((2t+1)^2 - 8m)) / 2
  const std::int64_t b = 2 * t + 1;
  const std::int64_t disc = b * b - 8 * m;
  const std::int64_t root = isqrt(disc);
  const std::int64_t lead = root - b;  // >= 0 because m < 0
  if (root * root == disc) {
    return (lead + 1) / 2;
  }
  return lead / 2 + 1;
}

}  // namespace detail

Label label_of(std::int64_t a0, std::int64_t a1) {
  if (a0 > kMaxInitial || a0 < -kMaxInitial || a1 > kMaxInitial || a1 < -kMaxInitial) {
    throw std::out_of_range("initial point outside the supported range |a| <= 2^28");
  }
  Label label;
  if (0 <= a0 && a0 < a1) {
    label.d = a1 - a0;
    label.s = a0 % label.d;
  } else if (0 <= a1 && a1 < a0) {
    label.d = a0 - a1;
    label.s = a1 % label.d;
  } else if (a0 == a1 && a0 >= 0) {
    label.s = a0;
    label.d = 0;
  } else if (a0 < 0 && 0 <= a1) {
    label.s = a1;
    label.d = a1 - a0;
  } else if (a1 < 0 && 0 <= a0) {
    label.s = a0;
    label.d = a0 - a1;
  } else {
    const std::int64_t t = a0 > a1 ? a0 - a1 : a1 - a0;
    const std::int64_t m = std::max(a0, a1);
    const std::int64_t r = detail::descent_index_scan(m, t);
    label.s = m + r * t + triangular(r);
    label.d = t + r;
  }
  if (label.d > 0) {
    // ceil((T_d - s) / d); the numerator is positive since s < d <= T_d
    label.K = (triangular(label.d) - label.s + label.d - 1) / label.d;
  }
  return label;
}

Cycle triangular_cycle(std::int64_t s, std::int64_t d, std::int64_t k) {
  if (d <= 0 || s < 0 || s >= d || k < 1) {
    throw std::invalid_argument("triangular_cycle requires 0 <= s < d and k >= 1");
  }
  const std::int64_t top = s + k * d;
  const std::int64_t td = triangular(d);

  std::vector<std::int64_t> a, b, c;
  for (std::int64_t i = 0; i <= k; ++i) {
    a.push_back(s + i * d);
  }
  for (std::int64_t j = 1; j <= d; ++j) {
    b.push_back(top + (td - triangular(d - j)));
    c.push_back(s - (td - triangular(d - j)));
  }

  std::vector<std::int64_t> word;
  word.reserve(2 * a.size() + 2 * b.size() + 2 * c.size());
  word.insert(word.end(), a.begin(), a.end());
  word.insert(word.end(), b.begin(), b.end());
  word.insert(word.end(), b.rbegin(), b.rend());
  word.insert(word.end(), a.rbegin(), a.rend());
  word.insert(word.end(), c.begin(), c.end());
  word.insert(word.end(), c.rbegin(), c.rend());
  return Cycle(std::move(word));
}

Interval z_interval(std::int64_t s, std::int64_t d, std::int64_t k) {
  if (d <= 0 || s < 0 || s >= d || k < 1 || k * d < triangular(d) - s) {
    throw std::invalid_argument("z_interval requires 0 <= s < d, k >= 1 and k d >= T_d - s (s=" +
                                std::to_string(s) + ", d=" + std::to_string(d) + ", k=" + std::to_string(k) + ")");
  }
  return Interval::closed_open(Rational(-2) + Rational(1, s + (k + 1) * d), Rational(-2) + Rational(1, s + k * d));
}

std::string_view to_string(TailKind kind) {
  switch (kind) {
    case TailKind::whole:
      return "whole";
    case TailKind::constant:
      return "constant";
    case TailKind::triangular:
      return "triangular";
  }
  return "?";
}

namespace {

// In the ramp A = (s, s+d, ..., s+kd) the pair (s+id, s+(i+1)d) or its
// reverse is present once k >= i; every other case sits at a seam of the
// word that exists for all k.
std::int64_t first_index_of(std::int64_t a0, std::int64_t a1, const Label& label) {
  if (label.d == 0) {
    return 0;
  }
  if (a0 >= 0 && a1 >= 0) {
    return std::max(*label.K, (std::min(a0, a1) - label.s) / label.d);
  }
  return *label.K;
}

Interval tail_interval(const Label& label, std::int64_t k) {
  if (label.d > 0) {
    return Interval::open(-2, Rational(-2) + Rational(1, label.s + k * label.d));
  }
  if (label.s > 0) {
    return Interval::open(-2, Rational(-2) + Rational(1, label.s));
  }
  return Interval::open(-2, 2);
}

}  // namespace

TailDescription::TailDescription(std::int64_t a0, std::int64_t a1)
    : label_(label_of(a0, a1)),
      first_index_(first_index_of(a0, a1, label_)),
      interval_(tail_interval(label_, first_index_)) {}

TailKind TailDescription::kind() const {
  if (label_.d > 0) {
    return TailKind::triangular;
  }
  return label_.s > 0 ? TailKind::constant : TailKind::whole;
}

std::optional<Cycle> TailDescription::constant_cycle() const {
  if (label_.d > 0) {
    return std::nullopt;
  }
  return Cycle({label_.s});
}

TailPiece TailDescription::piece(std::int64_t k) const {
  if (label_.d == 0) {
    throw std::logic_error("constant tails have no triangular pieces");
  }
  if (k < first_index_) {
    throw std::invalid_argument("tail piece index below the first occurrence index");
  }
  return {k, z_interval(label_.s, label_.d, k), triangular_cycle(label_.s, label_.d, k)};
}

std::vector<TailPiece> TailDescription::first_pieces(std::size_t count) const {
  std::vector<TailPiece> out;
  if (label_.d == 0) {
    return out;
  }
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(piece(first_index_ + static_cast<std::int64_t>(i)));
  }
  return out;
}

std::optional<Rational> TailDescription::body_start() const {
  switch (kind()) {
    case TailKind::whole:
      return std::nullopt;
    case TailKind::constant:
      return interval_.hi();
    case TailKind::triangular:
      break;
  }
  return Rational(-2) + Rational(1, label_.s + *label_.K * label_.d);
}

std::optional<Interval> TailDescription::bridge() const {
  if (label_.d == 0 || first_index_ == *label_.K) {
    return std::nullopt;
  }
  return Interval::closed_open(interval_.hi(), *body_start());
}

std::int64_t first_index_scan(std::int64_t a0, std::int64_t a1) {
  const Label label = label_of(a0, a1);
  if (label.d == 0) {
    return 0;
  }
  std::int64_t k = *label.K;
  while (!triangular_cycle(label.s, label.d, k).contains_adjacent(a0, a1)) {
    ++k;
  }
  return k;
}

TailDescription tail_of(std::int64_t a0, std::int64_t a1) { return TailDescription(a0, a1); }

}  // namespace drot
