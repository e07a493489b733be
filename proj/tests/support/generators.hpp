#pragma once

#include "drot/cycle.hpp"
#include "drot/dynamics.hpp"
#include "drot/interval.hpp"
#include "drot/interval_set.hpp"
#include "drot/rational.hpp"

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

namespace drot::testing {

inline constexpr int kCases = 1000;

// Seeded value generators for property tests. Every suite owns its seed so
// a failing case can be replayed by index.
class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin() { return integer(0, 1) == 1; }

  // p/q with q in [1, max_den] and p/q in [lo, hi].
  Rational rational(std::int64_t lo, std::int64_t hi, std::int64_t max_den = 60) {
    const std::int64_t q = integer(1, max_den);
    return Rational(integer(lo * q, hi * q), q);
  }

  // Strictly inside ]-2,2[.
  Rational lambda(std::int64_t max_den = 60) {
    const std::int64_t q = integer(1, max_den);
    return Rational(integer(-2 * q + 1, 2 * q - 1), q);
  }

  LatticePoint point(std::int64_t bound) { return {integer(-bound, bound), integer(-bound, bound)}; }

  Interval interval(std::int64_t lo = -3, std::int64_t hi = 3, std::int64_t max_den = 12) {
    for (;;) {
      Rational a = rational(lo, hi, max_den);
      Rational b = rational(lo, hi, max_den);
      if (b < a) std::swap(a, b);
      if (a == b) return Interval::singleton(a);
      if (auto i = Interval::make(a, coin(), b, coin())) return *i;
    }
  }

  IntervalSet interval_set(int max_parts = 5) {
    std::vector<Interval> parts;
    const int n = static_cast<int>(integer(0, max_parts));
    for (int i = 0; i < n; ++i) parts.push_back(interval());
    return IntervalSet::from_union(parts);
  }

  std::vector<std::int64_t> word(std::size_t max_len, std::int64_t bound) {
    std::vector<std::int64_t> w(static_cast<std::size_t>(integer(1, static_cast<std::int64_t>(max_len))));
    for (auto& b : w) b = integer(-bound, bound);
    return w;
  }

 private:
  std::mt19937_64 rng_;
};

// Probe rationals for membership comparisons: every endpoint, midpoints
// between consecutive endpoints, and points just outside the extremes.
inline std::vector<Rational> probes_for(const std::vector<Rational>& endpoints) {
  std::vector<Rational> sorted = endpoints;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Rational> out = sorted;
  for (std::size_t i = 0; i + 1 < sorted.size(); ++i) out.push_back(midpoint(sorted[i], sorted[i + 1]));
  if (!sorted.empty()) {
    out.push_back(sorted.front() - Rational(1));
    out.push_back(sorted.back() + Rational(1));
  }
  return out;
}

}  // namespace drot::testing
