#include "drot/constraints.hpp"
#include "drot/dynamics.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

using drot::Cycle;
using drot::Interval;
using drot::ParamSpec;
using drot::Rational;

namespace {

// Folds every step inequality into running bounds, starting from ]-2,2[.
std::optional<Interval> oracle_interval(const Cycle& c) {
  Rational lo(-2), hi(2);
  bool lo_closed = false, hi_closed = false;
  const std::size_t n = c.length();
  for (std::size_t i = 0; i < n; ++i) {
    const Rational prev(c[i]), mid(c[i + 1]), next(c[i + 2]);
    if (mid == Rational(0)) {
      if (next != -prev) return std::nullopt;
      continue;
    }
    // 0 <= next + x mid + prev < 1
    Rational a = -(next + prev) / mid;
    Rational b = (Rational(1) - next - prev) / mid;
    bool a_closed = true, b_closed = false;
    if (mid < Rational(0)) {
      std::swap(a, b);
      std::swap(a_closed, b_closed);
    }
    if (a > lo || (a == lo && !a_closed)) {
      lo = a;
      lo_closed = a_closed;
    }
    if (b < hi || (b == hi && !b_closed)) {
      hi = b;
      hi_closed = b_closed;
    }
  }
  return Interval::make(lo, lo_closed, hi, hi_closed);
}

Rational epsilon() { return Rational(1, 1'000'000); }

}  // namespace

TEST(Constraints, Examples) {
  EXPECT_TRUE(constraints_for_cycle(Cycle::parse("0"))->empty());
  EXPECT_FALSE(constraints_for_cycle(Cycle::parse("0,0,1")).has_value());
  EXPECT_EQ(constraints_for_cycle(Cycle::parse("-1,1,2,1,-1"))->size(), 10u);

  EXPECT_EQ(*interval_for_cycle(Cycle::parse("-1,1,2,1,-1")), Interval::parse("(-1,-1/2)"));
  EXPECT_EQ(*interval_for_cycle(Cycle::parse("-2,-2,1,3,1")), Interval::parse("[-2/3,-1/2]"));
  EXPECT_EQ(*interval_for_cycle(Cycle::parse("0")), Interval::parse("(-2,2)"));
  EXPECT_FALSE(interval_for_cycle(Cycle::parse("0,0,1")).has_value());

  const Cycle hex = Cycle::parse("0,1,2,2,1,0,-1,-1");
  ASSERT_EQ(*oracle_interval(hex), Interval::parse("[-3/2,-1)"));
  EXPECT_EQ(*interval_for_cycle(hex), Interval::parse("[-3/2,-1)"));
}

TEST(Constraints, SingletonNeedsEveryConstraintToAdmitThePoint) {
  const auto r = detect_cycle(ParamSpec::exact(Rational(8, 5)), {-1, -1});
  EXPECT_EQ(*interval_for_cycle(*r.cycle), Interval::singleton(Rational(8, 5)));
}

TEST(Constraints, ReferenceRouteHandlesHugeEntries) {
  const std::int64_t big = std::int64_t{1} << 61;
  const Cycle c(std::vector<std::int64_t>{big, -big});
  EXPECT_EQ(interval_for_cycle(c), interval_for_cycle_reference(c));
  EXPECT_EQ(interval_for_cycle(c), oracle_interval(c));
}

TEST(ConstraintsProperty, FastRouteMatchesReferenceAndOracle) {
  drot::testing::Gen gen(0x5eed0301);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Cycle c(gen.word(8, 3));
    const auto fast = interval_for_cycle(c);
    ASSERT_EQ(fast, interval_for_cycle_reference(c)) << c.to_string();
    ASSERT_EQ(fast, oracle_interval(c)) << c.to_string();
  }
}

TEST(ConstraintsProperty, SoundnessCompletenessAndReversal) {
  drot::testing::Gen gen(0x5eed0302);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Rational lambda = gen.lambda(30);
    const auto orbit = detect_cycle(ParamSpec::exact(lambda), gen.point(4), 1'000'000);
    ASSERT_EQ(orbit.outcome, drot::OrbitOutcome::cycle);
    const Cycle& w = *orbit.cycle;
    const auto set = interval_for_cycle(w);
    ASSERT_TRUE(set && set->contains(lambda)) << w.to_string() << " at " << lambda;
    ASSERT_EQ(interval_for_cycle(w.reversed()), set);

    const drot::LatticePoint start{w[0], w[1]};
    // Interior rationals reproduce the word exactly.
    for (int j = 1; j <= 3; ++j) {
      const Rational inner = set->is_singleton() ? set->lo() : set->lo() + (set->hi() - set->lo()) * Rational(j, 4);
      const auto again = detect_cycle(ParamSpec::exact(inner), start, 1'000'000);
      ASSERT_TRUE(again.cycle && again.cycle->same_word(w)) << w.to_string() << " at " << inner;
    }
    // Just beyond a closed end the word changes.
    auto outside = [&](const Rational& x) {
      if (x <= Rational(-2) || x >= Rational(2)) return;
      const auto other = detect_cycle(ParamSpec::exact(x), start, 1'000'000);
      ASSERT_FALSE(other.cycle && other.cycle->same_word(w)) << w.to_string() << " at " << x;
    };
    if (set->lo_closed()) outside(set->lo() - epsilon());
    if (set->hi_closed()) outside(set->hi() + epsilon());
  }
}

TEST(ConstraintsProperty, RealizesAgreesWithTheInterval) {
  drot::testing::Gen gen(0x5eed0303);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Cycle c(gen.word(6, 3));
    const Rational x = gen.lambda(24);
    const auto set = interval_for_cycle(c);
    ASSERT_EQ(drot::realizes(c, x), set && set->contains(x)) << c.to_string() << " at " << x;
  }
}
