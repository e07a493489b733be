#include "drot/interval.hpp"
#include "drot/interval_set.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <stdexcept>

using drot::Interval;
using drot::IntervalSet;
using drot::Rational;

namespace {

Interval iv(const char* text) { return Interval::parse(text); }

IntervalSet set_of(std::initializer_list<const char*> parts) {
  std::vector<Interval> v;
  for (const char* p : parts) v.push_back(iv(p));
  return IntervalSet::from_union(v);
}

std::vector<Rational> endpoints_of(const IntervalSet& s) {
  std::vector<Rational> out;
  for (const auto& p : s.parts()) {
    out.push_back(p.lo());
    out.push_back(p.hi());
  }
  return out;
}

}  // namespace

TEST(Interval, TextRoundTrip) {
  for (const char* text : {"[-1,0]", "[-2,2)", "(-1,-1/2)", "(3/2,2]", "[8/5]", "[-5/3,-3/2)"}) {
    EXPECT_EQ(iv(text).to_string(), text);
  }
  for (const char* bad : {"", "[1,0]", "(0,0)", "[0,0)", "[0,0]", "[1", "1,2", "[a,b]", "[1,2,3]", "(1]"}) {
    EXPECT_THROW(iv(bad), std::invalid_argument) << bad;
  }
}

TEST(Interval, EmptyIsNeverConstructed) {
  EXPECT_FALSE(Interval::make(1, true, 1, false).has_value());
  EXPECT_FALSE(Interval::make(2, true, 1, true).has_value());
  EXPECT_TRUE(Interval::make(1, true, 1, true).has_value());
  EXPECT_THROW(Interval(Rational(1), false, Rational(1), false), std::invalid_argument);
}

TEST(Interval, IntersectExamples) {
  EXPECT_EQ(*intersect(iv("[-2,2)"), iv("[-1,0]")), iv("[-1,0]"));
  EXPECT_FALSE(intersect(iv("(-1,-1/2)"), iv("[-1/2,0)")).has_value());
  EXPECT_EQ(*intersect(iv("[-3/2,-1)"), iv("(-4/3,2)")), iv("(-4/3,-1)"));
  EXPECT_EQ(*intersect(iv("[0,1]"), iv("[1,2]")), Interval::singleton(1));
}

TEST(IntervalSet, SubtractExamples) {
  EXPECT_EQ(subtract(set_of({"[-1,2)"}), iv("(-1,-1/2)")), set_of({"[-1]", "[-1/2,2)"}));
  EXPECT_EQ(subtract(set_of({"[-1,2)"}), iv("[-1]")), set_of({"(-1,2)"}));
  EXPECT_TRUE(subtract(set_of({"[0,1]"}), iv("[0,1]")).empty());
  EXPECT_EQ(subtract(set_of({"[0,1]", "[2,3]"}), iv("(1/2,5/2)")), set_of({"[0,1/2]", "[5/2,3]"}));
}

TEST(IntervalSet, SamplePointExamples) {
  const auto split = IntervalSet::from_parts({iv("[-1]"), iv("(-1,0)")});
  EXPECT_EQ(sample_points(split), (std::vector<Rational>{-1, Rational(-1, 2)}));
  EXPECT_EQ(sample_points(set_of({"[-1]", "(-1,0)"})), (std::vector<Rational>{Rational(-1, 2)}));
  EXPECT_THROW(IntervalSet::from_parts({iv("[0,1]"), iv("[1,2]")}), std::invalid_argument);
  EXPECT_THROW(IntervalSet::from_parts({iv("[1,2]"), iv("[0,1/2]")}), std::invalid_argument);
  EXPECT_EQ(sample_points(set_of({"(3/2,2)"})), (std::vector<Rational>{Rational(7, 4)}));
  EXPECT_EQ(sample_points(set_of({"[-3/2,-1)"})), (std::vector<Rational>{Rational(-5, 4)}));
}

TEST(IntervalSet, FromUnionMergesTouchingParts) {
  EXPECT_EQ(set_of({"[0,1)", "[1,2]"}), set_of({"[0,2]"}));
  EXPECT_EQ(set_of({"[0,1)", "(1,2]"}).size(), 2u);
  EXPECT_EQ(set_of({"[0,1]", "(1,2]", "[1/2]"}), set_of({"[0,2]"}));
}

TEST(IntervalProperty, IntersectionIsContainedInBoth) {
  drot::testing::Gen gen(0x5eed0002);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Interval a = gen.interval();
    const Interval b = gen.interval();
    const auto c = intersect(a, b);
    for (const Rational& x : drot::testing::probes_for({a.lo(), a.hi(), b.lo(), b.hi()})) {
      const bool in_both = a.contains(x) && b.contains(x);
      ASSERT_EQ(c.has_value() && c->contains(x), in_both) << a << " & " << b << " at " << x;
    }
  }
}

TEST(IntervalProperty, ClipMatchesMembership) {
  drot::testing::Gen gen(0x5eed0003);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Interval a = gen.interval();
    const Rational bound = gen.rational(-3, 3, 12);
    const bool inclusive = gen.coin();
    const auto below = clip_below(a, bound, inclusive);
    const auto above = clip_above(a, bound, inclusive);
    for (const Rational& x : drot::testing::probes_for({a.lo(), a.hi(), bound})) {
      ASSERT_EQ(below && below->contains(x), a.contains(x) && (x < bound || (inclusive && x == bound)));
      ASSERT_EQ(above && above->contains(x), a.contains(x) && (x > bound || (inclusive && x == bound)));
    }
  }
}

TEST(IntervalSetProperty, SubtractThenUnionRestores) {
  drot::testing::Gen gen(0x5eed0004);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const IntervalSet x = gen.interval_set();
    const Interval y = gen.interval();
    const IntervalSet diff = subtract(x, y);
    ASSERT_TRUE(diff.well_formed()) << to_string(diff);

    std::vector<Interval> common;
    for (const auto& p : x.parts()) {
      if (auto c = intersect(p, y)) common.push_back(*c);
    }
    const IntervalSet restored = unite(diff, IntervalSet::from_union(common));
    ASSERT_TRUE(restored.well_formed());

    auto points = endpoints_of(x);
    points.push_back(y.lo());
    points.push_back(y.hi());
    for (const Rational& p : drot::testing::probes_for(points)) {
      ASSERT_EQ(diff.contains(p), x.contains(p) && !y.contains(p)) << to_string(x) << " \\ " << y << " at " << p;
      ASSERT_EQ(restored.contains(p), x.contains(p)) << to_string(x) << " at " << p;
    }
    ASSERT_EQ(restored, x);
  }
}

TEST(IntervalSetProperty, SamplesLieInTheirParts) {
  drot::testing::Gen gen(0x5eed0005);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const IntervalSet x = gen.interval_set();
    ASSERT_TRUE(x.well_formed());
    const auto samples = sample_points(x);
    ASSERT_EQ(samples.size(), x.size());
    for (std::size_t k = 0; k < samples.size(); ++k) {
      ASSERT_TRUE(x.parts()[k].contains(samples[k]));
    }
  }
}
