#include "drot/constraints.hpp"
#include "drot/dynamics.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

#include <limits>
#include <stdexcept>

using drot::LatticePoint;
using drot::ParamSpec;
using drot::Rational;

namespace {

// The unique z with 0 <= z + lambda y + x < 1, found by walking from a
// floor estimate and testing the inequality in exact arithmetic.
std::int64_t oracle_next(const Rational& lambda, std::int64_t x, std::int64_t y) {
  const Rational base = lambda * Rational(y) + Rational(x);
  auto ok = [&](std::int64_t z) {
    const Rational v = Rational(z) + base;
    return v >= Rational(0) && v < Rational(1);
  };
  auto z = static_cast<std::int64_t>((-base).floor()) - 2;
  while (!ok(z)) ++z;
  return z;
}

// One-sided limit: the exact step at lambda shifted by eps toward the
// side, with eps far below every threshold the state can resolve.
std::int64_t oracle_one_sided(const Rational& lambda, bool from_above, std::int64_t x, std::int64_t y) {
  const Rational eps(1, 1000 * (std::abs(y) + 1) * static_cast<std::int64_t>(lambda.denominator()));
  return oracle_next(from_above ? lambda + eps : lambda - eps, x, y);
}

LatticePoint G(LatticePoint p) { return {p.y, -p.x - 2 * p.y + (p.y > 0 ? 1 : 0)}; }
LatticePoint H(LatticePoint p) { return {p.y, -p.x + 2 * p.y + (p.y < 0 ? 1 : 0)}; }

const ParamSpec kG = ParamSpec::minus_zero(2);
const ParamSpec kH = ParamSpec::plus_zero(-2);

}  // namespace

TEST(Step, Examples) {
  EXPECT_EQ(step(ParamSpec::exact(0), {5, 7}), (LatticePoint{7, -5}));
  EXPECT_EQ(oracle_next(Rational(1, 2), 3, 2), -4);
  EXPECT_EQ(step(ParamSpec::exact(Rational(1, 2)), {3, 2}), (LatticePoint{2, -4}));
  EXPECT_EQ(G({0, -1}), (LatticePoint{-1, 2}));
  EXPECT_EQ(step(kG, {0, -1}), (LatticePoint{-1, 2}));
  for (std::int64_t m = 0; m <= 20; ++m) {
    EXPECT_EQ(step(kH, {m, m}), (LatticePoint{m, m}));
  }
}

TEST(Step, InverseExamples) {
  EXPECT_EQ(step_inverse(ParamSpec::exact(0), {7, -5}), (LatticePoint{5, 7}));
  EXPECT_EQ(step_inverse(kG, {-1, 2}), (LatticePoint{0, -1}));
  EXPECT_EQ(step_inverse(ParamSpec::exact(Rational(1, 2)), {2, -4}), (LatticePoint{3, 2}));
}

TEST(ParamSpec, RangesPerSide) {
  EXPECT_THROW(ParamSpec::exact(2), std::invalid_argument);
  EXPECT_THROW(ParamSpec::exact(-2), std::invalid_argument);
  EXPECT_NO_THROW(ParamSpec::plus_zero(-2));
  EXPECT_THROW(ParamSpec::plus_zero(2), std::invalid_argument);
  EXPECT_NO_THROW(ParamSpec::minus_zero(2));
  EXPECT_THROW(ParamSpec::minus_zero(-2), std::invalid_argument);
  EXPECT_EQ(drot::parse_side("plus"), drot::Side::plus_zero);
  EXPECT_THROW(drot::parse_side("sideways"), std::invalid_argument);
}

TEST(Step, OverflowIsReported) {
  const auto big = std::numeric_limits<std::int64_t>::max() / 2;
  EXPECT_THROW(step(ParamSpec::exact(Rational(3, 2)), {-big, -big}), std::overflow_error);
}

TEST(DetectCycle, Examples) {
  const auto r = detect_cycle(ParamSpec::exact(Rational(8, 5)), {-1, -1});
  ASSERT_EQ(r.outcome, drot::OrbitOutcome::cycle);
  EXPECT_EQ(r.cycle->length(), 38u);
  EXPECT_EQ(r.steps_used, 38u);

  // Hand iteration of G from (1,0).
  std::vector<std::int64_t> word;
  LatticePoint p{1, 0};
  do {
    word.push_back(p.x);
    p = G(p);
  } while (p != LatticePoint{1, 0});
  EXPECT_EQ(word, (std::vector<std::int64_t>{1, 0, -1, 2, -2, 2, -1, 0, 1, -1}));
  const auto g = detect_cycle(kG, {1, 0});
  ASSERT_EQ(g.outcome, drot::OrbitOutcome::cycle);
  EXPECT_TRUE(g.cycle->same_word(drot::Cycle(word)));
  EXPECT_TRUE(g.cycle->is_cyclic_palindrome());

  EXPECT_EQ(detect_cycle(kH, {0, 1}).outcome, drot::OrbitOutcome::diverged);
  EXPECT_EQ(detect_cycle(ParamSpec::exact(Rational(1, 2)), {1, 1}, 2).outcome, drot::OrbitOutcome::cap_exceeded);
  EXPECT_THROW(detect_cycle(ParamSpec::exact(0), {1, 1}, 0), std::invalid_argument);
}

TEST(DetectCycle, WordStartsAtTheInitialPair) {
  const auto r = detect_cycle(ParamSpec::exact(Rational(-3, 4)), {-1, 1});
  ASSERT_TRUE(r.cycle);
  EXPECT_EQ((*r.cycle)[0], -1);
  EXPECT_EQ((*r.cycle)[1], 1);
}

TEST(DynamicsProperty, StepSoundness) {
  drot::testing::Gen gen(0x5eed0201);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Rational lambda = gen.lambda(200);
    const LatticePoint p = gen.point(1000);
    const LatticePoint n = step(ParamSpec::exact(lambda), p);
    ASSERT_EQ(n.x, p.y);
    const Rational v = Rational(n.y) + lambda * Rational(p.y) + Rational(p.x);
    ASSERT_TRUE(v >= Rational(0) && v < Rational(1)) << lambda << " at (" << p.x << "," << p.y << ")";
    ASSERT_EQ(n.y, oracle_next(lambda, p.x, p.y));
  }
}

TEST(DynamicsProperty, WideOperandsMatchOracle) {
  // Values beyond 2^31 exercise the wide and arbitrary-precision paths.
  drot::testing::Gen gen(0x5eed0202);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const std::int64_t q = gen.integer(1, std::int64_t{1} << 40);
    const Rational lambda(gen.integer(-2 * q + 1, 2 * q - 1), q);
    const LatticePoint p = gen.point(std::int64_t{1} << 45);
    ASSERT_EQ(step(ParamSpec::exact(lambda), p).y, oracle_next(lambda, p.x, p.y));
  }
}

TEST(DynamicsProperty, Bijectivity) {
  drot::testing::Gen gen(0x5eed0203);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const int side = static_cast<int>(gen.integer(0, 2));
    const Rational v = side == 0 ? gen.lambda() : gen.rational(-2, 2, 30);
    if ((side == 1 && v == Rational(2)) || (side == 2 && v == Rational(-2))) continue;
    const ParamSpec spec = side == 0 ? ParamSpec::exact(v) : side == 1 ? ParamSpec::plus_zero(v) : ParamSpec::minus_zero(v);
    const LatticePoint p = gen.point(500);
    ASSERT_EQ(step_inverse(spec, step(spec, p)), p);
    ASSERT_EQ(step(spec, step_inverse(spec, p)), p);
  }
}

TEST(DynamicsProperty, OneSidedLimitsMatchPerturbedExactSteps) {
  drot::testing::Gen gen(0x5eed0204);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Rational v = gen.rational(-2, 2, 12);
    const LatticePoint p = gen.point(200);
    if (v < Rational(2)) {
      ASSERT_EQ(step(ParamSpec::plus_zero(v), p).y, oracle_one_sided(v, true, p.x, p.y)) << v;
    }
    if (v > Rational(-2)) {
      ASSERT_EQ(step(ParamSpec::minus_zero(v), p).y, oracle_one_sided(v, false, p.x, p.y)) << v;
    }
  }
}

TEST(DynamicsProperty, GAndHSpecializations) {
  drot::testing::Gen gen(0x5eed0205);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const LatticePoint p = gen.point(10'000);
    ASSERT_EQ(step(kG, p), G(p));
    ASSERT_EQ(step(kH, p), H(p));
    const LatticePoint n = H(p);
    const std::int64_t k0 = p.x - p.y;
    const std::int64_t k1 = n.x - n.y;
    ASSERT_LE(k1, k0);
    if (p.y < 0) {
      ASSERT_LT(k1, k0);
    }
  }
}

TEST(DynamicsProperty, ZeroRotationPeriodDividesFour) {
  drot::testing::Gen gen(0x5eed0206);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const auto r = detect_cycle(ParamSpec::exact(0), gen.point(1'000'000));
    ASSERT_EQ(r.outcome, drot::OrbitOutcome::cycle);
    ASSERT_EQ(4 % r.cycle->length(), 0u);
  }
}

TEST(DynamicsProperty, DetectedCyclesReplay) {
  drot::testing::Gen gen(0x5eed0207);
  for (int i = 0; i < drot::testing::kCases; ++i) {
    const Rational lambda = gen.lambda(40);
    const auto r = detect_cycle(ParamSpec::exact(lambda), gen.point(6), 1'000'000);
    ASSERT_EQ(r.outcome, drot::OrbitOutcome::cycle) << lambda;
    ASSERT_TRUE(drot::realizes(*r.cycle, lambda));
    ASSERT_EQ(r.steps_used, r.cycle->length());
  }
}
