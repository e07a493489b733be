#include "drot/partition.hpp"
#include "drot/verify.hpp"

#include "support/generators.hpp"

#include <gtest/gtest.h>

using drot::Interval;
using drot::PartitionAtlas;
using drot::Rational;

namespace {

const Rational kEps(1, 1'000'000);

bool has(const drot::VerificationReport& r, const std::string& text) {
  return !r.passed && r.failure.find(text) != std::string::npos;
}

// Index of the first proper entry wide enough to shift an end by kEps.
std::size_t wide_entry(const PartitionAtlas& atlas) {
  for (std::size_t i = 0; i + 1 < atlas.body.size(); ++i) {
    const Interval& e = atlas.body[i].interval;
    if (e.hi() - e.lo() > Rational(1, 1000)) return i;
  }
  return 0;
}

}  // namespace

TEST(Verify, CleanAtlasesPass) {
  for (auto [a0, a1] : {std::pair{-1, -1}, std::pair{-2, -2}, std::pair{0, 0}, std::pair{2, 3}, std::pair{3, 3}}) {
    const auto report = verify_atlas(drot::compute_atlas(a0, a1));
    EXPECT_TRUE(report.passed) << a0 << "," << a1 << ": " << report.failure;
    EXPECT_GT(report.detections, 0u);
  }
}

TEST(Verify, PerturbedEndpointIsACoverageGap) {
  auto atlas = drot::compute_atlas(-1, -1);
  const std::size_t i = wide_entry(atlas);
  const Interval& e = atlas.body[i].interval;
  atlas.body[i].interval = Interval(e.lo(), e.lo_closed(), e.hi() - kEps, e.hi_closed());
  EXPECT_TRUE(has(verify_atlas(atlas), "coverage gap"));
}

TEST(Verify, StretchedEndpointIsAnOverlap) {
  auto atlas = drot::compute_atlas(-1, -1);
  const std::size_t i = wide_entry(atlas);
  const Interval& e = atlas.body[i].interval;
  atlas.body[i].interval = Interval(e.lo(), e.lo_closed(), e.hi() + kEps, e.hi_closed());
  EXPECT_TRUE(has(verify_atlas(atlas), "overlap"));
}

TEST(Verify, SwappedCyclesAreARedetectionMismatch) {
  auto atlas = drot::compute_atlas(-2, -2);
  std::swap(atlas.body[3].cycle, atlas.body[7].cycle);
  EXPECT_TRUE(has(verify_atlas(atlas), "re-detection mismatch"));
}

TEST(Verify, OtherFaults) {
  const auto clean = drot::compute_atlas(-1, 1);

  auto dropped = clean;
  dropped.body.erase(dropped.body.begin() + 2);
  EXPECT_TRUE(has(verify_atlas(dropped), "coverage gap"));

  auto empty = clean;
  empty.body.clear();
  EXPECT_TRUE(has(verify_atlas(empty), "coverage gap: empty body"));

  auto moved = clean;
  moved.a0 = 2;
  EXPECT_TRUE(has(verify_atlas(moved), "tail label"));

  auto range = clean;
  range.body_range = Interval::parse("[-3/2,2)");
  EXPECT_TRUE(has(verify_atlas(range), "body range"));

  auto bridged = drot::compute_atlas(2, 3);
  bridged.bridge.clear();
  EXPECT_TRUE(has(verify_atlas(bridged), "coverage gap: empty bridge"));

  auto unbridged = drot::compute_atlas(2, 3);
  unbridged.bridge_range.reset();
  EXPECT_TRUE(has(verify_atlas(unbridged), "bridge range"));
}

TEST(VerifyProperty, InjectedFaultsAreCaught) {
  drot::testing::Gen gen(0x5eed0601);
  std::vector<PartitionAtlas> pool;
  for (std::int64_t a0 = -3; a0 <= 3; ++a0) {
    for (std::int64_t a1 = -3; a1 <= 3; ++a1) {
      if (a0 != 0 || a1 != 0) pool.push_back(drot::compute_atlas(a0, a1));
    }
  }
  for (int done = 0; done < drot::testing::kCases;) {
    auto atlas = pool[static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(pool.size()) - 1))];
    auto& body = atlas.body;
    const auto pick = [&] { return static_cast<std::size_t>(gen.integer(0, static_cast<std::int64_t>(body.size()) - 1)); };
    const std::size_t k = pick();
    const Interval e = body[k].interval;
    const Rational eps(1, gen.integer(1'000'000, 1'000'000'000));
    const int fault = static_cast<int>(gen.integer(0, 4));
    switch (fault) {
      case 0: {  // shift the lower end
        const auto shifted = Interval::make(e.lo() + (gen.coin() ? eps : -eps), e.lo_closed(), e.hi(), e.hi_closed());
        if (!shifted) continue;
        body[k].interval = *shifted;
        break;
      }
      case 1:  // flip the closedness of a shared end
        if (e.is_singleton()) continue;
        body[k].interval = Interval(e.lo(), !e.lo_closed(), e.hi(), e.hi_closed());
        break;
      case 2: {
        const std::size_t j = pick();
        if (body[j].cycle == body[k].cycle) continue;
        std::swap(body[j].cycle, body[k].cycle);
        break;
      }
      case 3:
        body.erase(body.begin() + static_cast<std::ptrdiff_t>(k));
        break;
      default:
        body.insert(body.begin() + static_cast<std::ptrdiff_t>(k), drot::AtlasEntry(body[k]));
        break;
    }
    const auto report = verify_atlas(atlas);
    ASSERT_FALSE(report.passed) << "fault " << fault << " at " << atlas.a0 << "," << atlas.a1 << " entry " << k;
    ASSERT_FALSE(report.failure.empty());
    ++done;
  }
}
