#include "drot/partition.hpp"

#include "drot/constraints.hpp"

#include <algorithm>
#include <string>

namespace drot {

namespace {

std::string point_text(std::int64_t a0, std::int64_t a1) {
  return "(" + std::to_string(a0) + "," + std::to_string(a1) + ")";
}

}  // namespace

AtlasStats compute_stats(std::span<const AtlasEntry> body) {
  AtlasStats stats;
  stats.intervals = body.size();
  for (const auto& e : body) {
    if (e.interval.is_singleton()) {
      ++stats.singletons;
    }
    if (e.cycle.length() > stats.max_length) {
      stats.max_length = e.cycle.length();
      stats.max_length_interval = e.interval;
    }
    stats.total_length += Rational(e.cycle.length());
  }
  if (!body.empty()) {
    stats.average_length = stats.total_length / Rational(body.size());
  }
  return stats;
}

bool operator==(const PartitionAtlas& a, const PartitionAtlas& b) {
  if (a.a0 != b.a0 || a.a1 != b.a1 || a.tail.label() != b.tail.label() || a.body_range != b.body_range ||
      a.stats != b.stats || a.bridge_range != b.bridge_range) {
    return false;
  }
  auto same = [](const std::vector<AtlasEntry>& x, const std::vector<AtlasEntry>& y) {
    return std::equal(x.begin(), x.end(), y.begin(), y.end(), [](const AtlasEntry& p, const AtlasEntry& q) {
      return p.interval == q.interval && p.cycle.same_word(q.cycle);
    });
  };
  return same(a.body, b.body) && same(a.bridge, b.bridge);
}

Interval body_range_of(const TailDescription& tail) {
  if (auto start = tail.body_start()) {
    return Interval::closed_open(*start, 2);
  }
  return Interval::open(-2, 2);
}

namespace {

class Refiner {
 public:
  Refiner(PartitionAtlas& atlas, const Limits& limits) : atlas_(atlas), limits_(limits), start_{atlas.a0, atlas.a1} {}

  std::vector<AtlasEntry> run(const Interval& range) {
    std::vector<AtlasEntry> entries;
    IntervalSet uncovered(range);
    while (!uncovered.empty()) {
      if (atlas_.rounds >= limits_.max_rounds) {
        throw BudgetExceeded("refinement round budget exhausted for " + where() + "; uncovered " +
                                 to_string(uncovered),
                             start_, uncovered);
      }
      ++atlas_.rounds;

      for (const Rational& lambda : sample_points(uncovered)) {
        const OrbitResult orbit = detect_cycle(ParamSpec::exact(lambda), start_, limits_.cycle_cap);
        atlas_.orbit_steps += orbit.steps_used;
        if (orbit.outcome != OrbitOutcome::cycle) {
          throw CycleCapExceeded("orbit of " + where() + " at lambda=" + lambda.to_string() +
                                     " did not close within " + std::to_string(limits_.cycle_cap) + " steps",
                                 start_, lambda);
        }
        if (atlas_.orbit_steps > limits_.max_total_steps) {
          throw BudgetExceeded("orbit step budget exhausted for " + where(), start_, uncovered);
        }

        auto realized = interval_for_cycle(*orbit.cycle);
        if (!realized || !realized->contains(lambda)) {
          throw std::logic_error("cycle found at lambda=" + lambda.to_string() + " is not realized there");
        }
        auto clipped = intersect(*realized, range);
        uncovered = subtract(uncovered, *clipped);
        entries.push_back({std::move(*clipped), std::move(*orbit.cycle)});
      }
    }
    std::sort(entries.begin(), entries.end(),
              [](const AtlasEntry& x, const AtlasEntry& y) { return lower_end_less(x.interval, y.interval); });
    return entries;
  }

 private:
  std::string where() const { return point_text(start_.x, start_.y); }

  PartitionAtlas& atlas_;
  const Limits& limits_;
  LatticePoint start_;
};

}  // namespace

PartitionAtlas compute_atlas(std::int64_t a0, std::int64_t a1, const Limits& limits) {
  TailDescription tail(a0, a1);
  Interval range = body_range_of(tail);
  PartitionAtlas atlas{a0, a1, tail, range, {}, {}, tail.bridge(), {}, 0, 0};

  if (tail.kind() == TailKind::whole) {
    atlas.body.push_back({range, Cycle({0})});
    atlas.stats = compute_stats(atlas.body);
    return atlas;
  }

  Refiner refiner(atlas, limits);
  if (atlas.bridge_range) {
    atlas.bridge = refiner.run(*atlas.bridge_range);
  }
  atlas.body = refiner.run(range);
  atlas.stats = compute_stats(atlas.body);
  return atlas;
}

}  // namespace drot
