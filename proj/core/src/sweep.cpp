#include "drot/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

namespace drot {

namespace {

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

bool point_order(const PointSummary& a, const PointSummary& b) {
  if (a.ring() != b.ring()) return a.ring() < b.ring();
  if (a.a0 != b.a0) return a.a0 < b.a0;
  return a.a1 < b.a1;
}

// Larger value wins; ties go to larger a0, then larger a1.
bool beats(std::size_t value, const PointSummary& p, std::size_t best, LatticePoint best_point) {
  if (value != best) return value > best;
  if (p.a0 != best_point.x) return p.a0 > best_point.x;
  return p.a1 > best_point.y;
}

}  // namespace

std::int64_t PointSummary::ring() const { return std::max(abs64(a0), abs64(a1)); }

PointSummary summarize(const PartitionAtlas& atlas, const VerificationReport& verification) {
  PointSummary s;
  s.a0 = atlas.a0;
  s.a1 = atlas.a1;
  s.intervals = atlas.stats.intervals;
  s.singletons = atlas.stats.singletons;
  s.max_length = atlas.stats.max_length;
  s.max_length_interval = atlas.stats.max_length_interval;
  s.total_length = atlas.stats.total_length;
  s.average_length = atlas.stats.average_length;
  s.verified = verification.passed;
  s.failure = verification.failure;
  return s;
}

bool SweepReport::all_verified() const {
  return std::all_of(points.begin(), points.end(), [](const PointSummary& p) { return p.verified; });
}

const RingRow* SweepReport::row(std::int64_t ring) const {
  for (const auto& r : rows) {
    if (r.m == ring) return &r;
  }
  return nullptr;
}

SweepReport aggregate(std::int64_t m, std::vector<PointSummary> points) {
  std::sort(points.begin(), points.end(), point_order);
  SweepReport report;
  report.m = m;
  for (std::int64_t ring = 1; ring <= m; ++ring) {
    RingRow row;
    row.m = ring;
    Rational pooled_total;
    std::size_t pooled_count = 0;
    Rational sum_of_means;
    bool first = true;
    for (const auto& p : points) {
      if (p.ring() != ring) continue;
      ++row.points;
      row.all_verified = row.all_verified && p.verified;
      if (first || beats(p.intervals, p, row.cardinality, row.cardinality_argmax)) {
        row.cardinality = p.intervals;
        row.singletons = p.singletons;
        row.cardinality_argmax = {p.a0, p.a1};
      }
      if (first || beats(p.max_length, p, row.max_length, row.length_argmax)) {
        row.max_length = p.max_length;
        row.max_length_interval = p.max_length_interval;
        row.length_argmax = {p.a0, p.a1};
      }
      first = false;
      pooled_total += p.total_length;
      pooled_count += p.intervals;
      sum_of_means += p.average_length;
    }
    if (pooled_count > 0) {
      row.pooled_average = pooled_total / Rational(pooled_count);
    }
    if (row.points > 0) {
      row.mean_of_means = sum_of_means / Rational(row.points);
    }
    report.rows.push_back(std::move(row));
  }
  report.points = std::move(points);
  return report;
}

SweepReport sweep(std::int64_t m, const SweepOptions& options) {
  if (m < 1) {
    throw std::invalid_argument("sweep requires m >= 1");
  }
  std::vector<LatticePoint> grid;
  for (std::int64_t a0 = -m; a0 <= m; ++a0) {
    for (std::int64_t a1 = -m; a1 <= m; ++a1) {
      grid.push_back({a0, a1});
    }
  }
  // Largest rings first so the long atlases do not trail at the end.
  std::stable_sort(grid.begin(), grid.end(), [](LatticePoint a, LatticePoint b) {
    return std::max(abs64(a.x), abs64(a.y)) > std::max(abs64(b.x), abs64(b.y));
  });

  std::vector<PointSummary> results(grid.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < grid.size(); i = next++) {
      const LatticePoint p = grid[i];
      try {
        const PartitionAtlas atlas = compute_atlas(p.x, p.y, options.limits);
        const VerificationReport verification = verify_atlas(atlas, options.verify);
        if (options.on_atlas) {
          options.on_atlas(atlas, verification);
        }
        results[i] = summarize(atlas, verification);
      } catch (const std::exception& e) {
        results[i].a0 = p.x;
        results[i].a1 = p.y;
        results[i].verified = false;
        results[i].failure = e.what();
      }
    }
  };

  unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, grid.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(jobs);
    for (unsigned j = 0; j < jobs; ++j) {
      pool.emplace_back(worker);
    }
  }
  return aggregate(m, std::move(results));
}

}  // namespace drot
