#include "drot/verify.hpp"

#include "drot/constraints.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace drot {

namespace {

class Checker {
 public:
  Checker(const PartitionAtlas& atlas, const VerifyOptions& options)
      : atlas_(atlas), options_(options), start_{atlas.a0, atlas.a1} {}

  VerificationReport run() {
    check_seam() && check_tiling() && check_redetection() && check_words() && check_distinct() && check_tail();
    return report_;
  }

 private:
  bool fail(std::string message) {
    report_.passed = false;
    report_.failure = std::move(message);
    return false;
  }

  std::optional<Cycle> detect(const Rational& lambda) {
    ++report_.detections;
    auto orbit = detect_cycle(ParamSpec::exact(lambda), start_, options_.cycle_cap);
    return orbit.cycle;
  }

  struct Section {
    const char* name;
    const Interval& range;
    const std::vector<AtlasEntry>& entries;
  };

  std::vector<Section> sections() const {
    std::vector<Section> out;
    if (atlas_.bridge_range) {
      out.push_back({"bridge", *atlas_.bridge_range, atlas_.bridge});
    }
    out.push_back({"body", atlas_.body_range, atlas_.body});
    return out;
  }

  bool check_seam() {
    const auto& tail = atlas_.tail;
    if (tail.label() != label_of(atlas_.a0, atlas_.a1)) {
      return fail("tail label does not match the initial point");
    }
    if (atlas_.body_range != body_range_of(tail)) {
      return fail("body range " + atlas_.body_range.to_string() + " does not match the tail");
    }
    if (atlas_.bridge_range != tail.bridge()) {
      return fail("bridge range does not match the tail");
    }
    if (!atlas_.bridge_range && !atlas_.bridge.empty()) {
      return fail("bridge entries without a bridge range");
    }
    if (tail.kind() == TailKind::whole) {
      return true;
    }
    const Interval* left = &tail.interval();
    for (const auto& section : sections()) {
      const Interval& right = section.range;
      if (left->hi() != right.lo() || left->hi_closed() || !right.lo_closed()) {
        return fail(left->to_string() + " and " + section.name + " " + right.to_string() + " do not abut");
      }
      left = &right;
    }
    return true;
  }

  bool check_tiling() {
    for (const auto& section : sections()) {
      if (!check_tiling(section)) return false;
    }
    return true;
  }

  bool check_tiling(const Section& section) {
    const auto& entries = section.entries;
    const Interval& range = section.range;
    const std::string name = section.name;
    if (entries.empty()) {
      return fail("coverage gap: empty " + name);
    }
    const Interval& first = entries.front().interval;
    if (first.lo() != range.lo() || first.lo_closed() != range.lo_closed()) {
      return fail("coverage gap: " + name + " starts at " + first.to_string() + ", expected left end of " +
                  range.to_string());
    }
    for (std::size_t i = 0; i + 1 < entries.size(); ++i) {
      const Interval& a = entries[i].interval;
      const Interval& b = entries[i + 1].interval;
      if (abuts(a, b)) {
        continue;
      }
      const bool gap = a.hi() < b.lo() || (a.hi() == b.lo() && !a.hi_closed() && !b.lo_closed());
      return fail(std::string(gap ? "coverage gap" : "overlap") + " between " + a.to_string() + " and " +
                  b.to_string());
    }
    const Interval& last = entries.back().interval;
    if (last.hi() != range.hi() || last.hi_closed() != range.hi_closed()) {
      return fail("coverage gap: " + name + " ends at " + last.to_string() + ", expected right end of " +
                  range.to_string());
    }
    return true;
  }

  bool check_redetection() {
    const std::size_t probes = options_.probes_per_interval;
    for (const auto& section : sections()) {
      for (const auto& entry : section.entries) {
        const Interval& i = entry.interval;
        std::vector<Rational> points;
        if (i.is_singleton()) {
          points.push_back(i.lo());
        } else {
          if (i.lo_closed()) points.push_back(i.lo());
          if (i.hi_closed()) points.push_back(i.hi());
          const Rational width = i.hi() - i.lo();
          for (std::size_t j = 1; j <= probes; ++j) {
            points.push_back(i.lo() + width * Rational(j) / Rational(probes + 1));
          }
        }
        for (const auto& lambda : points) {
          auto found = detect(lambda);
          if (!found) {
            return fail("re-detection mismatch at lambda=" + lambda.to_string() + ": orbit did not close");
          }
          if (!found->same_word(entry.cycle)) {
            return fail("re-detection mismatch at lambda=" + lambda.to_string() + " in " + i.to_string() +
                        ": stored " + entry.cycle.to_string() + ", found " + found->to_string());
          }
        }
      }
    }
    return true;
  }

  bool check_words() {
    for (const auto& section : sections()) {
      for (const auto& entry : section.entries) {
        if (!entry.cycle.contains_adjacent(atlas_.a0, atlas_.a1)) {
          return fail("cycle " + entry.cycle.to_string() + " does not pass through the initial point");
        }
        auto realized = interval_for_cycle(entry.cycle);
        auto clipped = realized ? intersect(*realized, section.range) : std::nullopt;
        if (!clipped || *clipped != entry.interval) {
          return fail("interval " + entry.interval.to_string() + " is not the realization set of " +
                      entry.cycle.to_string());
        }
        if (!realizes(entry.cycle, entry.interval.sample_point())) {
          return fail("cycle " + entry.cycle.to_string() + " violates a step inequality inside " +
                      entry.interval.to_string());
        }
      }
    }
    return true;
  }

  // A cycle realized across the bridge/body seam appears once on each side,
  // so distinctness is checked per section.
  bool check_distinct() {
    for (const auto& section : sections()) {
      std::vector<std::vector<std::int64_t>> canon;
      canon.reserve(section.entries.size());
      for (const auto& entry : section.entries) {
        const Cycle c = entry.cycle.canonical();
        canon.emplace_back(c.word().begin(), c.word().end());
      }
      std::sort(canon.begin(), canon.end());
      if (std::adjacent_find(canon.begin(), canon.end()) != canon.end()) {
        return fail(std::string("two ") + section.name + " intervals carry the same cycle");
      }
    }
    return true;
  }

  bool check_tail() {
    const auto& tail = atlas_.tail;
    switch (tail.kind()) {
      case TailKind::whole:
        return true;
      case TailKind::constant: {
        const Cycle expected = *tail.constant_cycle();
        auto realized = interval_for_cycle(expected);
        if (!realized || *realized != tail.interval()) {
          return fail("constant tail cycle is not realized exactly on " + tail.interval().to_string());
        }
        for (const auto& lambda : {tail.interval().sample_point(), midpoint(tail.interval().sample_point(), tail.interval().hi())}) {
          auto found = detect(lambda);
          if (!found || !(*found == expected)) {
            return fail("tail cycle mismatch at lambda=" + lambda.to_string());
          }
        }
        return true;
      }
      case TailKind::triangular:
        break;
    }

    Rational expected_hi = tail.interval().hi();
    for (const auto& piece : tail.first_pieces(options_.tail_pieces)) {
      if (piece.interval.hi() != expected_hi) {
        return fail("tail piece Z_" + std::to_string(piece.k) + " does not abut its predecessor");
      }
      expected_hi = piece.interval.lo();
      if (!piece.cycle.contains_adjacent(atlas_.a0, atlas_.a1)) {
        return fail("triangular cycle for k=" + std::to_string(piece.k) + " misses the initial point");
      }
      auto realized = interval_for_cycle(piece.cycle);
      if (!realized || *realized != piece.interval) {
        return fail("triangular cycle for k=" + std::to_string(piece.k) + " is not realized exactly on " +
                    piece.interval.to_string());
      }
      for (const auto& lambda : {piece.interval.lo(), piece.interval.sample_point()}) {
        auto found = detect(lambda);
        if (!found || !(*found == piece.cycle)) {
          return fail("tail cycle mismatch at lambda=" + lambda.to_string());
        }
      }
    }
    return true;
  }

  const PartitionAtlas& atlas_;
  const VerifyOptions& options_;
  LatticePoint start_;
  VerificationReport report_;
};

}  // namespace

VerificationReport verify_atlas(const PartitionAtlas& atlas, const VerifyOptions& options) {
  return Checker(atlas, options).run();
}

}  // namespace drot
