#include "drot/serialize.hpp"

#include "json.hpp"

#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace drot {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json entry_json(const AtlasEntry& e) {
  const Interval& i = e.interval;
  ordered_json j;
  j["interval"] = i.to_string();
  j["lo"] = i.lo().to_string();
  j["lo_closed"] = i.lo_closed();
  j["hi"] = i.hi().to_string();
  j["hi_closed"] = i.hi_closed();
  j["cycle"] = std::vector<std::int64_t>(e.cycle.word().begin(), e.cycle.word().end());
  j["length"] = e.cycle.length();
  return j;
}

void write_entries(std::ostream& os, const std::vector<AtlasEntry>& entries) {
  os << '[';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    os << (i == 0 ? "\n    " : ",\n    ") << entry_json(entries[i]).dump();
  }
  os << (entries.empty() ? "]" : "\n  ]");
}

[[noreturn]] void reject(const std::string& why) { throw std::invalid_argument("malformed atlas JSON: " + why); }

}  // namespace

std::string atlas_to_json(const PartitionAtlas& atlas) {
  const Label& label = atlas.tail.label();
  ordered_json tail;
  tail["lo"] = atlas.tail.interval().lo().to_string();
  tail["hi"] = atlas.tail.interval().hi().to_string();
  tail["kind"] = std::string(to_string(atlas.tail.kind()));

  // One body entry per line keeps large atlases diffable without
  // spreading every cycle word over hundreds of lines.
  std::ostringstream os;
  os << "{\n";
  os << "  \"a0\": " << atlas.a0 << ",\n";
  os << "  \"a1\": " << atlas.a1 << ",\n";
  os << "  \"s\": " << label.s << ",\n";
  os << "  \"d\": " << label.d << ",\n";
  os << "  \"K\": " << (label.K ? std::to_string(*label.K) : "null") << ",\n";
  os << "  \"first_index\": " << atlas.tail.first_index() << ",\n";
  os << "  \"tail\": " << tail.dump() << ",\n";
  os << "  \"bridge\": ";
  write_entries(os, atlas.bridge);
  os << ",\n  \"body\": ";
  write_entries(os, atlas.body);
  os << "\n}\n";
  return os.str();
}

PartitionAtlas atlas_from_json(std::string_view text) {
  ordered_json doc;
  try {
    doc = ordered_json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    reject(e.what());
  }
  try {
    const auto a0 = doc.at("a0").get<std::int64_t>();
    const auto a1 = doc.at("a1").get<std::int64_t>();
    TailDescription tail(a0, a1);
    const Label& label = tail.label();
    if (doc.at("s").get<std::int64_t>() != label.s || doc.at("d").get<std::int64_t>() != label.d) {
      reject("label does not match the initial point");
    }
    const auto& k = doc.at("K");
    if (k.is_null() != !label.K.has_value() || (label.K && k.get<std::int64_t>() != *label.K)) {
      reject("K does not match the initial point");
    }
    if (doc.at("first_index").get<std::int64_t>() != tail.first_index()) {
      reject("first_index does not match the initial point");
    }
    const auto& t = doc.at("tail");
    if (Rational::parse(t.at("lo").get<std::string>()) != tail.interval().lo() ||
        Rational::parse(t.at("hi").get<std::string>()) != tail.interval().hi() ||
        t.at("kind").get<std::string>() != to_string(tail.kind())) {
      reject("tail does not match the initial point");
    }

    auto read_entries = [](const ordered_json& list) {
      std::vector<AtlasEntry> out;
      for (const auto& e : list) {
        Interval interval(Rational::parse(e.at("lo").get<std::string>()), e.at("lo_closed").get<bool>(),
                          Rational::parse(e.at("hi").get<std::string>()), e.at("hi_closed").get<bool>());
        if (Interval::parse(e.at("interval").get<std::string>()) != interval) {
          reject("interval text disagrees with its endpoints");
        }
        Cycle cycle(e.at("cycle").get<std::vector<std::int64_t>>());
        if (e.at("length").get<std::size_t>() != cycle.length()) {
          reject("length disagrees with the cycle word");
        }
        out.push_back({std::move(interval), std::move(cycle)});
      }
      return out;
    };
    std::vector<AtlasEntry> bridge = read_entries(doc.at("bridge"));
    std::vector<AtlasEntry> body = read_entries(doc.at("body"));

    Interval range = body_range_of(tail);
    std::optional<Interval> bridge_range = tail.bridge();
    PartitionAtlas atlas{a0,  a1, std::move(tail), std::move(range), std::move(body), {}, std::move(bridge_range),
                         std::move(bridge), 0, 0};
    atlas.stats = compute_stats(atlas.body);
    return atlas;
  } catch (const nlohmann::json::exception& e) {
    reject(e.what());
  }
}

std::string atlas_file_name(std::int64_t a0, std::int64_t a1) {
  return "atlas_" + std::to_string(a0) + "_" + std::to_string(a1) + ".json";
}

std::string sweep_summary_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "m,a0,a1,intervals,singletons,max_len,avg_len\n";
  for (const auto& p : report.points) {
    os << p.ring() << ',' << p.a0 << ',' << p.a1 << ',' << p.intervals << ',' << p.singletons << ','
       << p.max_length << ',' << to_decimal(p.average_length, 4) << '\n';
  }
  return os.str();
}

}  // namespace drot
