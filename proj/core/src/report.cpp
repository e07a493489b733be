#include "drot/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <optional>
#include <sstream>
#include <vector>

namespace drot {

namespace {

std::string point_text(LatticePoint p) { return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")"; }

std::string csv_quote(const std::string& s) {
  return s.find(',') == std::string::npos ? s : "\"" + s + "\"";
}

constexpr int kAverageDigits = 4;

}  // namespace

std::string render_endpoint_listing(const PartitionAtlas& atlas) {
  // (point, mark) with mark unset until some interval claims the point
  std::vector<std::pair<Rational, std::optional<char>>> marks;
  for (const auto& e : atlas.body) {
    const Interval& i = e.interval;
    if (i.is_singleton()) {
      marks.emplace_back(i.lo(), '\0');
      continue;
    }
    marks.emplace_back(i.lo(), i.lo_closed() ? std::optional<char>('>') : std::nullopt);
    marks.emplace_back(i.hi(), i.hi_closed() ? std::optional<char>('<') : std::nullopt);
  }

  std::string out;
  for (std::size_t k = 0; k < marks.size();) {
    const Rational& point = marks[k].first;
    std::optional<char> mark;
    for (; k < marks.size() && marks[k].first == point; ++k) {
      if (marks[k].second) mark = marks[k].second;
    }
    if (!out.empty()) out += ' ';
    if (mark && *mark != '\0') out += *mark;
    out += point.to_string();
  }
  return out;
}

std::string render_entries(std::span<const AtlasEntry> entries) {
  std::ostringstream os;
  for (const auto& e : entries) {
    os << std::left << std::setw(24) << e.interval.to_string() << ' ' << std::right << std::setw(6)
       << e.cycle.length() << "  " << e.cycle.to_string() << '\n';
  }
  return os.str();
}

std::string cardinality_row(const RingRow& row) {
  return std::to_string(row.m) + ", " + point_text(row.cardinality_argmax) + ", " + std::to_string(row.cardinality) +
         ", " + std::to_string(row.singletons);
}

std::string length_row(const RingRow& row) {
  const std::string interval = row.max_length_interval ? row.max_length_interval->to_string() : "-";
  return std::to_string(row.m) + ", " + point_text(row.length_argmax) + ", " + interval + ", " +
         std::to_string(row.max_length) + ", " + to_decimal(row.pooled_average, kAverageDigits) + ", " +
         to_decimal(row.mean_of_means, kAverageDigits);
}

std::string render_tables(const SweepReport& report, TableFormat format) {
  std::ostringstream os;
  if (format == TableFormat::csv) {
    os << "m,a0,a1,cardinality,singletons\n";
    for (const auto& r : report.rows) {
      os << r.m << ',' << r.cardinality_argmax.x << ',' << r.cardinality_argmax.y << ',' << r.cardinality << ','
         << r.singletons << '\n';
    }
    os << '\n' << "m,a0,a1,interval,max_length,avg_pooled,avg_mean\n";
    for (const auto& r : report.rows) {
      os << r.m << ',' << r.length_argmax.x << ',' << r.length_argmax.y << ','
         << csv_quote(r.max_length_interval ? r.max_length_interval->to_string() : "") << ',' << r.max_length << ','
         << to_decimal(r.pooled_average, kAverageDigits) << ',' << to_decimal(r.mean_of_means, kAverageDigits)
         << '\n';
    }
    return os.str();
  }

  os << std::left << std::setw(4) << "m" << std::setw(12) << "max at" << std::setw(14) << "cardinality"
     << "singletons\n";
  for (const auto& r : report.rows) {
    os << std::left << std::setw(4) << r.m << std::setw(12) << point_text(r.cardinality_argmax) << std::setw(14)
       << r.cardinality << r.singletons << '\n';
  }
  os << '\n'
     << std::left << std::setw(4) << "m" << std::setw(12) << "max at" << std::setw(22) << "interval" << std::setw(12)
     << "max length" << std::setw(14) << "avg (pooled)" << "avg (per-point)\n";
  for (const auto& r : report.rows) {
    os << std::left << std::setw(4) << r.m << std::setw(12) << point_text(r.length_argmax) << std::setw(22)
       << (r.max_length_interval ? r.max_length_interval->to_string() : "-") << std::setw(12) << r.max_length
       << std::setw(14) << to_decimal(r.pooled_average, kAverageDigits)
       << to_decimal(r.mean_of_means, kAverageDigits) << '\n';
  }
  return os.str();
}

namespace {

// Figure geometry: ]-2,2[ maps onto [kLeft, kLeft + kSpan] pixels.
constexpr int kLeft = 40;
constexpr int kSpan = 1200;
constexpr int kBarTop = 30;
constexpr int kBarHeight = 40;

std::string x_of(const Rational& lambda) {
  return to_decimal(Rational(kLeft) + (lambda + Rational(2)) * Rational(kSpan) / Rational(4), 2);
}

std::string width_of(const Rational& lo, const Rational& hi) {
  return to_decimal((hi - lo) * Rational(kSpan) / Rational(4), 2);
}

// Hue from blue (short cycles) to red (longest cycle of the atlas).
std::string color_for(std::size_t length, std::size_t longest) {
  const std::size_t hue = longest > 1 ? 240 - 240 * (length - 1) / (longest - 1) : 240;
  return "hsl(" + std::to_string(hue) + ",70%,55%)";
}

void draw_entry(std::ostream& os, const AtlasEntry& e, std::size_t longest) {
  const Interval& i = e.interval;
  const std::string color = color_for(e.cycle.length(), longest);
  if (i.is_singleton()) {
    const std::string x = x_of(i.lo());
    os << "  <line class=\"singleton\" x1=\"" << x << "\" y1=\"" << kBarTop - 8 << "\" x2=\"" << x << "\" y2=\""
       << kBarTop + kBarHeight + 8 << "\" stroke=\"" << color << "\" stroke-width=\"1.5\">"
       << "<title>" << i.to_string() << " length " << e.cycle.length() << "</title></line>\n";
  } else {
    os << "  <rect class=\"segment\" x=\"" << x_of(i.lo()) << "\" y=\"" << kBarTop << "\" width=\""
       << width_of(i.lo(), i.hi()) << "\" height=\"" << kBarHeight << "\" fill=\"" << color << "\">"
       << "<title>" << i.to_string() << " length " << e.cycle.length() << "</title></rect>\n";
  }
}

}  // namespace

std::string emit_diagram(const PartitionAtlas& atlas) {
  std::ostringstream os;
  const int width = 2 * kLeft + kSpan;
  const int height = kBarTop + kBarHeight + 50;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
     << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  os << "  <title>partition of ]-2,2[ for (a0,a1)=(" << atlas.a0 << ',' << atlas.a1 << ")</title>\n";
  os << "  <defs>\n"
     << "    <pattern id=\"hatch\" patternUnits=\"userSpaceOnUse\" width=\"6\" height=\"6\" "
        "patternTransform=\"rotate(45)\">\n"
     << "      <line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"6\" stroke=\"#555\" stroke-width=\"2\"/>\n"
     << "    </pattern>\n"
     << "  </defs>\n";

  const auto& tail = atlas.tail;
  if (tail.kind() != TailKind::whole) {
    const Interval& t = tail.interval();
    os << "  <rect class=\"tail\" x=\"" << x_of(t.lo()) << "\" y=\"" << kBarTop << "\" width=\""
       << width_of(t.lo(), t.hi()) << "\" height=\"" << kBarHeight << "\" fill=\"url(#hatch)\">"
       << "<title>tail " << t.to_string() << "</title></rect>\n";
  }

  std::size_t longest = atlas.stats.max_length;
  for (const auto& e : atlas.bridge) {
    longest = std::max(longest, e.cycle.length());
  }
  if (atlas.bridge_range) {
    const Interval& b = *atlas.bridge_range;
    os << "  <rect class=\"bridge\" x=\"" << x_of(b.lo()) << "\" y=\"" << kBarTop + kBarHeight + 2
       << "\" width=\"" << width_of(b.lo(), b.hi()) << "\" height=\"4\" fill=\"#555\">"
       << "<title>bridge " << b.to_string() << "</title></rect>\n";
  }
  for (const auto* list : {&atlas.bridge, &atlas.body}) {
    for (const auto& e : *list) {
      draw_entry(os, e, longest);
    }
  }

  const int axis_y = kBarTop + kBarHeight + 20;
  os << "  <line class=\"axis\" x1=\"" << kLeft << "\" y1=\"" << axis_y << "\" x2=\"" << kLeft + kSpan << "\" y2=\""
     << axis_y << "\" stroke=\"black\"/>\n";
  for (int v = -2; v <= 2; ++v) {
    const std::string x = x_of(Rational(v));
    os << "  <text x=\"" << x << "\" y=\"" << axis_y + 18 << "\" text-anchor=\"middle\" font-size=\"12\">" << v
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace drot
