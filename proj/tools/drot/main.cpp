#include "drot/constraints.hpp"
#include "drot/dynamics.hpp"
#include "drot/partition.hpp"
#include "drot/report.hpp"
#include "drot/serialize.hpp"
#include "drot/sweep.hpp"
#include "drot/tail.hpp"
#include "drot/verify.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace fs = std::filesystem;

namespace {

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

constexpr const char* kOutEnv = "DROT_OUT";

// Bad user input detected after CLI11 accepted the flags.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

template <typename F>
auto parse_or_usage(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const std::invalid_argument& e) {
    throw UsageError(what + ": " + e.what());
  } catch (const std::out_of_range& e) {
    throw UsageError(what + ": " + e.what());
  }
}

fs::path default_out_dir() {
  const char* env = std::getenv(kOutEnv);
  return env && *env ? fs::path(env) : fs::current_path();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
  if (!out.flush()) {
    throw std::runtime_error("write failed for " + path.string());
  }
}

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw std::runtime_error("cannot read " + path.string());
  }
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string sweep_verdict(const drot::SweepReport& report) {
  const std::string range = "max(|a0|,|a1|) <= " + std::to_string(report.m);
  if (report.all_verified()) {
    return "periodicity verified for all " + std::to_string(report.points.size()) + " points with " + range;
  }
  std::size_t failed = 0;
  for (const auto& p : report.points) failed += p.verified ? 0 : 1;
  return "verification FAILED for " + std::to_string(failed) + " of " + std::to_string(report.points.size()) +
         " points with " + range;
}

void print_failures(const drot::SweepReport& report) {
  for (const auto& p : report.points) {
    if (!p.verified) {
      std::cerr << "(" << p.a0 << "," << p.a1 << "): " << p.failure << '\n';
    }
  }
}

struct Common {
  std::uint64_t cap = drot::kDefaultStepCap;
  std::size_t probes = 2;

  drot::Limits limits() const {
    drot::Limits l;
    l.cycle_cap = cap;
    return l;
  }
  drot::VerifyOptions verify() const {
    drot::VerifyOptions v;
    v.cycle_cap = cap;
    v.probes_per_interval = probes;
    return v;
  }
};

void add_cap(CLI::App* cmd, Common& c) {
  cmd->add_option("--cap", c.cap, "Step cap per orbit")->check(CLI::PositiveNumber);
}

void add_probes(CLI::App* cmd, Common& c) {
  cmd->add_option("--probes", c.probes, "Interior probes per interval during verification");
}

// ---- orbit

struct OrbitArgs {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::string lambda;
  std::string side = "exact";
  Common common;
};

int run_orbit(const OrbitArgs& args) {
  const auto spec = parse_or_usage("--lambda", [&] {
    return drot::ParamSpec(drot::parse_side(args.side), drot::Rational::parse(args.lambda));
  });
  const auto result = drot::detect_cycle(spec, {args.a0, args.a1}, args.common.cap);
  std::cout << "outcome: " << drot::to_string(result.outcome) << '\n';
  std::cout << "steps: " << result.steps_used << '\n';
  std::cout << "max_abs: " << result.max_abs << '\n';
  if (result.cycle) {
    std::cout << "length: " << result.cycle->length() << '\n';
    std::cout << "cycle: " << result.cycle->to_string() << '\n';
  }
  return result.outcome == drot::OrbitOutcome::cap_exceeded ? kFail : kPass;
}

// ---- cycle-interval

int run_cycle_interval(const std::string& word) {
  const auto cycle = parse_or_usage("--word", [&] { return drot::Cycle::parse(word); });
  const auto interval = drot::interval_for_cycle(cycle);
  std::cout << (interval ? interval->to_string() : "infeasible") << '\n';
  return kPass;
}

// ---- tail

int run_tail(std::int64_t a0, std::int64_t a1, std::size_t k_max) {
  const auto tail = parse_or_usage("initial point", [&] { return drot::tail_of(a0, a1); });
  const drot::Label& label = tail.label();
  std::cout << "label: s=" << label.s << " d=" << label.d << '\n';
  std::cout << "K: " << (label.K ? std::to_string(*label.K) : "-") << '\n';
  std::cout << "kind: " << drot::to_string(tail.kind()) << '\n';
  std::cout << "tail: " << tail.interval().to_string() << '\n';
  if (auto c = tail.constant_cycle()) {
    std::cout << "cycle: " << c->to_string() << '\n';
    return kPass;
  }
  std::cout << "first index: " << tail.first_index() << '\n';
  if (auto b = tail.bridge()) {
    std::cout << "bridge: " << b->to_string() << '\n';
  }
  for (const auto& piece : tail.first_pieces(k_max)) {
    std::cout << "Z_" << piece.k << " = " << piece.interval.to_string() << "  " << piece.cycle.to_string() << '\n';
  }
  return kPass;
}

// ---- partition

struct PartitionArgs {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  bool json = false;
  bool table = false;
  Common common;
};

int run_partition(const PartitionArgs& args) {
  parse_or_usage("initial point", [&] { return drot::label_of(args.a0, args.a1); });
  const auto atlas = drot::compute_atlas(args.a0, args.a1, args.common.limits());
  const auto report = drot::verify_atlas(atlas, args.common.verify());

  if (args.json) {
    std::cout << drot::atlas_to_json(atlas);
  } else {
    const drot::Label& label = atlas.tail.label();
    std::cout << "point: (" << atlas.a0 << "," << atlas.a1 << ")  s=" << label.s << " d=" << label.d;
    if (label.K) std::cout << " K=" << *label.K;
    std::cout << '\n';
    std::cout << "tail: " << atlas.tail.interval().to_string() << " (" << drot::to_string(atlas.tail.kind()) << ")\n";
    if (atlas.bridge_range) {
      std::cout << "bridge: " << atlas.bridge_range->to_string() << '\n';
      std::cout << drot::render_entries(atlas.bridge);
    }
    std::cout << "body: " << atlas.body_range.to_string() << "  intervals=" << atlas.stats.intervals
              << " singletons=" << atlas.stats.singletons << " max_length=" << atlas.stats.max_length << '\n';
    std::cout << "endpoints: " << drot::render_endpoint_listing(atlas) << '\n';
    std::cout << drot::render_entries(atlas);
  }
  if (!report.passed) {
    std::cerr << "verification failed: " << report.failure << '\n';
    return kFail;
  }
  if (!args.json) {
    std::cout << "verified (" << report.detections << " re-detections)\n";
  }
  return kPass;
}

// ---- sweep

struct SweepArgs {
  std::int64_t max_m = 1;
  std::string out;
  unsigned jobs = 0;
  Common common;
};

int run_sweep(const SweepArgs& args) {
  const fs::path dir = args.out.empty() ? default_out_dir() : fs::path(args.out);
  fs::create_directories(dir);

  drot::SweepOptions options;
  options.limits = args.common.limits();
  options.verify = args.common.verify();
  options.jobs = args.jobs;
  options.on_atlas = [&dir](const drot::PartitionAtlas& atlas, const drot::VerificationReport&) {
    write_file(dir / drot::atlas_file_name(atlas.a0, atlas.a1), drot::atlas_to_json(atlas));
  };
  const auto report = drot::sweep(args.max_m, options);

  write_file(dir / "summary.csv", drot::sweep_summary_csv(report));
  write_file(dir / "tables.csv", drot::render_tables(report, drot::TableFormat::csv));
  std::cout << drot::render_tables(report, drot::TableFormat::text) << '\n';
  std::cout << sweep_verdict(report) << '\n';
  std::cout << "output: " << dir.string() << '\n';
  print_failures(report);
  return report.all_verified() ? kPass : kFail;
}

// ---- tables

struct TablesArgs {
  std::int64_t max_m = 0;
  std::string from;
  bool csv = false;
  bool text = false;
  unsigned jobs = 0;
  Common common;
};

drot::SweepReport tables_from_dir(const TablesArgs& args) {
  const fs::path dir(args.from);
  if (!fs::is_directory(dir)) {
    throw UsageError("--from: not a directory: " + dir.string());
  }
  std::vector<fs::path> files;
  for (const auto& entry : fs::directory_iterator(dir)) {
    const std::string name = entry.path().filename().string();
    if (entry.is_regular_file() && name.starts_with("atlas_") && name.ends_with(".json")) {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  if (files.empty()) {
    throw UsageError("--from: no atlas_*.json files in " + dir.string());
  }
  std::vector<drot::PointSummary> points;
  std::int64_t m = 0;
  for (const auto& path : files) {
    drot::PointSummary s;
    try {
      const auto atlas = drot::atlas_from_json(read_file(path));
      s = drot::summarize(atlas, drot::verify_atlas(atlas, args.common.verify()));
    } catch (const std::invalid_argument& e) {
      throw std::runtime_error(path.string() + ": " + e.what());
    }
    m = std::max(m, s.ring());
    points.push_back(std::move(s));
  }
  if (args.max_m > 0) {
    std::erase_if(points, [&](const drot::PointSummary& p) { return p.ring() > args.max_m; });
    m = std::min(m, args.max_m);
  }
  return drot::aggregate(m, std::move(points));
}

int run_tables(const TablesArgs& args) {
  drot::SweepReport report;
  if (!args.from.empty()) {
    report = tables_from_dir(args);
  } else {
    if (args.max_m < 1) {
      throw UsageError("tables needs --max-m M (M >= 1) or --from DIR");
    }
    drot::SweepOptions options;
    options.limits = args.common.limits();
    options.verify = args.common.verify();
    options.jobs = args.jobs;
    report = drot::sweep(args.max_m, options);
  }
  std::cout << drot::render_tables(report, args.csv ? drot::TableFormat::csv : drot::TableFormat::text);
  if (!report.all_verified()) {
    std::cerr << sweep_verdict(report) << '\n';
    print_failures(report);
    return kFail;
  }
  return kPass;
}

// ---- diagram

struct DiagramArgs {
  std::int64_t a0 = 0;
  std::int64_t a1 = 0;
  std::string out;
  Common common;
};

int run_diagram(const DiagramArgs& args) {
  parse_or_usage("initial point", [&] { return drot::label_of(args.a0, args.a1); });
  const auto atlas = drot::compute_atlas(args.a0, args.a1, args.common.limits());
  const auto report = drot::verify_atlas(atlas, args.common.verify());
  if (!report.passed) {
    std::cerr << "verification failed: " << report.failure << '\n';
    return kFail;
  }
  const std::string svg = drot::emit_diagram(atlas);
  if (args.out.empty()) {
    std::cout << svg;
  } else {
    write_file(args.out, svg);
  }
  return kPass;
}

void add_point(CLI::App* cmd, std::int64_t& a0, std::int64_t& a1) {
  cmd->add_option("--a0", a0, "First initial value")->required();
  cmd->add_option("--a1", a1, "Second initial value")->required();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact parameter partitions of the discretized rotation 0 <= a_{n+2} + lambda a_{n+1} + a_n < 1"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "drot 0.1.0");

  OrbitArgs orbit;
  auto* orbit_cmd = app.add_subcommand("orbit", "Iterate one orbit at an exact or one-sided parameter");
  add_point(orbit_cmd, orbit.a0, orbit.a1);
  orbit_cmd->add_option("--lambda", orbit.lambda, "Parameter p/q")->required();
  orbit_cmd->add_option("--side", orbit.side, "exact, plus (p/q+0) or minus (p/q-0)")
      ->check(CLI::IsMember({"exact", "plus", "minus"}));
  add_cap(orbit_cmd, orbit.common);

  std::string word;
  auto* interval_cmd = app.add_subcommand("cycle-interval", "Exact parameter set realizing a cycle word");
  interval_cmd->add_option("--word", word, "Comma-separated word b0,b1,...")->required();

  std::int64_t tail_a0 = 0, tail_a1 = 0;
  std::size_t k_max = 5;
  auto* tail_cmd = app.add_subcommand("tail", "Label, tail interval and triangular pieces near -2");
  add_point(tail_cmd, tail_a0, tail_a1);
  tail_cmd->add_option("--k-max", k_max, "Number of pieces to list");

  PartitionArgs partition;
  auto* partition_cmd = app.add_subcommand("partition", "Compute and verify the atlas of one initial point");
  add_point(partition_cmd, partition.a0, partition.a1);
  auto* json_flag = partition_cmd->add_flag("--json", partition.json, "Emit the atlas as JSON");
  auto* table_flag = partition_cmd->add_flag("--table", partition.table, "Emit a text table (default)");
  json_flag->excludes(table_flag);
  add_cap(partition_cmd, partition.common);
  add_probes(partition_cmd, partition.common);

  SweepArgs sweep;
  auto* sweep_cmd = app.add_subcommand("sweep", "Atlases for every point with max(|a0|,|a1|) <= M");
  sweep_cmd->add_option("--max-m", sweep.max_m, "Largest ring M")->required()->check(CLI::PositiveNumber);
  sweep_cmd->add_option("--out", sweep.out, std::string("Output directory (default $") + kOutEnv + " or .)");
  sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads (0: all cores)");
  add_cap(sweep_cmd, sweep.common);
  add_probes(sweep_cmd, sweep.common);

  TablesArgs tables;
  auto* tables_cmd = app.add_subcommand("tables", "Cardinality and cycle-length tables per ring");
  tables_cmd->add_option("--max-m", tables.max_m, "Compute rings 1..M")->check(CLI::PositiveNumber);
  tables_cmd->add_option("--from", tables.from, "Read atlas_*.json files written by sweep");
  auto* csv_flag = tables_cmd->add_flag("--csv", tables.csv, "CSV output");
  auto* text_flag = tables_cmd->add_flag("--text", tables.text, "Aligned text output (default)");
  csv_flag->excludes(text_flag);
  tables_cmd->add_option("--jobs", tables.jobs, "Worker threads (0: all cores)");
  add_cap(tables_cmd, tables.common);
  add_probes(tables_cmd, tables.common);

  DiagramArgs diagram;
  auto* diagram_cmd = app.add_subcommand("diagram", "SVG number line of the partition of ]-2,2[");
  add_point(diagram_cmd, diagram.a0, diagram.a1);
  diagram_cmd->add_option("--out", diagram.out, "Output file (default stdout)");
  add_cap(diagram_cmd, diagram.common);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*orbit_cmd) return run_orbit(orbit);
    if (*interval_cmd) return run_cycle_interval(word);
    if (*tail_cmd) return run_tail(tail_a0, tail_a1, k_max);
    if (*partition_cmd) return run_partition(partition);
    if (*sweep_cmd) return run_sweep(sweep);
    if (*tables_cmd) return run_tables(tables);
    if (*diagram_cmd) return run_diagram(diagram);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const drot::AtlasError& e) {
    std::cerr << "budget failure: " << e.what() << '\n';
    return kFail;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
  return kUsage;
}
