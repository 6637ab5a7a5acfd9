#include "corient/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <string>

#include "corient/absorb.hpp"
#include "corient/error.hpp"
#include "corient/graph.hpp"
#include "corient/oracle.hpp"
#include "corient/pipeline.hpp"
#include "corient/preprocess.hpp"
#include "corient/steps.hpp"

namespace corient {

namespace {

enum class OutputFormat { Bits, Arcs, None };

struct CliSettings {
  std::string input;
  std::string algorithm = "fast";
  std::string hole_strategy = "fast";
  std::string output = "bits";
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max();
  bool stats = false;
  bool strict_connected = false;
  bool dump_multigraph = false;
};

struct Resolved {
  Algorithm algorithm;
  HoleStrategy strategy;
  OutputFormat output;
};

Resolved resolve(const CliSettings& s) {
  Resolved r{Algorithm::Fast, HoleStrategy::Fast, OutputFormat::Bits};
  // CLI11 has already restricted these to the accepted spellings.
  r.algorithm = *parse_algorithm(s.algorithm);
  r.strategy = *parse_hole_strategy(s.hole_strategy);
  r.output = s.output == "arcs" ? OutputFormat::Arcs
             : s.output == "none" ? OutputFormat::None
                                  : OutputFormat::Bits;
  return r;
}

UndirectedGraph load_graph(const CliSettings& s) {
  const ParseOptions options{s.strict_connected};
  if (s.input == "-") return parse_edge_list(std::cin, options);
  std::ifstream in(s.input);
  if (!in) throw std::runtime_error("cannot open " + s.input);
  return parse_edge_list(in, options);
}

std::unique_ptr<SolutionSource> make_source(const UndirectedGraph& g, const Resolved& r,
                                            StepCounter& steps) {
  switch (r.algorithm) {
    case Algorithm::Fast:
      return std::make_unique<Pipeline>(g, PipelineOptions{r.strategy, std::nullopt}, steps);
    case Algorithm::Absorbed:
      return std::make_unique<AbsorbedEnumerator>(g, AbsorbOptions{r.strategy}, steps);
    case Algorithm::Naive:
      return std::make_unique<BruteForceCursor>(g, steps);
  }
  return nullptr;
}

void write_solution(std::ostream& out, const UndirectedGraph& g, const OrientationBits& bits,
                    OutputFormat format) {
  if (format == OutputFormat::Bits) {
    out << bits.to_string() << '\n';
    return;
  }
  bool first = true;
  for (const Arc& a : orientation_arcs(g, bits)) {
    if (!first) out << ' ';
    first = false;
    out << g.label(a.from) << '>' << g.label(a.to);
  }
  out << '\n';
}

struct RunSummary {
  std::uint64_t solutions = 0;
  std::uint64_t total_steps = 0;
  DelayProfile delay{0};
};

void write_stats(std::ostream& out, const SolutionSource& source, const RunSummary& run) {
  out << "solutions=" << run.solutions << '\n';
  out << "total_steps=" << run.total_steps << '\n';
  out << "first_solution_steps=" << run.delay.first() << '\n';
  out << "max_gap_steps=" << run.delay.max_gap() << '\n';
  out << "median_gap_steps=" << run.delay.median_gap() << '\n';
  std::optional<PipelineStats> pipeline;
  if (const auto* p = dynamic_cast<const Pipeline*>(&source)) pipeline = p->stats();
  if (const auto* a = dynamic_cast<const AbsorbedEnumerator*>(&source)) {
    const AbsorbStats s = a->stats();
    const char* branch = s.branch == ShortcutKind::Producer    ? "producer"
                         : s.branch == ShortcutKind::SmallHole ? "small_hole"
                                                               : "delegate";
    out << "absorb_branch=" << branch << '\n';
    out << "absorb_first_cycle_length=" << s.first_cycle_length << '\n';
    out << "absorb_threshold=" << s.threshold << '\n';
    out << "absorb_z1_size=" << s.z1_size << '\n';
    out << "absorb_budget=" << s.budget << '\n';
    out << "absorb_slot=" << s.slot << '\n';
    out << "absorb_substitutions=" << s.substitutions << '\n';
    out << "peak_dictionary_nodes=" << s.peak_dictionary_nodes << '\n';
    out << "peak_memory_bits=" << s.peak_memory_bits << '\n';
    out << "queue_size=" << s.queue_size << '\n';
    pipeline = s.pipeline;
  }
  if (pipeline) {
    out << "setup_steps=" << pipeline->setup_steps << '\n';
    out << "hole_search_steps=" << pipeline->hole_search_steps << '\n';
    out << "hole_length=" << pipeline->hole_length << '\n';
    out << "multigraph_nodes=" << pipeline->multigraph_nodes << '\n';
    out << "multigraph_edges=" << pipeline->multigraph_edges << '\n';
    out << "legal_calls=" << pipeline->enumerator.legal_calls << '\n';
    out << "dead_end_calls=" << pipeline->enumerator.dead_end_calls << '\n';
  }
}

RunSummary drive(SolutionSource& source, StepCounter& steps, std::uint64_t limit,
                 const std::function<void(const OrientationBits&)>& sink) {
  RunSummary run;
  const std::uint64_t start = steps.count();
  run.delay = DelayProfile(start);
  while (run.solutions < limit && source.next()) {
    run.delay.record(steps.count());
    ++run.solutions;
    if (sink) sink(source.current());
  }
  run.total_steps = steps.count() - start;
  return run;
}

void add_common(CLI::App* cmd, CliSettings& s, bool output) {
  cmd->add_option("file", s.input, "Edge-list file, '-' for standard input")->required();
  cmd->add_option("--algorithm", s.algorithm, "Enumeration algorithm")
      ->check(CLI::IsMember({"fast", "absorbed", "naive"}));
  cmd->add_option("--hole-strategy", s.hole_strategy, "Hole search strategy")
      ->check(CLI::IsMember({"exact", "fast", "amortized"}));
  if (output) {
    cmd->add_option("--output", s.output, "Solution format")
        ->check(CLI::IsMember({"bits", "arcs", "none"}));
  }
  cmd->add_option("--limit", s.limit, "Stop after N solutions");
  cmd->add_flag("--stats", s.stats, "Print counters as key=value lines on standard error");
  cmd->add_flag("--strict-connected", s.strict_connected, "Reject disconnected input");
  cmd->add_flag("--dump-multigraph", s.dump_multigraph,
                "Print the reduced multigraph on standard error");
}

void dump_multigraph(std::ostream& err, const UndirectedGraph& g) {
  StepCounter steps;
  const Reduction r = reduce(g, steps);
  write_multigraph(err, g, r.multigraph);
}

int run_enumerate(const CliSettings& s, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(s);
  const UndirectedGraph g = load_graph(s);
  if (s.dump_multigraph) dump_multigraph(err, g);
  StepCounter steps;
  auto source = make_source(g, r, steps);
  std::function<void(const OrientationBits&)> sink;
  if (r.output != OutputFormat::None) {
    sink = [&](const OrientationBits& bits) { write_solution(out, g, bits, r.output); };
  }
  const RunSummary run = drive(*source, steps, s.limit, sink);
  out.flush();
  if (s.stats) write_stats(err, *source, run);
  return 0;
}

int run_count(const CliSettings& s, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(s);
  const UndirectedGraph g = load_graph(s);
  if (s.dump_multigraph) dump_multigraph(err, g);
  StepCounter steps;
  auto source = make_source(g, r, steps);
  const RunSummary run = drive(*source, steps, s.limit, nullptr);
  out << run.solutions << '\n';
  if (s.stats) write_stats(err, *source, run);
  return 0;
}

int run_verify(const CliSettings& s, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(s);
  const UndirectedGraph g = load_graph(s);
  if (s.dump_multigraph) dump_multigraph(err, g);
  const VerifyReport report = verify(g, r.algorithm, r.strategy);
  if (report.equal) {
    out << "OK: " << report.oracle_count << " solutions\n";
    return 0;
  }
  out << "MISMATCH: oracle=" << report.oracle_count << " produced=" << report.produced_count
      << " missing=" << report.missing.size() << " extra=" << report.extra.size()
      << " duplicate=" << report.duplicate.size() << '\n';
  constexpr std::size_t kShown = 10;
  const auto show = [&](const char* tag, const std::vector<OrientationBits>& list) {
    for (std::size_t i = 0; i < list.size() && i < kShown; ++i) {
      out << tag << ' ' << list[i].to_string() << '\n';
    }
  };
  show("missing", report.missing);
  show("extra", report.extra);
  show("duplicate", report.duplicate);
  return 2;
}

int run_bench(const CliSettings& s, std::ostream& out, std::ostream& err) {
  const Resolved r = resolve(s);
  const UndirectedGraph g = load_graph(s);
  if (s.dump_multigraph) dump_multigraph(err, g);
  StepCounter steps;
  auto source = make_source(g, r, steps);
  const RunSummary run = drive(*source, steps, s.limit, nullptr);
  out << "nodes=" << g.node_count() << '\n';
  out << "edges=" << g.edge_count() << '\n';
  out << "algorithm=" << to_string(r.algorithm) << '\n';
  out << "hole_strategy=" << to_string(r.strategy) << '\n';
  write_stats(out, *source, run);
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Enumerates the cyclic orientations of an undirected graph"};
  app.require_subcommand(1);
  CliSettings settings;
  auto* enumerate = app.add_subcommand("enumerate", "Stream every cyclic orientation");
  add_common(enumerate, settings, true);
  auto* count = app.add_subcommand("count", "Print the number of cyclic orientations");
  add_common(count, settings, false);
  auto* verify_cmd = app.add_subcommand("verify", "Compare against the brute-force oracle");
  add_common(verify_cmd, settings, false);
  auto* bench = app.add_subcommand("bench", "Run with step instrumentation");
  add_common(bench, settings, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (enumerate->parsed()) return run_enumerate(settings, out, err);
    if (count->parsed()) return run_count(settings, out, err);
    if (verify_cmd->parsed()) return run_verify(settings, out, err);
    return run_bench(settings, out, err);
  } catch (const std::exception& e) {
    out.flush();
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace corient
