// Command-line front end: realizability checking, synthesis and problem emission.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "boundsyn/driver.hpp"
#include "boundsyn/verify.hpp"

namespace {

constexpr int kExitRealizable = 10;
constexpr int kExitUnrealizable = 20;
constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitResource = 2;

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw boundsyn::Error("cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
  using namespace boundsyn;
  CLI::App app{"Bounded synthesis of Mealy/Moore machines from LTL specifications"};
  std::string spec_path;
  std::string encoding = "basic";
  std::string mode = "realizability";
  std::string semantics;
  std::string search = "exponential";
  int max_bound = 8;
  bool minimize = false;
  std::string solver_cmd;
  bool no_scc_reduction = false;
  std::string counter = "auto";
  std::string emit;
  int bound = 1;
  std::string output;
  std::string format = "aag";
  bool parallel = false;
  std::string ucw_dot;
  std::uint64_t expansion_cap = std::uint64_t{1} << 22;
  long long max_conflicts = -1;
  bool verbose = false;

  app.add_option("spec", spec_path, "JSON specification file")->required();
  app.add_option("--encoding", encoding, "basic | input | state | full")
      ->check(CLI::IsMember({"basic", "input", "state", "full"}));
  app.add_option("--mode", mode, "realizability | synthesis")->check(CLI::IsMember({"realizability", "synthesis"}));
  app.add_option("--semantics", semantics, "override: mealy | moore")->check(CLI::IsMember({"mealy", "moore"}));
  app.add_option("--search", search, "exponential | linear")->check(CLI::IsMember({"exponential", "linear"}));
  app.add_option("--max-bound", max_bound, "largest bound tried")->check(CLI::PositiveNumber);
  app.add_flag("--minimize", minimize, "after success, lower the bound while still satisfiable");
  app.add_option("--solver-cmd", solver_cmd, "external solver command; {} is replaced by the problem file");
  app.add_flag("--no-scc-reduction", no_scc_reduction, "keep rank counters for every automaton state");
  app.add_option("--counter-strategy", counter, "auto | off")->check(CLI::IsMember({"auto", "off"}));
  app.add_option("--emit", emit, "write the encoding instead of solving: dimacs | qdimacs | dqdimacs")
      ->check(CLI::IsMember({"dimacs", "qdimacs", "dqdimacs"}));
  app.add_option("--bound", bound, "bound used with --emit")->check(CLI::PositiveNumber);
  app.add_option("--output,-o", output, "artifact path (stdout when omitted)");
  app.add_option("--format", format, "dot | aag")->check(CLI::IsMember({"dot", "aag"}));
  app.add_flag("--parallel", parallel, "run the counter-strategy search on its own thread");
  app.add_option("--dump-ucw", ucw_dot, "write the specification automaton as dot");
  app.add_option("--expansion-cap", expansion_cap, "limit on QBF/DQBF expansion work");
  app.add_option("--max-conflicts", max_conflicts, "conflict budget per SAT call (negative: none)");
  app.add_flag("--verbose,-v", verbose, "per-bound log on stderr");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  RunConfig config;
  try {
    config.encoding = parse_encoding_kind(encoding);
    config.mode = mode == "synthesis" ? Mode::Synthesis : Mode::Realizability;
    if (!emit.empty()) config.mode = Mode::EmitOnly;
    if (!semantics.empty()) config.semantics = semantics == "moore" ? Semantics::Moore : Semantics::Mealy;
    config.search = search == "linear" ? SearchStrategy::Linear : SearchStrategy::Exponential;
    config.max_bound = max_bound;
    config.minimize = minimize;
    config.solver_command = solver_cmd;
    config.scc_reduction = !no_scc_reduction;
    config.counter_strategy = counter == "auto";
    config.parallel = parallel;
    config.format = format == "dot" ? OutputFormat::Dot : OutputFormat::Aag;
    config.solve.expansion_cap = expansion_cap;
    config.solve.limits.max_conflicts = max_conflicts;
    config.validate();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  Specification spec;
  try {
    spec = load_specification(spec_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (!ucw_dot.empty()) {
      const Game game = system_game(spec, config.semantics.value_or(spec.semantics));
      write_text(ucw_dot, game.automaton.to_dot());
    }
    if (config.mode == Mode::EmitOnly) {
      write_text(output, emit_problem(spec, config, bound, emit));
      return kExitOk;
    }
    const SearchResult result = search_realizability(spec, config);
    if (verbose) {
      for (const auto& a : result.attempts) {
        std::cerr << (a.environment ? "environment" : "system") << " bound " << a.bound << ": "
                  << to_string(a.verdict) << " (" << a.seconds << " s)\n";
      }
    }
    std::cout << to_string(result.outcome) << '\n';
    if (result.outcome == Outcome::Undetermined) {
      std::cerr << "no decision up to bound " << result.bound << '\n';
      return kExitResource;
    }
    std::cerr << (result.outcome == Outcome::Realizable ? "system" : "counter-strategy") << " bound "
              << result.bound << '\n';
    if (result.system) write_text(output, render(*result.system, config.format));
    return result.outcome == Outcome::Realizable ? kExitRealizable : kExitUnrealizable;
  } catch (const ResourceError& e) {
    std::cout << "UNKNOWN\n";
    std::cerr << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}
