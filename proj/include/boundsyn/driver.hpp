#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "boundsyn/automaton.hpp"
#include "boundsyn/encode.hpp"
#include "boundsyn/solve.hpp"
#include "boundsyn/spec_file.hpp"
#include "boundsyn/system.hpp"

namespace boundsyn {

enum class Mode { Realizability, Synthesis, EmitOnly };
enum class SearchStrategy { Exponential, Linear };
enum class OutputFormat { Dot, Aag };

struct RunConfig {
  EncodingKind encoding = EncodingKind::Basic;
  Mode mode = Mode::Realizability;
  std::optional<Semantics> semantics;  // overrides the specification file
  SearchStrategy search = SearchStrategy::Exponential;
  int max_bound = 8;
  bool minimize = false;
  /// External solver command with "{}" for the problem file; empty = internal.
  std::string solver_command;
  bool scc_reduction = true;
  bool counter_strategy = true;
  /// Run the system and environment searches on two threads.
  bool parallel = false;
  OutputFormat format = OutputFormat::Aag;
  SolveOptions solve;

  /// Throws Error on contradictory settings.
  void validate() const;
};

/// One side of the search: an automaton and the semantics of the machine
/// that has to be found.
struct Game {
  bool environment = false;
  Semantics semantics;
  Ucw automaton;
};

/// The specification automaton over (inputs, outputs).
Game system_game(const Specification& spec, Semantics semantics);
/// The negated specification with inputs and outputs swapped and the dual
/// semantics, realized by an environment counter-strategy.
Game environment_game(const Specification& spec, Semantics system_semantics);

struct BoundResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<TransitionSystem> system;
  double seconds = 0;
  logic::CountProfile profile;
};

/// Encodes and solves one bound. With `synthesize`, extracts the machine and
/// checks it against the game automaton (an Error if that check fails).
BoundResult solve_bound(const Game& game, int bound, const RunConfig& config, bool synthesize,
                        const std::atomic<bool>* stop = nullptr);

std::vector<int> bound_schedule(SearchStrategy strategy, int max_bound);

enum class Outcome { Realizable, Unrealizable, Undetermined };

std::string_view to_string(Outcome outcome);

struct Attempt {
  bool environment = false;
  int bound = 0;
  Verdict verdict = Verdict::Unknown;
  double seconds = 0;
};

struct SearchResult {
  Outcome outcome = Outcome::Undetermined;
  /// Realizing bound, environment bound, or the exhausted maximum.
  int bound = 0;
  /// The system (Realizable) or counter-strategy (Unrealizable) in synthesis mode.
  std::optional<TransitionSystem> system;
  std::vector<Attempt> attempts;
};

/// Interleaves the system search with the counter-strategy search over the
/// bound schedule; the first satisfiable side decides.
SearchResult search_realizability(const Specification& spec, const RunConfig& config);

/// The encoded problem at `bound` in its matching clause format.
std::string emit_problem(const Specification& spec, const RunConfig& config, int bound, std::string_view format);

/// dot or aag text.
std::string render(const TransitionSystem& ts, OutputFormat format);

}  // namespace boundsyn
