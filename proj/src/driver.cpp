#include "boundsyn/driver.hpp"

#include <chrono>
#include <exception>
#include <mutex>
#include <thread>

#include "boundsyn/extract.hpp"
#include "boundsyn/verify.hpp"

namespace boundsyn {

using logic::Var;

void RunConfig::validate() const {
  if (max_bound < 1) throw Error("--max-bound must be at least 1");
  if (!solver_command.empty() && mode == Mode::Synthesis &&
      (encoding == EncodingKind::StateSymbolic || encoding == EncodingKind::FullySymbolic)) {
    throw Error("synthesis with a symbolic encoding needs the internal solver (drop --solver-cmd)");
  }
}

Game system_game(const Specification& spec, Semantics semantics) {
  return Game{false, semantics, ltl_to_ucw(spec.formula(), spec.inputs, spec.outputs)};
}

Game environment_game(const Specification& spec, Semantics system_semantics) {
  return Game{true, dual(system_semantics), ltl_to_ucw(ltl::negate(spec.formula()), spec.outputs, spec.inputs)};
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

Model external_model(const Encoding& enc, const SolveResult& first, const SolveOptions& options) {
  if (!first.model) throw Error("external solver reported SAT without a model; cannot extract a system");
  if (enc.directory.kind == EncodingKind::Basic) return *first.model;
  // Input-symbolic: fix the outer block, solve the remaining 2QBF internally.
  const auto inner = instantiate_outer(enc.problem, *first.model);
  auto second = qbf_solve_expand(inner, options);
  if (second.verdict != Verdict::Sat || !second.model) {
    throw Error("outer assignment reported by the external solver does not extend to a solution");
  }
  Model merged = std::move(*second.model);
  for (Var v : enc.problem.prefix.front().vars) merged.assignment[v] = first.model->value(v);
  return merged;
}

}  // namespace

BoundResult solve_bound(const Game& game, int bound, const RunConfig& config, bool synthesize,
                        const std::atomic<bool>* stop) {
  const auto start = std::chrono::steady_clock::now();
  const Encoding enc = encode(config.encoding, game.automaton, bound, game.semantics, config.scc_reduction);
  BoundResult out;
  out.profile = logic::count_profile(enc.problem);
  SolveOptions options = config.solve;
  if (stop) options.limits.stop = stop;
  SolveResult result;
  if (config.solver_command.empty()) {
    result = solve_internal(enc.problem, options);
  } else {
    result = external_solve(enc.problem, config.solver_command);
  }
  out.verdict = result.verdict;
  if (synthesize && result.verdict == Verdict::Sat) {
    const Model model = config.solver_command.empty() ? *result.model : external_model(enc, result, options);
    TransitionSystem ts = extract(model, enc.directory);
    const auto check = model_check(ts, game.automaton);
    if (!check) {
      throw Error(std::string("internal error: extracted ") + (game.environment ? "counter-strategy" : "system") +
                  " fails model checking");
    }
    out.system = std::move(ts);
  }
  out.seconds = seconds_since(start);
  return out;
}

std::vector<int> bound_schedule(SearchStrategy strategy, int max_bound) {
  std::vector<int> bounds;
  if (strategy == SearchStrategy::Linear) {
    for (int b = 1; b <= max_bound; ++b) bounds.push_back(b);
    return bounds;
  }
  for (int b = 1; b <= max_bound; b *= 2) {
    bounds.push_back(b);
    if (b > max_bound / 2) break;
  }
  if (bounds.back() != max_bound) bounds.push_back(max_bound);
  return bounds;
}

std::string_view to_string(Outcome outcome) {
  switch (outcome) {
    case Outcome::Realizable: return "REALIZABLE";
    case Outcome::Unrealizable: return "UNREALIZABLE";
    case Outcome::Undetermined: return "UNKNOWN";
  }
  return "?";
}

namespace {

struct Winner {
  const Game* game = nullptr;
  int bound = 0;
  std::optional<TransitionSystem> system;
};

class SearchLog {
 public:
  void add(const Game& game, int bound, const BoundResult& r) {
    std::lock_guard<std::mutex> lock(mutex_);
    attempts_.push_back({game.environment, bound, r.verdict, r.seconds});
  }
  bool known_unsat(const Game& game, int bound) const {
    std::lock_guard<std::mutex> lock(mutex_);
    for (const auto& a : attempts_) {
      if (a.environment == game.environment && a.bound == bound && a.verdict == Verdict::Unsat) return true;
    }
    return false;
  }
  std::vector<Attempt> take() { return std::move(attempts_); }

 private:
  mutable std::mutex mutex_;
  std::vector<Attempt> attempts_;
};

void minimize(Winner& w, const RunConfig& config, bool synthesize, SearchLog& log) {
  for (int b = w.bound - 1; b >= 1; --b) {
    if (log.known_unsat(*w.game, b)) break;
    auto r = solve_bound(*w.game, b, config, synthesize);
    log.add(*w.game, b, r);
    if (r.verdict != Verdict::Sat) break;
    w.bound = b;
    w.system = std::move(r.system);
  }
}

}  // namespace

SearchResult search_realizability(const Specification& spec, const RunConfig& config) {
  config.validate();
  const Semantics semantics = config.semantics.value_or(spec.semantics);
  const bool synthesize = config.mode == Mode::Synthesis;
  std::vector<Game> games;
  games.push_back(system_game(spec, semantics));
  if (config.counter_strategy) games.push_back(environment_game(spec, semantics));
  const auto schedule = bound_schedule(config.search, config.max_bound);

  SearchLog log;
  std::optional<Winner> winner;
  if (config.parallel && games.size() > 1) {
    std::atomic<bool> stop{false};
    std::mutex mutex;
    std::exception_ptr failure;
    auto worker = [&](const Game& game) {
      try {
        for (int b : schedule) {
          if (stop.load()) return;
          auto r = solve_bound(game, b, config, synthesize, &stop);
          log.add(game, b, r);
          if (r.verdict == Verdict::Sat) {
            std::lock_guard<std::mutex> lock(mutex);
            if (!winner) winner = Winner{&game, b, std::move(r.system)};
            stop = true;
            return;
          }
        }
      } catch (...) {
        std::lock_guard<std::mutex> lock(mutex);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    };
    std::thread env_thread(worker, std::cref(games[1]));
    worker(games[0]);
    env_thread.join();
    if (failure && !winner) std::rethrow_exception(failure);
  } else {
    for (int b : schedule) {
      for (const Game& game : games) {
        auto r = solve_bound(game, b, config, synthesize);
        log.add(game, b, r);
        if (r.verdict == Verdict::Sat) {
          winner = Winner{&game, b, std::move(r.system)};
          break;
        }
      }
      if (winner) break;
    }
  }

  SearchResult result;
  if (!winner) {
    result.outcome = Outcome::Undetermined;
    result.bound = config.max_bound;
  } else {
    if (config.minimize) minimize(*winner, config, synthesize, log);
    result.outcome = winner->game->environment ? Outcome::Unrealizable : Outcome::Realizable;
    result.bound = winner->bound;
    result.system = std::move(winner->system);
  }
  result.attempts = log.take();
  return result;
}

std::string emit_problem(const Specification& spec, const RunConfig& config, int bound, std::string_view format) {
  const Game game = system_game(spec, config.semantics.value_or(spec.semantics));
  const Encoding enc = encode(config.encoding, game.automaton, bound, game.semantics, config.scc_reduction);
  if (format == "dimacs") return logic::emit_dimacs(enc.problem);
  if (format == "qdimacs") return logic::emit_qdimacs(enc.problem);
  if (format == "dqdimacs") return logic::emit_dqdimacs(enc.problem);
  throw Error("unknown emit format \"" + std::string(format) + "\" (expected dimacs, qdimacs or dqdimacs)");
}

std::string render(const TransitionSystem& ts, OutputFormat format) {
  return format == OutputFormat::Dot ? to_dot(ts) : to_aiger(ts);
}

}  // namespace boundsyn
