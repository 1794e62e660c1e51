#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "boundsyn/logic.hpp"
#include "boundsyn/sat.hpp"

namespace boundsyn {

/// Truth table of an existential over its dependency set. Row r assigns
/// deps[j] the value of bit j of r.
struct SkolemTable {
  std::vector<logic::Var> deps;
  std::vector<char> values;

  bool at(const std::function<bool(logic::Var)>& universal) const;
};

struct Model {
  /// Values of problem variables (partial for external solvers).
  std::map<logic::Var, bool> assignment;
  /// Filled by expansion solving, one table per existential.
  std::map<logic::Var, SkolemTable> skolem;

  bool value(logic::Var v) const;
  /// Skolem value of `v` under a universal assignment; falls back to the
  /// plain assignment for variables without a table.
  bool value(logic::Var v, const std::function<bool(logic::Var)>& universal) const;
};

enum class Verdict { Sat, Unsat, Unknown };

std::string_view to_string(Verdict v);

struct SolveResult {
  Verdict verdict = Verdict::Unknown;
  std::optional<Model> model;
  std::string diagnostics;
};

struct SolveOptions {
  sat::Limits limits;
  /// Upper bound on expansion work: 2^|universals| * |existentials|.
  std::uint64_t expansion_cap = std::uint64_t{1} << 22;
};

/// CDCL on a CNF.
sat::SatResult sat_solve(const logic::Cnf& cnf, const sat::Limits& limits = {});

/// Purely existential problem through Tseitin and the CDCL core.
SolveResult solve_sat_problem(const logic::QuantifiedProblem& problem, const SolveOptions& options = {});

/// Prenex QBF by full universal expansion. Each existential is copied once
/// per assignment of the universals quantified before it.
SolveResult qbf_solve_expand(const logic::QuantifiedProblem& problem, const SolveOptions& options = {});

/// DQBF by full universal expansion. Each existential is copied once per
/// assignment of exactly its dependency set.
SolveResult dqbf_solve_expand(const logic::QuantifiedProblem& problem, const SolveOptions& options = {});

/// Dispatches on the fragment.
SolveResult solve_internal(const logic::QuantifiedProblem& problem, const SolveOptions& options = {});

/// Writes the problem in its matching format to a temporary file, runs
/// `command` with "{}" replaced by the file path, and reads the verdict from
/// the exit status (10 SAT, 20 UNSAT) and any "v" lines.
SolveResult external_solve(const logic::QuantifiedProblem& problem, const std::string& command);

/// Replaces the outermost existential block by the values in `model` and
/// drops that block from the prefix.
logic::QuantifiedProblem instantiate_outer(const logic::QuantifiedProblem& problem, const Model& model);

}  // namespace boundsyn
