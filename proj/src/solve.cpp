#include "boundsyn/solve.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace boundsyn {

using logic::Formula;
using logic::FormulaStore;
using logic::QuantifiedProblem;
using logic::Var;

bool SkolemTable::at(const std::function<bool(Var)>& universal) const {
  std::size_t row = 0;
  for (std::size_t j = 0; j < deps.size(); ++j) {
    if (universal(deps[j])) row |= std::size_t{1} << j;
  }
  return values.at(row) != 0;
}

bool Model::value(Var v) const {
  auto it = assignment.find(v);
  return it != assignment.end() && it->second;
}

bool Model::value(Var v, const std::function<bool(Var)>& universal) const {
  auto it = skolem.find(v);
  if (it != skolem.end()) return it->second.at(universal);
  return value(v);
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Sat: return "SAT";
    case Verdict::Unsat: return "UNSAT";
    case Verdict::Unknown: return "UNKNOWN";
  }
  return "?";
}

sat::SatResult sat_solve(const logic::Cnf& cnf, const sat::Limits& limits) { return sat::solve_cnf(cnf, limits); }

namespace {

SolveResult unknown(std::string why) {
  SolveResult r;
  r.verdict = Verdict::Unknown;
  r.diagnostics = std::move(why);
  return r;
}

}  // namespace

SolveResult solve_sat_problem(const QuantifiedProblem& problem, const SolveOptions& options) {
  problem.validate();
  if (problem.fragment() != logic::Fragment::Sat) throw Error("solve_sat_problem: problem has universal variables");
  const auto cnf = logic::clausify(*problem.store, problem.matrix).cnf;
  const auto sat = sat_solve(cnf, options.limits);
  SolveResult result;
  if (sat.status == sat::Status::Unknown) return unknown("SAT search stopped by its limits");
  result.verdict = sat.status == sat::Status::Sat ? Verdict::Sat : Verdict::Unsat;
  if (result.verdict == Verdict::Sat) {
    Model model;
    for (Var v = 1; v <= problem.store->num_vars(); ++v) model.assignment[v] = v < sat.model.size() && sat.model[v];
    result.model = std::move(model);
  }
  return result;
}

namespace {

/// Expands all universals; `deps` gives each existential's dependency set.
SolveResult expand_and_solve(const QuantifiedProblem& problem, const std::map<Var, std::vector<Var>>& deps,
                             const SolveOptions& options) {
  const std::vector<Var> universals = problem.universals();
  const std::vector<Var> existentials = problem.existentials();
  const std::size_t nu = universals.size();
  if (nu > 40) throw ResourceError("expansion: " + std::to_string(nu) + " universal variables");
  const std::uint64_t assignments = std::uint64_t{1} << nu;
  const std::uint64_t work = assignments * std::max<std::uint64_t>(1, existentials.size());
  if (work > options.expansion_cap) {
    throw ResourceError("expansion needs " + std::to_string(work) + " copies, cap is " +
                        std::to_string(options.expansion_cap));
  }

  const FormulaStore& source = *problem.store;
  std::vector<int> universal_pos(source.num_vars() + 1, -1);
  for (std::size_t j = 0; j < nu; ++j) universal_pos[universals[j]] = static_cast<int>(j);
  struct Copies {
    std::vector<int> dep_pos;
    std::vector<Var> vars;  // 0 = not yet created
  };
  std::vector<Copies> copies(source.num_vars() + 1);
  for (Var e : existentials) {
    const auto& d = deps.at(e);
    copies[e].dep_pos.reserve(d.size());
    for (Var u : d) copies[e].dep_pos.push_back(universal_pos.at(u));
    copies[e].vars.assign(std::size_t{1} << d.size(), 0);
  }

  FormulaStore target;
  std::vector<Formula> roots;
  roots.reserve(assignments);
  for (std::uint64_t alpha = 0; alpha < assignments; ++alpha) {
    if (options.limits.stop && options.limits.stop->load()) return unknown("expansion stopped");
    auto mapping = [&](Var v) -> Formula {
      const int up = universal_pos[v];
      if (up >= 0) return target.constant(((alpha >> up) & 1u) != 0);
      Copies& c = copies[v];
      std::size_t row = 0;
      for (std::size_t j = 0; j < c.dep_pos.size(); ++j) {
        if ((alpha >> c.dep_pos[j]) & 1u) row |= std::size_t{1} << j;
      }
      Var& copy = c.vars[row];
      if (copy == 0) copy = target.new_var(logic::VarRole::Aux, source.var_info(v).name + "@" + std::to_string(row));
      return target.var(copy);
    };
    const Formula root = target.import(source, problem.matrix, mapping);
    if (target.is_const(root, false)) {
      SolveResult r;
      r.verdict = Verdict::Unsat;
      return r;
    }
    roots.push_back(root);
  }

  const auto cnf = logic::clausify(target, target.land(std::move(roots))).cnf;
  const auto sat = sat_solve(cnf, options.limits);
  if (sat.status == sat::Status::Unknown) return unknown("SAT search stopped by its limits");
  SolveResult result;
  result.verdict = sat.status == sat::Status::Sat ? Verdict::Sat : Verdict::Unsat;
  if (result.verdict == Verdict::Sat) {
    Model model;
    for (Var e : existentials) {
      SkolemTable table;
      table.deps = deps.at(e);
      table.values.resize(copies[e].vars.size(), 0);
      for (std::size_t row = 0; row < table.values.size(); ++row) {
        const Var copy = copies[e].vars[row];
        table.values[row] = copy != 0 && copy < sat.model.size() && sat.model[copy] ? 1 : 0;
      }
      if (table.deps.empty()) model.assignment[e] = table.values[0] != 0;
      model.skolem.emplace(e, std::move(table));
    }
    result.model = std::move(model);
  }
  return result;
}

}  // namespace

SolveResult qbf_solve_expand(const QuantifiedProblem& problem, const SolveOptions& options) {
  problem.validate();
  if (problem.fragment() == logic::Fragment::Dqbf) throw Error("qbf_solve_expand: problem has a dependency map");
  std::map<Var, std::vector<Var>> deps;
  std::vector<Var> seen;
  for (const auto& block : problem.prefix) {
    if (block.quantifier == logic::Quantifier::Forall) {
      seen.insert(seen.end(), block.vars.begin(), block.vars.end());
      std::sort(seen.begin(), seen.end());
    } else {
      for (Var v : block.vars) deps[v] = seen;
    }
  }
  return expand_and_solve(problem, deps, options);
}

SolveResult dqbf_solve_expand(const QuantifiedProblem& problem, const SolveOptions& options) {
  problem.validate();
  if (problem.fragment() != logic::Fragment::Dqbf) throw Error("dqbf_solve_expand: problem has no dependency map");
  std::map<Var, std::vector<Var>> deps = *problem.dependencies;
  for (auto& [v, d] : deps) std::sort(d.begin(), d.end());
  return expand_and_solve(problem, deps, options);
}

SolveResult solve_internal(const QuantifiedProblem& problem, const SolveOptions& options) {
  switch (problem.fragment()) {
    case logic::Fragment::Sat: return solve_sat_problem(problem, options);
    case logic::Fragment::Qbf: return qbf_solve_expand(problem, options);
    case logic::Fragment::Dqbf: return dqbf_solve_expand(problem, options);
  }
  throw Error("unknown fragment");
}

namespace {

class TempFile {
 public:
  explicit TempFile(const std::string& suffix_hint) {
    const char* dir = std::getenv("TMPDIR");
    path_ = std::string(dir && *dir ? dir : "/tmp") + "/boundsyn-" + suffix_hint + "-XXXXXX";
    std::vector<char> buf(path_.begin(), path_.end());
    buf.push_back('\0');
    const int fd = ::mkstemp(buf.data());
    if (fd < 0) throw Error("cannot create temporary file in " + std::string(dir && *dir ? dir : "/tmp"));
    ::close(fd);
    path_ = buf.data();
  }
  ~TempFile() { std::remove(path_.c_str()); }
  TempFile(const TempFile&) = delete;
  TempFile& operator=(const TempFile&) = delete;
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string shell_quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) {
    if (c == '\'') out += "'\\''";
    else out += c;
  }
  return out + "'";
}

}  // namespace

SolveResult external_solve(const QuantifiedProblem& problem, const std::string& command) {
  if (command.find("{}") == std::string::npos) throw Error("solver command must contain {} for the problem file");
  const std::string text = logic::emit_matching(problem);
  TempFile input("problem");
  TempFile errors("stderr");
  {
    std::ofstream out(input.path(), std::ios::binary);
    out << text;
    if (!out) throw Error("cannot write " + input.path());
  }
  std::string cmd;
  for (std::size_t pos = 0; pos < command.size();) {
    if (command.compare(pos, 2, "{}") == 0) {
      cmd += shell_quote(input.path());
      pos += 2;
    } else {
      cmd += command[pos++];
    }
  }
  cmd = "(" + cmd + ") 2>" + shell_quote(errors.path());
  std::fflush(nullptr);
  FILE* pipe = ::popen(cmd.c_str(), "r");
  if (!pipe) throw Error("cannot spawn solver command: " + command);
  std::string stdout_text;
  char buf[4096];
  std::size_t got = 0;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) stdout_text.append(buf, got);
  const int status = ::pclose(pipe);
  if (status == -1) throw Error("cannot wait for solver command: " + command);
  const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  if (code == 127) throw Error("solver command not found: " + command + "\n" + slurp(errors.path()));

  SolveResult result;
  if (code == 20) {
    result.verdict = Verdict::Unsat;
    return result;
  }
  if (code != 10) {
    result.verdict = Verdict::Unknown;
    result.diagnostics = "solver exited with status " + std::to_string(code) + "\n" + slurp(errors.path());
    return result;
  }
  result.verdict = Verdict::Sat;
  Model model;
  bool any = false;
  std::istringstream lines(stdout_text);
  std::string line;
  const long max_var = problem.store->num_vars();
  while (std::getline(lines, line)) {
    if (line.empty() || (line[0] != 'v' && line[0] != 'V')) continue;
    std::istringstream tokens(line.substr(1));
    std::string tok;
    while (tokens >> tok) {
      char* end = nullptr;
      const long lit = std::strtol(tok.c_str(), &end, 10);
      if (*end != '\0') {
        result.verdict = Verdict::Unknown;
        result.diagnostics = "unparseable model line: " + line + "\n" + slurp(errors.path());
        return result;
      }
      if (lit == 0) continue;
      const long v = std::labs(lit);
      if (v <= max_var) {
        model.assignment[static_cast<Var>(v)] = lit > 0;
        any = true;
      }
    }
  }
  if (any) result.model = std::move(model);
  return result;
}

QuantifiedProblem instantiate_outer(const QuantifiedProblem& problem, const Model& model) {
  problem.validate();
  if (problem.prefix.empty() || problem.prefix.front().quantifier != logic::Quantifier::Exists) {
    throw Error("instantiate_outer: prefix does not start with an existential block");
  }
  if (problem.dependencies) throw Error("instantiate_outer: expects a prenex problem");
  const FormulaStore& source = *problem.store;
  auto store = std::make_shared<FormulaStore>();
  for (Var v = 1; v <= source.num_vars(); ++v) store->new_var(source.var_info(v).role, source.var_info(v).name);
  std::vector<char> fixed(source.num_vars() + 1, 0);
  for (Var v : problem.prefix.front().vars) fixed[v] = 1;
  QuantifiedProblem out;
  out.store = store;
  out.matrix = store->import(source, problem.matrix,
                             [&](Var v) { return fixed[v] ? store->constant(model.value(v)) : store->var(v); });
  out.prefix.assign(problem.prefix.begin() + 1, problem.prefix.end());
  return out;
}

}  // namespace boundsyn
