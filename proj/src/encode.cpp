#include "boundsyn/encode.hpp"

#include <algorithm>
#include <unordered_map>

namespace boundsyn {

using logic::BitVec;
using logic::Formula;
using logic::FormulaStore;
using logic::Quantifier;
using logic::Var;
using logic::VarRole;

std::string_view to_string(EncodingKind kind) {
  switch (kind) {
    case EncodingKind::Basic: return "basic";
    case EncodingKind::InputSymbolic: return "input";
    case EncodingKind::StateSymbolic: return "state";
    case EncodingKind::FullySymbolic: return "full";
  }
  return "?";
}

EncodingKind parse_encoding_kind(std::string_view text) {
  if (text == "basic") return EncodingKind::Basic;
  if (text == "input") return EncodingKind::InputSymbolic;
  if (text == "state") return EncodingKind::StateSymbolic;
  if (text == "full") return EncodingKind::FullySymbolic;
  throw Error("unknown encoding \"" + std::string(text) + "\" (expected basic, input, state or full)");
}

std::vector<Var> VarDirectory::all_vars() const {
  std::vector<Var> vars;
  auto add = [&](const std::vector<Var>& vs) { vars.insert(vars.end(), vs.begin(), vs.end()); };
  for (const auto& row : lam_b) add(row);
  for (const auto& row : lam_num) {
    for (const auto& bits : row) add(bits);
  }
  for (const auto& row : tau) {
    for (const auto& cell : row) add(cell);
  }
  for (const auto& row : out) {
    for (const auto& cell : row) add(cell);
  }
  add(input_vars);
  add(state_vars);
  add(next_state_vars);
  add(aut_vars);
  add(next_aut_vars);
  add(sym_lam_b);
  for (const auto& bits : sym_lam_num) add(bits);
  add(sym_lam_b_next);
  for (const auto& bits : sym_lam_num_next) add(bits);
  add(tau_bits);
  add(out_funcs);
  return vars;
}

Formula guard_formula(FormulaStore& store, const Guard& guard, const std::vector<Formula>& atoms) {
  std::vector<Formula> disjuncts;
  disjuncts.reserve(guard.cubes.size());
  for (const Cube& cube : guard.cubes) {
    std::vector<Formula> lits;
    lits.reserve(cube.size());
    for (const Literal& l : cube) {
      const Formula a = atoms.at(l.atom);
      lits.push_back(l.positive ? a : store.lnot(a));
    }
    disjuncts.push_back(store.land(std::move(lits)));
  }
  return store.lor(std::move(disjuncts));
}

namespace {

std::vector<Formula> input_constants(const FormulaStore& store, const Alphabet& alphabet, Valuation in) {
  std::vector<Formula> atoms;
  for (int j = 0; j < alphabet.num_inputs(); ++j) atoms.push_back(store.constant(((in >> j) & 1u) != 0));
  return atoms;
}

}  // namespace

Formula specialize_guard(FormulaStore& store, const Ucw& automaton, int q, int q2, Valuation in,
                         const std::vector<Formula>& outvars) {
  const Guard* guard = automaton.guard(q, q2);
  if (!guard) return store.constant(false);
  auto atoms = input_constants(store, automaton.alphabet(), in);
  if (static_cast<int>(outvars.size()) != automaton.alphabet().num_outputs()) {
    throw Error("specialize_guard: one formula per output atom required");
  }
  atoms.insert(atoms.end(), outvars.begin(), outvars.end());
  return guard_formula(store, *guard, atoms);
}

namespace {

std::string idx(std::initializer_list<int> parts) {
  std::string s = "[";
  bool first = true;
  for (int p : parts) {
    if (!first) s += ',';
    s += std::to_string(p);
    first = false;
  }
  return s + "]";
}

BitVec as_bitvec(FormulaStore& store, const std::vector<Var>& vars) {
  BitVec bv;
  for (Var v : vars) bv.bits.push_back(store.var(v));
  return bv;
}

std::vector<Var> fresh_vars(FormulaStore& store, int count, VarRole role, const std::string& name) {
  std::vector<Var> vars;
  for (int b = 0; b < count; ++b) vars.push_back(store.new_var(role, name + "[" + std::to_string(b) + "]"));
  return vars;
}

std::vector<Var> sorted_union(std::vector<Var> a, const std::vector<Var>& b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  a.erase(std::unique(a.begin(), a.end()), a.end());
  return a;
}

void check_bound(int bound) {
  if (bound < 1) throw Error("bound must be at least 1");
  if (bound > (1 << 20)) throw Error("bound too large");
}

VarDirectory make_directory(EncodingKind kind, const Alphabet& alphabet, int bound, int automaton_states,
                            Semantics semantics, int counter_bits) {
  VarDirectory dir;
  dir.kind = kind;
  dir.semantics = semantics;
  dir.bound = bound;
  dir.automaton_states = automaton_states;
  dir.counter_bits = counter_bits;
  dir.inputs = alphabet.inputs;
  dir.outputs = alphabet.outputs;
  return dir;
}

/// Annotation tables shared by the two explicit encodings.
void allocate_annotation(FormulaStore& store, VarDirectory& dir, const Ucw& automaton, const SccInfo& scc, int n) {
  const int m = automaton.num_states();
  dir.lam_b.assign(n, std::vector<Var>(m));
  dir.lam_num.assign(n, std::vector<std::vector<Var>>(m));
  for (int t = 0; t < n; ++t) {
    for (int q = 0; q < m; ++q) dir.lam_b[t][q] = store.new_var(VarRole::Reach, "lamB" + idx({t, q}));
  }
  for (int t = 0; t < n; ++t) {
    for (int q = 0; q < m; ++q) {
      if (scc.counted[q]) dir.lam_num[t][q] = fresh_vars(store, scc.counter_bits, VarRole::Rank, "lamN" + idx({t, q}));
    }
  }
}

/// Rank condition on the edge (t,q) -> (t2,q2); true when no comparison is kept.
Formula rank_condition(FormulaStore& store, const VarDirectory& dir, const Ucw& automaton, const SccInfo& scc, int t,
                       int q, int t2, int q2) {
  if (!scc.counted[q] || !scc.counted[q2] || !scc.same_scc(q, q2)) return store.constant(true);
  return logic::bv_greater(store, as_bitvec(store, dir.lam_num[t2][q2]), as_bitvec(store, dir.lam_num[t][q]),
                           automaton.rejecting(q2));
}

void push_block(logic::QuantifiedProblem& problem, Quantifier quantifier, std::vector<Var> vars) {
  if (vars.empty()) return;
  if (!problem.prefix.empty() && problem.prefix.back().quantifier == quantifier) {
    auto& block = problem.prefix.back().vars;
    block.insert(block.end(), vars.begin(), vars.end());
    return;
  }
  problem.prefix.push_back({quantifier, std::move(vars)});
}

}  // namespace

Encoding encode_basic(const Ucw& automaton, int n, Semantics semantics, const SccInfo& scc) {
  check_bound(n);
  const Alphabet& alphabet = automaton.alphabet();
  if (alphabet.num_inputs() > 20) throw ResourceError("basic encoding: too many inputs");
  auto store = std::make_shared<FormulaStore>();
  FormulaStore& s = *store;
  Encoding enc;
  VarDirectory& dir = enc.directory;
  dir = make_directory(EncodingKind::Basic, alphabet, n, automaton.num_states(), semantics, scc.counter_bits);
  const int m = automaton.num_states();
  const int valuations = 1 << alphabet.num_inputs();
  const int out_slots = semantics == Semantics::Mealy ? valuations : 1;

  allocate_annotation(s, dir, automaton, scc, n);
  dir.tau.assign(n, std::vector<std::vector<Var>>(valuations, std::vector<Var>(n)));
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < valuations; ++i) {
      for (int t2 = 0; t2 < n; ++t2) dir.tau[t][i][t2] = s.new_var(VarRole::Transition, "tau" + idx({t, i, t2}));
    }
  }
  dir.out.assign(n, std::vector<std::vector<Var>>(out_slots, std::vector<Var>(alphabet.num_outputs())));
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < out_slots; ++i) {
      for (int o = 0; o < alphabet.num_outputs(); ++o) {
        const std::string name = alphabet.outputs[o] + (semantics == Semantics::Mealy ? idx({t, i}) : idx({t}));
        dir.out[t][i][o] = s.new_var(VarRole::Output, name);
      }
    }
  }

  std::vector<Formula> parts;
  parts.push_back(s.var(dir.lam_b[0][automaton.initial()]));
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < valuations; ++i) {
      std::vector<Formula> succ;
      for (int t2 = 0; t2 < n; ++t2) succ.push_back(s.var(dir.tau[t][i][t2]));
      parts.push_back(s.lor(std::move(succ)));
    }
  }
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < valuations; ++i) {
      std::vector<Formula> outvars;
      for (Var v : dir.out[t][semantics == Semantics::Mealy ? i : 0]) outvars.push_back(s.var(v));
      for (int q = 0; q < m; ++q) {
        const Formula reach = s.var(dir.lam_b[t][q]);
        for (const UcwEdge& edge : automaton.edges(q)) {
          const Formula d = specialize_guard(s, automaton, q, edge.target, static_cast<Valuation>(i), outvars);
          if (s.is_const(d, false)) continue;
          for (int t2 = 0; t2 < n; ++t2) {
            const Formula conclusion = s.land(s.var(dir.lam_b[t2][edge.target]),
                                              rank_condition(s, dir, automaton, scc, t, q, t2, edge.target));
            parts.push_back(s.lor({s.lnot(reach), s.lnot(d), s.lnot(s.var(dir.tau[t][i][t2])), conclusion}));
          }
        }
      }
    }
  }

  enc.problem.store = store;
  enc.problem.matrix = s.land(std::move(parts));
  std::vector<Var> all;
  for (Var v = 1; v <= s.num_vars(); ++v) all.push_back(v);
  push_block(enc.problem, Quantifier::Exists, std::move(all));
  return enc;
}

Encoding encode_input_symbolic(const Ucw& automaton, int n, Semantics semantics, const SccInfo& scc) {
  check_bound(n);
  const Alphabet& alphabet = automaton.alphabet();
  auto store = std::make_shared<FormulaStore>();
  FormulaStore& s = *store;
  Encoding enc;
  VarDirectory& dir = enc.directory;
  dir = make_directory(EncodingKind::InputSymbolic, alphabet, n, automaton.num_states(), semantics, scc.counter_bits);
  const int m = automaton.num_states();

  allocate_annotation(s, dir, automaton, scc, n);
  for (int j = 0; j < alphabet.num_inputs(); ++j) dir.input_vars.push_back(s.new_var(VarRole::Input, alphabet.inputs[j]));
  dir.tau.assign(n, std::vector<std::vector<Var>>(1, std::vector<Var>(n)));
  for (int t = 0; t < n; ++t) {
    for (int t2 = 0; t2 < n; ++t2) dir.tau[t][0][t2] = s.new_var(VarRole::Transition, "tau" + idx({t, t2}));
  }
  dir.out.assign(n, std::vector<std::vector<Var>>(1, std::vector<Var>(alphabet.num_outputs())));
  for (int t = 0; t < n; ++t) {
    for (int o = 0; o < alphabet.num_outputs(); ++o) dir.out[t][0][o] = s.new_var(VarRole::Output, alphabet.outputs[o] + idx({t}));
  }

  std::vector<Formula> parts;
  parts.push_back(s.var(dir.lam_b[0][automaton.initial()]));
  for (int t = 0; t < n; ++t) {
    std::vector<Formula> succ;
    for (int t2 = 0; t2 < n; ++t2) succ.push_back(s.var(dir.tau[t][0][t2]));
    parts.push_back(s.lor(std::move(succ)));
  }
  for (int t = 0; t < n; ++t) {
    std::vector<Formula> atoms;
    for (Var v : dir.input_vars) atoms.push_back(s.var(v));
    for (Var v : dir.out[t][0]) atoms.push_back(s.var(v));
    for (int q = 0; q < m; ++q) {
      const Formula reach = s.var(dir.lam_b[t][q]);
      for (const UcwEdge& edge : automaton.edges(q)) {
        const Formula d = guard_formula(s, edge.guard, atoms);
        if (s.is_const(d, false)) continue;
        for (int t2 = 0; t2 < n; ++t2) {
          const Formula conclusion = s.land(s.var(dir.lam_b[t2][edge.target]),
                                            rank_condition(s, dir, automaton, scc, t, q, t2, edge.target));
          parts.push_back(s.lor({s.lnot(reach), s.lnot(d), s.lnot(s.var(dir.tau[t][0][t2])), conclusion}));
        }
      }
    }
  }

  enc.problem.store = store;
  enc.problem.matrix = s.land(std::move(parts));
  std::vector<Var> outer;
  for (const auto& row : dir.lam_b) outer.insert(outer.end(), row.begin(), row.end());
  for (const auto& row : dir.lam_num) {
    for (const auto& bits : row) outer.insert(outer.end(), bits.begin(), bits.end());
  }
  std::vector<Var> outputs;
  for (const auto& row : dir.out) outputs.insert(outputs.end(), row[0].begin(), row[0].end());
  if (semantics == Semantics::Moore) outer.insert(outer.end(), outputs.begin(), outputs.end());
  std::vector<Var> inner;
  for (const auto& row : dir.tau) inner.insert(inner.end(), row[0].begin(), row[0].end());
  if (semantics == Semantics::Mealy) inner.insert(inner.end(), outputs.begin(), outputs.end());
  push_block(enc.problem, Quantifier::Exists, std::move(outer));
  push_block(enc.problem, Quantifier::Forall, dir.input_vars);
  push_block(enc.problem, Quantifier::Exists, std::move(inner));
  return enc;
}

namespace {

/// Code of X is a state of an n-state system.
Formula valid_code(FormulaStore& s, const BitVec& x, int n) {
  if (x.width() == 0) return s.constant(true);
  return logic::bv_less_than_const(s, x, static_cast<std::uint64_t>(n));
}

struct SymbolicCommon {
  std::vector<Var> universals;
  std::map<Var, std::vector<Var>> deps;
  std::vector<Var> existentials;

  void exists(Var v, std::vector<Var> dep) {
    existentials.push_back(v);
    deps[v] = std::move(dep);
  }
};

void finish_dqbf(Encoding& enc, std::shared_ptr<FormulaStore> store, Formula matrix, SymbolicCommon& common) {
  enc.problem.store = std::move(store);
  enc.problem.matrix = matrix;
  push_block(enc.problem, Quantifier::Forall, common.universals);
  push_block(enc.problem, Quantifier::Exists, common.existentials);
  enc.problem.dependencies = std::move(common.deps);
}

/// Allocates I, T, T' universals and the tau / output function families.
void allocate_system_functions(FormulaStore& s, VarDirectory& dir, SymbolicCommon& common, int k) {
  for (const auto& name : dir.inputs) dir.input_vars.push_back(s.new_var(VarRole::Input, name));
  dir.state_vars = fresh_vars(s, k, VarRole::State, "T");
  dir.next_state_vars = fresh_vars(s, k, VarRole::NextState, "T'");
  common.universals = dir.input_vars;
  common.universals.insert(common.universals.end(), dir.state_vars.begin(), dir.state_vars.end());
  common.universals.insert(common.universals.end(), dir.next_state_vars.begin(), dir.next_state_vars.end());
}

void allocate_tau_and_outputs(FormulaStore& s, VarDirectory& dir, SymbolicCommon& common, int k) {
  const std::vector<Var> t_and_i = sorted_union(dir.state_vars, dir.input_vars);
  std::vector<Var> t_only = dir.state_vars;
  std::sort(t_only.begin(), t_only.end());
  dir.tau_bits = fresh_vars(s, k, VarRole::Transition, "tau");
  for (Var v : dir.tau_bits) common.exists(v, t_and_i);
  for (const auto& name : dir.outputs) {
    const Var v = s.new_var(VarRole::Output, name);
    dir.out_funcs.push_back(v);
    common.exists(v, dir.semantics == Semantics::Moore ? t_only : t_and_i);
  }
}

}  // namespace

Encoding encode_state_symbolic(const Ucw& automaton, int n, Semantics semantics, const SccInfo& scc) {
  check_bound(n);
  const Alphabet& alphabet = automaton.alphabet();
  auto store = std::make_shared<FormulaStore>();
  FormulaStore& s = *store;
  Encoding enc;
  VarDirectory& dir = enc.directory;
  dir = make_directory(EncodingKind::StateSymbolic, alphabet, n, automaton.num_states(), semantics, scc.counter_bits);
  const int m = automaton.num_states();
  const int k = ceil_log2(static_cast<std::uint64_t>(n));
  SymbolicCommon common;
  allocate_system_functions(s, dir, common, k);

  std::vector<Var> t_deps = dir.state_vars, tp_deps = dir.next_state_vars;
  std::sort(t_deps.begin(), t_deps.end());
  std::sort(tp_deps.begin(), tp_deps.end());
  dir.sym_lam_num.resize(m);
  dir.sym_lam_num_next.resize(m);
  for (int q = 0; q < m; ++q) {
    dir.sym_lam_b.push_back(s.new_var(VarRole::Reach, "lamB" + idx({q})));
    common.exists(dir.sym_lam_b.back(), t_deps);
  }
  for (int q = 0; q < m; ++q) {
    if (!scc.counted[q]) continue;
    dir.sym_lam_num[q] = fresh_vars(s, scc.counter_bits, VarRole::Rank, "lamN" + idx({q}));
    for (Var v : dir.sym_lam_num[q]) common.exists(v, t_deps);
  }
  for (int q = 0; q < m; ++q) {
    dir.sym_lam_b_next.push_back(s.new_var(VarRole::Reach, "lamB'" + idx({q})));
    common.exists(dir.sym_lam_b_next.back(), tp_deps);
  }
  for (int q = 0; q < m; ++q) {
    if (!scc.counted[q]) continue;
    dir.sym_lam_num_next[q] = fresh_vars(s, scc.counter_bits, VarRole::Rank, "lamN'" + idx({q}));
    for (Var v : dir.sym_lam_num_next[q]) common.exists(v, tp_deps);
  }
  allocate_tau_and_outputs(s, dir, common, k);

  const BitVec tv = as_bitvec(s, dir.state_vars);
  const BitVec tpv = as_bitvec(s, dir.next_state_vars);
  const BitVec tau = as_bitvec(s, dir.tau_bits);
  const Formula valid_t = valid_code(s, tv, n);
  const Formula same_state = logic::bv_equal(s, tv, tpv);
  const Formula moves_to = logic::bv_equal(s, tau, tpv);

  std::vector<Formula> parts;
  parts.push_back(s.implies(logic::bv_equals_const(s, tv, 0), s.var(dir.sym_lam_b[automaton.initial()])));
  if (k > 0) parts.push_back(s.implies(valid_t, valid_code(s, tau, n)));
  // Ackermann ties between the T and T' copies.
  for (int q = 0; q < m; ++q) {
    Formula tie = s.iff(s.var(dir.sym_lam_b[q]), s.var(dir.sym_lam_b_next[q]));
    if (scc.counted[q]) {
      tie = s.land(tie, logic::bv_equal(s, as_bitvec(s, dir.sym_lam_num[q]), as_bitvec(s, dir.sym_lam_num_next[q])));
    }
    parts.push_back(s.implies(same_state, tie));
  }
  std::vector<Formula> atoms;
  for (Var v : dir.input_vars) atoms.push_back(s.var(v));
  for (Var v : dir.out_funcs) atoms.push_back(s.var(v));
  for (int q = 0; q < m; ++q) {
    for (const UcwEdge& edge : automaton.edges(q)) {
      const int q2 = edge.target;
      const Formula d = guard_formula(s, edge.guard, atoms);
      if (s.is_const(d, false)) continue;
      Formula rank = s.constant(true);
      if (scc.counted[q] && scc.counted[q2] && scc.same_scc(q, q2)) {
        rank = logic::bv_greater(s, as_bitvec(s, dir.sym_lam_num_next[q2]), as_bitvec(s, dir.sym_lam_num[q]),
                                 automaton.rejecting(q2));
      }
      parts.push_back(s.lor({s.lnot(valid_t), s.lnot(s.var(dir.sym_lam_b[q])), s.lnot(d), s.lnot(moves_to),
                             s.land(s.var(dir.sym_lam_b_next[q2]), rank)}));
    }
  }
  finish_dqbf(enc, store, s.land(std::move(parts)), common);
  return enc;
}

Encoding encode_fully_symbolic(const SymbolicUcw& automaton, int n, Semantics semantics, int counter_bits) {
  check_bound(n);
  if (counter_bits < 1) throw Error("counter width must be at least 1");
  const Alphabet& alphabet = automaton.alphabet;
  auto store = std::make_shared<FormulaStore>();
  FormulaStore& s = *store;
  Encoding enc;
  VarDirectory& dir = enc.directory;
  dir = make_directory(EncodingKind::FullySymbolic, alphabet, n, automaton.num_states, semantics, counter_bits);
  const int k = ceil_log2(static_cast<std::uint64_t>(n));
  const int qb = static_cast<int>(automaton.state_bits.size());
  SymbolicCommon common;
  allocate_system_functions(s, dir, common, k);
  dir.aut_vars = fresh_vars(s, qb, VarRole::AutomatonState, "Q");
  dir.next_aut_vars = fresh_vars(s, qb, VarRole::NextAutomatonState, "Q'");
  common.universals.insert(common.universals.end(), dir.aut_vars.begin(), dir.aut_vars.end());
  common.universals.insert(common.universals.end(), dir.next_aut_vars.begin(), dir.next_aut_vars.end());

  const std::vector<Var> cur_deps = sorted_union(dir.state_vars, dir.aut_vars);
  const std::vector<Var> next_deps = sorted_union(dir.next_state_vars, dir.next_aut_vars);
  dir.sym_lam_b.push_back(s.new_var(VarRole::Reach, "lamB"));
  common.exists(dir.sym_lam_b[0], cur_deps);
  dir.sym_lam_num.push_back(fresh_vars(s, counter_bits, VarRole::Rank, "lamN"));
  for (Var v : dir.sym_lam_num[0]) common.exists(v, cur_deps);
  dir.sym_lam_b_next.push_back(s.new_var(VarRole::Reach, "lamB'"));
  common.exists(dir.sym_lam_b_next[0], next_deps);
  dir.sym_lam_num_next.push_back(fresh_vars(s, counter_bits, VarRole::Rank, "lamN'"));
  for (Var v : dir.sym_lam_num_next[0]) common.exists(v, next_deps);
  allocate_tau_and_outputs(s, dir, common, k);

  // Bring the automaton formulas into this store.
  std::unordered_map<Var, Formula> rename;
  for (int b = 0; b < qb; ++b) {
    rename[automaton.state_bits[b]] = s.var(dir.aut_vars[b]);
    rename[automaton.next_state_bits[b]] = s.var(dir.next_aut_vars[b]);
  }
  for (int j = 0; j < alphabet.size(); ++j) {
    rename[automaton.atom_vars[j]] =
        alphabet.is_input(j) ? s.var(dir.input_vars[j]) : s.var(dir.out_funcs[j - alphabet.num_inputs()]);
  }
  auto mapping = [&](Var v) { return rename.at(v); };
  const Formula init = s.import(*automaton.store, automaton.init, mapping);
  const Formula reject = s.import(*automaton.store, automaton.reject, mapping);
  const Formula delta = s.import(*automaton.store, automaton.delta, mapping);

  const BitVec tv = as_bitvec(s, dir.state_vars);
  const BitVec tpv = as_bitvec(s, dir.next_state_vars);
  const BitVec tau = as_bitvec(s, dir.tau_bits);
  const BitVec num = as_bitvec(s, dir.sym_lam_num[0]);
  const BitVec num_next = as_bitvec(s, dir.sym_lam_num_next[0]);
  const Formula lam = s.var(dir.sym_lam_b[0]);
  const Formula lam_next = s.var(dir.sym_lam_b_next[0]);
  const Formula valid_t = valid_code(s, tv, n);

  std::vector<Formula> parts;
  parts.push_back(s.implies(s.land(logic::bv_equals_const(s, tv, 0), init), lam));
  if (k > 0) parts.push_back(s.implies(valid_t, valid_code(s, tau, n)));
  const Formula same = s.land(logic::bv_equal(s, tv, tpv),
                              logic::bv_equal(s, as_bitvec(s, dir.aut_vars), as_bitvec(s, dir.next_aut_vars)));
  parts.push_back(s.implies(same, s.land(s.iff(lam, lam_next), logic::bv_equal(s, num, num_next))));
  const Formula rank = s.ite(reject, logic::bv_greater(s, num_next, num, true), logic::bv_greater(s, num_next, num, false));
  parts.push_back(s.lor({s.lnot(valid_t), s.lnot(lam), s.lnot(delta), s.lnot(logic::bv_equal(s, tau, tpv)),
                         s.land(lam_next, rank)}));
  finish_dqbf(enc, store, s.land(std::move(parts)), common);
  return enc;
}

Encoding encode(EncodingKind kind, const Ucw& automaton, int bound, Semantics semantics, bool scc_reduction) {
  const SccInfo scc = scc_reduction ? analyze_sccs(automaton, bound) : unreduced_scc_info(automaton, bound);
  switch (kind) {
    case EncodingKind::Basic: return encode_basic(automaton, bound, semantics, scc);
    case EncodingKind::InputSymbolic: return encode_input_symbolic(automaton, bound, semantics, scc);
    case EncodingKind::StateSymbolic: return encode_state_symbolic(automaton, bound, semantics, scc);
    case EncodingKind::FullySymbolic: return encode_fully_symbolic(encode_symbolic(automaton), bound, semantics, scc.counter_bits);
  }
  throw Error("unknown encoding kind");
}

ClosedFormCounts closed_form_counts(EncodingKind kind, Semantics semantics, int n, int m, int num_inputs,
                                    int num_outputs, int counted, int b) {
  const std::size_t N = n, M = m, I = num_inputs, O = num_outputs, C = counted, B = b;
  const std::size_t k = ceil_log2(N);
  const std::size_t valuations = std::size_t{1} << I;
  switch (kind) {
    case EncodingKind::Basic:
      return {N * M + N * C * B + N * valuations * N + (semantics == Semantics::Mealy ? N * valuations * O : N * O), 0};
    case EncodingKind::InputSymbolic:
      return {N * M + N * C * B + N * N + N * O, I};
    case EncodingKind::StateSymbolic:
      return {2 * (M + C * B) + k + O, I + 2 * k};
    case EncodingKind::FullySymbolic: {
      const std::size_t qb = std::max(1, ceil_log2(M));
      return {2 * (1 + B) + k + O, I + 2 * k + 2 * qb};
    }
  }
  return {};
}

}  // namespace boundsyn
