#pragma once

#include <string>
#include <vector>

#include "boundsyn/automaton.hpp"
#include "boundsyn/logic.hpp"

namespace boundsyn {

enum class EncodingKind { Basic, InputSymbolic, StateSymbolic, FullySymbolic };

std::string_view to_string(EncodingKind kind);
/// Accepts "basic", "input", "state", "full".
EncodingKind parse_encoding_kind(std::string_view text);

/// Where every encoding variable lives. Explicit encodings fill the
/// per-state tables; symbolic encodings fill the function lists.
struct VarDirectory {
  EncodingKind kind = EncodingKind::Basic;
  Semantics semantics = Semantics::Mealy;
  int bound = 0;
  int automaton_states = 0;
  int counter_bits = 0;
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  // Basic / input-symbolic. lam_num[t][q] is empty for uncounted q.
  std::vector<std::vector<logic::Var>> lam_b;
  std::vector<std::vector<std::vector<logic::Var>>> lam_num;
  /// Basic: tau[t][i][t']. Input-symbolic: tau[t][0][t'].
  std::vector<std::vector<std::vector<logic::Var>>> tau;
  /// out[t][i][o]; a single i slot for Moore and for input-symbolic.
  std::vector<std::vector<std::vector<logic::Var>>> out;

  // Universals of the quantified encodings.
  std::vector<logic::Var> input_vars;
  std::vector<logic::Var> state_vars;        // T
  std::vector<logic::Var> next_state_vars;   // T'
  std::vector<logic::Var> aut_vars;          // Q
  std::vector<logic::Var> next_aut_vars;     // Q'

  // State-symbolic: one entry per automaton state. Fully symbolic: one entry.
  std::vector<logic::Var> sym_lam_b;
  std::vector<std::vector<logic::Var>> sym_lam_num;
  std::vector<logic::Var> sym_lam_b_next;
  std::vector<std::vector<logic::Var>> sym_lam_num_next;
  std::vector<logic::Var> tau_bits;  // next-state code, LSB first
  std::vector<logic::Var> out_funcs; // one per output

  /// Every variable recorded above, in directory order.
  std::vector<logic::Var> all_vars() const;
};

struct Encoding {
  logic::QuantifiedProblem problem;
  VarDirectory directory;
};

/// `guard` with atom j replaced by atoms[j].
logic::Formula guard_formula(logic::FormulaStore& store, const Guard& guard, const std::vector<logic::Formula>& atoms);

/// Guard of q -> q2 with inputs fixed to `in` and output atom o replaced by
/// outvars[o]. False when there is no edge.
logic::Formula specialize_guard(logic::FormulaStore& store, const Ucw& automaton, int q, int q2, Valuation in,
                                const std::vector<logic::Formula>& outvars);

Encoding encode_basic(const Ucw& automaton, int bound, Semantics semantics, const SccInfo& scc);
Encoding encode_input_symbolic(const Ucw& automaton, int bound, Semantics semantics, const SccInfo& scc);
Encoding encode_state_symbolic(const Ucw& automaton, int bound, Semantics semantics, const SccInfo& scc);
Encoding encode_fully_symbolic(const SymbolicUcw& automaton, int bound, Semantics semantics, int counter_bits);

/// Runs the SCC analysis (or its unreduced variant) and dispatches.
Encoding encode(EncodingKind kind, const Ucw& automaton, int bound, Semantics semantics, bool scc_reduction = true);

struct ClosedFormCounts {
  std::size_t existentials = 0;
  std::size_t universals = 0;
  friend bool operator==(const ClosedFormCounts&, const ClosedFormCounts&) = default;
};

/// Variable counts the encoders produce, as closed formulas in
/// n, m, |I|, |O|, the number of counted states and the counter width.
ClosedFormCounts closed_form_counts(EncodingKind kind, Semantics semantics, int bound, int automaton_states,
                                    int num_inputs, int num_outputs, int counted_states, int counter_bits);

}  // namespace boundsyn
