#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "boundsyn/common.hpp"
#include "boundsyn/logic.hpp"
#include "boundsyn/ltl.hpp"

namespace boundsyn {

/// Ordered atom list: inputs first, then outputs. A letter is a Valuation
/// over this order.
struct Alphabet {
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;

  int num_inputs() const { return static_cast<int>(inputs.size()); }
  int num_outputs() const { return static_cast<int>(outputs.size()); }
  int size() const { return num_inputs() + num_outputs(); }
  /// Index of `name`, or -1.
  int index_of(const std::string& name) const;
  const std::string& name(int atom) const;
  bool is_input(int atom) const { return atom < num_inputs(); }
  Valuation letter(Valuation in, Valuation out) const { return in | (out << num_inputs()); }
};

struct Literal {
  int atom;
  bool positive;
  friend bool operator==(const Literal&, const Literal&) = default;
};

/// Conjunction of literals sorted by atom; empty means true.
using Cube = std::vector<Literal>;

/// Edge guard in disjunctive normal form; no cubes means false.
struct Guard {
  std::vector<Cube> cubes;

  static Guard always() { return Guard{{Cube{}}}; }
  static Guard cube(Cube c) { return Guard{{std::move(c)}}; }
  bool evaluate(Valuation letter) const;
  bool satisfiable() const;
  std::string to_string(const Alphabet& alphabet) const;
};

struct UcwEdge {
  int target;
  Guard guard;
};

/// Universal co-Buchi automaton with guards over an Alphabet.
class Ucw {
 public:
  explicit Ucw(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  int add_state(bool rejecting, std::string label = {});
  void set_initial(int q);
  /// Adds an edge or widens the existing guard between the pair.
  void add_edge(int from, int to, Guard guard);

  const Alphabet& alphabet() const { return alphabet_; }
  int num_states() const { return static_cast<int>(rejecting_.size()); }
  int initial() const { return initial_; }
  bool rejecting(int q) const { return rejecting_.at(q); }
  int num_rejecting() const;
  const std::string& label(int q) const { return labels_.at(q); }
  const std::vector<UcwEdge>& edges(int q) const { return edges_.at(q); }
  /// Guard of the pair, or nullptr when there is no edge.
  const Guard* guard(int from, int to) const;

  std::string to_dot() const;

 private:
  Alphabet alphabet_;
  int initial_ = 0;
  std::vector<char> rejecting_;
  std::vector<std::string> labels_;
  std::vector<std::vector<UcwEdge>> edges_;
};

/// Builds a UCW accepting exactly the models of `formula`: a tableau NBW for
/// the negation, degeneralized, read universally with accepting states as
/// rejecting. Unreachable states and states that cannot reach a rejecting
/// cycle are removed.
Ucw ltl_to_ucw(const ltl::Formula& formula, const std::vector<std::string>& inputs,
               const std::vector<std::string>& outputs);

/// Whether every run over prefix . loop^omega visits rejecting states
/// finitely often.
bool ucw_accepts_lasso(const Ucw& automaton, const std::vector<Valuation>& prefix, const std::vector<Valuation>& loop);

struct SccInfo {
  std::vector<int> scc_id;
  std::vector<char> counted;
  int counter_bits = 1;

  bool same_scc(int a, int b) const { return scc_id[a] == scc_id[b]; }
  int num_counted() const;
};

/// SCC decomposition; counters are kept only for states in an SCC that
/// contains a rejecting state. counter_bits = ceil(log2(n * |F| + 1)), at least 1.
SccInfo analyze_sccs(const Ucw& automaton, int system_states);

/// Variant without the reduction: every state is counted.
SccInfo unreduced_scc_info(const Ucw& automaton, int system_states);

/// Binary-encoded automaton. All formulas live in `store`.
struct SymbolicUcw {
  std::shared_ptr<logic::FormulaStore> store;
  Alphabet alphabet;
  int num_states = 0;
  std::vector<logic::Var> state_bits;
  std::vector<logic::Var> next_state_bits;
  std::vector<logic::Var> atom_vars;  // indexed like the alphabet
  logic::Formula init;
  logic::Formula reject;  // over next_state_bits
  logic::Formula delta;
};

SymbolicUcw encode_symbolic(const Ucw& automaton);

}  // namespace boundsyn
