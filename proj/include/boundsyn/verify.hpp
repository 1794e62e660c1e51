#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "boundsyn/automaton.hpp"
#include "boundsyn/system.hpp"

namespace boundsyn {

/// Product of a transition system and a UCW over vertices (t, q). May be
/// built by hand for tests; build_run_graph restricts it to the part
/// reachable from (t0, q0).
class RunGraph {
 public:
  RunGraph(int system_states, int automaton_states);

  /// Returns the vertex index of (t, q), creating it if needed.
  int add_vertex(int t, int q, bool rejecting);
  /// Adds an edge once; `input` records a witnessing input valuation.
  void add_edge(int from, int to, Valuation input = 0);
  void set_initial(int vertex) { initial_ = vertex; }

  int system_states() const { return n_; }
  int automaton_states() const { return m_; }
  int num_vertices() const { return static_cast<int>(states_.size()); }
  int initial() const { return initial_; }
  /// Vertex index of (t, q), or -1.
  int vertex(int t, int q) const;
  int system_state(int v) const { return states_.at(v).first; }
  int automaton_state(int v) const { return states_.at(v).second; }
  bool rejecting(int v) const { return rejecting_.at(v) != 0; }
  const std::vector<int>& successors(int v) const { return succ_.at(v); }
  const std::vector<Valuation>& edge_inputs(int v) const { return inputs_.at(v); }
  bool has_edge(int from, int to) const;

 private:
  int n_, m_;
  int initial_ = 0;
  std::vector<int> index_;  // t * m + q -> vertex or -1
  std::vector<std::pair<int, int>> states_;
  std::vector<char> rejecting_;
  std::vector<std::vector<int>> succ_;
  std::vector<std::vector<Valuation>> inputs_;
};

/// Throws Error when the system's atoms differ from the automaton alphabet.
RunGraph build_run_graph(const TransitionSystem& ts, const Ucw& automaton);

/// lambda(t, q): nullopt is "unreachable", a number is a rank.
class Annotation {
 public:
  Annotation(int system_states, int automaton_states);
  std::optional<std::uint64_t> get(int t, int q) const { return values_.at(static_cast<std::size_t>(t) * m_ + q); }
  void set(int t, int q, std::optional<std::uint64_t> value) { values_.at(static_cast<std::size_t>(t) * m_ + q) = value; }
  int system_states() const { return n_; }
  int automaton_states() const { return m_; }

 private:
  int n_, m_;
  std::vector<std::optional<std::uint64_t>> values_;
};

struct AnnotationCheck {
  bool valid = true;
  /// Offending edge as (t, q) -> (t', q'); from == to == (-1,-1) when the
  /// initial vertex is unnumbered.
  std::pair<int, int> from{-1, -1};
  std::pair<int, int> to{-1, -1};
  std::string reason;
  explicit operator bool() const { return valid; }
};

AnnotationCheck check_annotation(const RunGraph& graph, const Annotation& lambda);

/// Least valid annotation, or nullopt when a reachable cycle passes through a
/// rejecting vertex.
std::optional<Annotation> infer_annotation(const RunGraph& graph);

struct ModelCheckResult {
  bool pass = true;
  /// Input lasso u . v^omega whose induced trace the automaton rejects.
  std::vector<Valuation> prefix;
  std::vector<Valuation> loop;
  explicit operator bool() const { return pass; }
};

ModelCheckResult model_check(const TransitionSystem& ts, const Ucw& automaton);

/// Letters (inputs with the system's outputs) produced by `ts` on the lasso,
/// as a lasso over the automaton alphabet. The loop is unrolled until the
/// system state at its start repeats.
std::pair<std::vector<Valuation>, std::vector<Valuation>> induced_lasso(const TransitionSystem& ts,
                                                                       const std::vector<Valuation>& prefix,
                                                                       const std::vector<Valuation>& loop);

}  // namespace boundsyn
