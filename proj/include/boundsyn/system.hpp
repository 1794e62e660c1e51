#pragma once

#include <set>
#include <string>
#include <vector>

#include "boundsyn/common.hpp"

namespace boundsyn {

/// Finite Mealy/Moore machine with initial state 0. Input and output
/// valuations are bitmasks over `inputs()` and `outputs()`.
class TransitionSystem {
 public:
  /// `successor[t][i]` and `label[t][i]` for every state t and input valuation
  /// i < 2^|inputs|. Throws Error on shape or Moore-invariant violations.
  TransitionSystem(Semantics semantics, std::vector<std::string> inputs, std::vector<std::string> outputs,
                   std::vector<std::vector<int>> successor, std::vector<std::vector<Valuation>> label);

  Semantics semantics() const { return semantics_; }
  int size() const { return static_cast<int>(successor_.size()); }
  const std::vector<std::string>& inputs() const { return inputs_; }
  const std::vector<std::string>& outputs() const { return outputs_; }
  int num_input_valuations() const { return 1 << inputs_.size(); }

  int successor(int state, Valuation in) const { return successor_.at(state).at(in); }
  Valuation output(int state, Valuation in) const { return label_.at(state).at(in); }

  Valuation input_valuation(const std::set<std::string>& names) const;
  std::set<std::string> output_names(Valuation out) const;

 private:
  Semantics semantics_;
  std::vector<std::string> inputs_;
  std::vector<std::string> outputs_;
  std::vector<std::vector<int>> successor_;
  std::vector<std::vector<Valuation>> label_;
};

struct Step {
  int state;
  Valuation output;
  friend bool operator==(const Step&, const Step&) = default;
};

std::vector<Step> run(const TransitionSystem& ts, const std::vector<Valuation>& inputs);

struct NamedStep {
  int state;
  std::set<std::string> outputs;
  friend bool operator==(const NamedStep&, const NamedStep&) = default;
};

/// Named-atom variant; throws Error on an atom that is not an input.
std::vector<NamedStep> run(const TransitionSystem& ts, const std::vector<std::set<std::string>>& inputs);

std::string to_dot(const TransitionSystem& ts);

/// ASCII AIGER ("aag") circuit. State is held in ceil(log2 n) latches with
/// the all-zero code as reset state.
std::string to_aiger(const TransitionSystem& ts);

}  // namespace boundsyn
