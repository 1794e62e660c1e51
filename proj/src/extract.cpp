#include "boundsyn/extract.hpp"

namespace boundsyn {

using logic::Var;

namespace {

TransitionSystem explicit_system(const VarDirectory& dir, const std::function<bool(int, Valuation, Var)>& value) {
  const int n = dir.bound;
  const int valuations = 1 << dir.inputs.size();
  const bool basic = dir.kind == EncodingKind::Basic;
  std::vector<std::vector<int>> succ(n, std::vector<int>(valuations, -1));
  std::vector<std::vector<Valuation>> label(n, std::vector<Valuation>(valuations, 0));
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < valuations; ++i) {
      const auto in = static_cast<Valuation>(i);
      const auto& row = dir.tau[t][basic ? i : 0];
      for (int t2 = 0; t2 < n; ++t2) {
        if (value(t, in, row[t2])) {
          succ[t][i] = t2;
          break;
        }
      }
      if (succ[t][i] < 0) {
        throw Error("extraction: no successor for state " + std::to_string(t) + " and input " + std::to_string(i));
      }
      const bool per_input = basic && dir.semantics == Semantics::Mealy;
      const auto& outs = dir.out[t][per_input ? i : 0];
      // Moore labels are read once, at the all-false input.
      const Valuation read_in = dir.semantics == Semantics::Moore ? 0 : in;
      for (std::size_t o = 0; o < outs.size(); ++o) {
        if (value(t, read_in, outs[o])) label[t][i] |= Valuation{1} << o;
      }
    }
  }
  return TransitionSystem(dir.semantics, dir.inputs, dir.outputs, std::move(succ), std::move(label));
}

}  // namespace

TransitionSystem extract_basic(const Model& model, const VarDirectory& dir) {
  if (dir.kind != EncodingKind::Basic) throw Error("extract_basic: directory is not a basic encoding");
  return explicit_system(dir, [&](int, Valuation, Var v) { return model.value(v); });
}

TransitionSystem extract_input_symbolic(const Model& model, const VarDirectory& dir) {
  if (dir.kind != EncodingKind::InputSymbolic) throw Error("extract_input_symbolic: wrong directory kind");
  std::map<Var, int> input_index;
  for (std::size_t j = 0; j < dir.input_vars.size(); ++j) input_index[dir.input_vars[j]] = static_cast<int>(j);
  return explicit_system(dir, [&](int, Valuation in, Var v) {
    return model.value(v, [&](Var u) {
      auto it = input_index.find(u);
      if (it == input_index.end()) throw Error("extraction: Skolem table depends on a non-input variable");
      return ((in >> it->second) & 1u) != 0;
    });
  });
}

TransitionSystem extract_state_symbolic(const Model& model, const VarDirectory& dir) {
  if (dir.kind != EncodingKind::StateSymbolic && dir.kind != EncodingKind::FullySymbolic) {
    throw Error("extract_state_symbolic: wrong directory kind");
  }
  const int n = dir.bound;
  const int valuations = 1 << dir.inputs.size();
  std::map<Var, std::pair<bool, int>> position;  // var -> (is state bit, index)
  for (std::size_t j = 0; j < dir.input_vars.size(); ++j) position[dir.input_vars[j]] = {false, static_cast<int>(j)};
  for (std::size_t b = 0; b < dir.state_vars.size(); ++b) position[dir.state_vars[b]] = {true, static_cast<int>(b)};
  std::vector<std::vector<int>> succ(n, std::vector<int>(valuations, 0));
  std::vector<std::vector<Valuation>> label(n, std::vector<Valuation>(valuations, 0));
  for (int t = 0; t < n; ++t) {
    for (int i = 0; i < valuations; ++i) {
      const auto in = static_cast<Valuation>(i);
      auto universal_at = [&](Valuation input) {
        return [&, input](Var u) {
          auto it = position.find(u);
          if (it == position.end()) throw Error("extraction: Skolem table depends on an unexpected variable");
          const auto [is_state, index] = it->second;
          return is_state ? ((t >> index) & 1) != 0 : ((input >> index) & 1u) != 0;
        };
      };
      int code = 0;
      for (std::size_t b = 0; b < dir.tau_bits.size(); ++b) {
        if (model.value(dir.tau_bits[b], universal_at(in))) code |= 1 << b;
      }
      if (code >= n) {
        throw Error("extraction: successor code " + std::to_string(code) + " is not below the bound");
      }
      succ[t][i] = code;
      const Valuation read_in = dir.semantics == Semantics::Moore ? 0 : in;
      for (std::size_t o = 0; o < dir.out_funcs.size(); ++o) {
        if (model.value(dir.out_funcs[o], universal_at(read_in))) label[t][i] |= Valuation{1} << o;
      }
    }
  }
  return TransitionSystem(dir.semantics, dir.inputs, dir.outputs, std::move(succ), std::move(label));
}

TransitionSystem extract(const Model& model, const VarDirectory& dir) {
  switch (dir.kind) {
    case EncodingKind::Basic: return extract_basic(model, dir);
    case EncodingKind::InputSymbolic: return extract_input_symbolic(model, dir);
    case EncodingKind::StateSymbolic:
    case EncodingKind::FullySymbolic: return extract_state_symbolic(model, dir);
  }
  throw Error("unknown encoding kind");
}

}  // namespace boundsyn
