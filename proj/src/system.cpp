#include "boundsyn/system.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace boundsyn {

TransitionSystem::TransitionSystem(Semantics semantics, std::vector<std::string> inputs,
                                   std::vector<std::string> outputs, std::vector<std::vector<int>> successor,
                                   std::vector<std::vector<Valuation>> label)
    : semantics_(semantics),
      inputs_(std::move(inputs)),
      outputs_(std::move(outputs)),
      successor_(std::move(successor)),
      label_(std::move(label)) {
  if (inputs_.size() > 20 || outputs_.size() > static_cast<std::size_t>(kMaxAtoms)) throw Error("too many atoms");
  const int n = size();
  if (n < 1) throw Error("transition system needs at least one state");
  if (static_cast<int>(label_.size()) != n) throw Error("label table has wrong number of states");
  const std::size_t valuations = std::size_t{1} << inputs_.size();
  const Valuation output_mask = outputs_.size() >= 64 ? ~Valuation{0} : ((Valuation{1} << outputs_.size()) - 1);
  for (int t = 0; t < n; ++t) {
    if (successor_[t].size() != valuations || label_[t].size() != valuations) {
      throw Error("transition table is not total over the input valuations");
    }
    for (std::size_t i = 0; i < valuations; ++i) {
      if (successor_[t][i] < 0 || successor_[t][i] >= n) throw Error("successor state out of range");
      if ((label_[t][i] & ~output_mask) != 0) throw Error("label mentions an unknown output");
      if (semantics_ == Semantics::Moore && label_[t][i] != label_[t][0]) {
        throw Error("Moore system whose output depends on the input in state " + std::to_string(t));
      }
    }
  }
}

Valuation TransitionSystem::input_valuation(const std::set<std::string>& names) const {
  Valuation v = 0;
  for (const auto& name : names) {
    auto it = std::find(inputs_.begin(), inputs_.end(), name);
    if (it == inputs_.end()) throw Error("unknown input atom \"" + name + "\"");
    v |= Valuation{1} << (it - inputs_.begin());
  }
  return v;
}

std::set<std::string> TransitionSystem::output_names(Valuation out) const {
  std::set<std::string> names;
  for (std::size_t o = 0; o < outputs_.size(); ++o) {
    if ((out >> o) & 1u) names.insert(outputs_[o]);
  }
  return names;
}

std::vector<Step> run(const TransitionSystem& ts, const std::vector<Valuation>& inputs) {
  std::vector<Step> trace;
  trace.reserve(inputs.size());
  int state = 0;
  for (Valuation in : inputs) {
    trace.push_back({state, ts.output(state, in)});
    state = ts.successor(state, in);
  }
  return trace;
}

std::vector<NamedStep> run(const TransitionSystem& ts, const std::vector<std::set<std::string>>& inputs) {
  std::vector<Valuation> masks;
  for (const auto& names : inputs) masks.push_back(ts.input_valuation(names));
  std::vector<NamedStep> out;
  for (const auto& step : run(ts, masks)) out.push_back({step.state, ts.output_names(step.output)});
  return out;
}

namespace {

std::string cube_text(const std::vector<std::string>& names, Valuation v) {
  if (names.empty()) return "true";
  std::string out;
  for (std::size_t j = 0; j < names.size(); ++j) {
    if (j) out += ' ';
    if (!((v >> j) & 1u)) out += '!';
    out += names[j];
  }
  return out;
}

}  // namespace

std::string to_dot(const TransitionSystem& ts) {
  std::ostringstream out;
  out << "digraph system {\n  rankdir=LR;\n  init [shape=point];\n";
  for (int t = 0; t < ts.size(); ++t) {
    out << "  t" << t << " [label=\"t" << t;
    if (ts.semantics() == Semantics::Moore) out << "\\n" << cube_text(ts.outputs(), ts.output(t, 0));
    out << "\", shape=circle];\n";
  }
  out << "  init -> t0;\n";
  for (int t = 0; t < ts.size(); ++t) {
    std::map<int, std::vector<std::string>> by_target;
    bool all_same = true;
    for (int i = 0; i < ts.num_input_valuations(); ++i) {
      if (ts.successor(t, static_cast<Valuation>(i)) != ts.successor(t, 0)) all_same = false;
    }
    for (int i = 0; i < ts.num_input_valuations(); ++i) {
      const auto in = static_cast<Valuation>(i);
      std::string text = cube_text(ts.inputs(), in);
      if (ts.semantics() == Semantics::Mealy) text += "/" + cube_text(ts.outputs(), ts.output(t, in));
      by_target[ts.successor(t, in)].push_back(std::move(text));
    }
    for (const auto& [target, labels] : by_target) {
      out << "  t" << t << " -> t" << target << " [label=\"";
      if (ts.semantics() == Semantics::Moore && all_same) {
        out << "true";
      } else {
        for (std::size_t k = 0; k < labels.size(); ++k) out << (k ? "\\n" : "") << labels[k];
      }
      out << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// AIGER

namespace {

class AigBuilder {
 public:
  explicit AigBuilder(unsigned first_and_var) : next_var_(first_and_var) {}

  unsigned make_and(unsigned a, unsigned b) {
    if (a > b) std::swap(a, b);
    if (a == 0) return 0;
    if (a == 1) return b;
    if (a == b) return a;
    if ((a ^ 1u) == b) return 0;
    auto [it, inserted] = table_.try_emplace({a, b}, 0u);
    if (inserted) {
      it->second = 2 * next_var_++;
      gates_.push_back({it->second, b, a});
    }
    return it->second;
  }
  unsigned make_or(unsigned a, unsigned b) { return make_and(a ^ 1u, b ^ 1u) ^ 1u; }

  struct Gate {
    unsigned lhs, rhs0, rhs1;
  };
  const std::vector<Gate>& gates() const { return gates_; }
  unsigned max_var() const { return next_var_ - 1; }

 private:
  unsigned next_var_;
  std::map<std::pair<unsigned, unsigned>, unsigned> table_;
  std::vector<Gate> gates_;
};

/// Sum-of-products over the support of a function given by its truth table
/// over `domain` (literal per domain variable; row bit j = domain var j).
unsigned synthesize_sop(AigBuilder& aig, const std::vector<unsigned>& domain, const std::vector<char>& table) {
  const std::size_t vars = domain.size();
  std::vector<std::size_t> support;
  for (std::size_t j = 0; j < vars; ++j) {
    for (std::size_t row = 0; row < table.size(); ++row) {
      if (table[row] != table[row ^ (std::size_t{1} << j)]) {
        support.push_back(j);
        break;
      }
    }
  }
  const std::size_t rows = std::size_t{1} << support.size();
  std::vector<char> reduced(rows, 0);
  std::size_t ones = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    std::size_t full = 0;
    for (std::size_t k = 0; k < support.size(); ++k) {
      if ((r >> k) & 1u) full |= std::size_t{1} << support[k];
    }
    reduced[r] = table[full];
    ones += reduced[r] ? 1 : 0;
  }
  if (ones == 0) return 0;
  if (ones == rows) return 1;
  const bool complement = ones * 2 > rows;
  unsigned sum = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    if ((reduced[r] != 0) == complement) continue;
    unsigned product = 1;
    for (std::size_t k = 0; k < support.size(); ++k) {
      const unsigned lit = domain[support[k]] ^ (((r >> k) & 1u) ? 0u : 1u);
      product = aig.make_and(product, lit);
    }
    sum = aig.make_or(sum, product);
  }
  return complement ? sum ^ 1u : sum;
}

}  // namespace

std::string to_aiger(const TransitionSystem& ts) {
  const unsigned num_inputs = static_cast<unsigned>(ts.inputs().size());
  const unsigned num_latches = static_cast<unsigned>(ceil_log2(static_cast<std::uint64_t>(ts.size())));
  const unsigned num_outputs = static_cast<unsigned>(ts.outputs().size());
  auto input_lit = [](unsigned j) { return 2 * (1 + j); };
  auto latch_lit = [&](unsigned b) { return 2 * (1 + num_inputs + b); };
  AigBuilder aig(1 + num_inputs + num_latches);

  // Domain: latch bits first, then inputs.
  std::vector<unsigned> full_domain;
  for (unsigned b = 0; b < num_latches; ++b) full_domain.push_back(latch_lit(b));
  for (unsigned j = 0; j < num_inputs; ++j) full_domain.push_back(input_lit(j));
  const std::vector<unsigned> state_domain(full_domain.begin(), full_domain.begin() + num_latches);

  auto tabulate = [&](bool with_inputs, auto&& value) {
    const unsigned width = num_latches + (with_inputs ? num_inputs : 0);
    std::vector<char> table(std::size_t{1} << width, 0);
    for (std::size_t row = 0; row < table.size(); ++row) {
      const int state = static_cast<int>(row & ((std::size_t{1} << num_latches) - 1));
      const Valuation in = with_inputs ? static_cast<Valuation>(row >> num_latches) : 0;
      if (state >= ts.size()) continue;  // unused codes
      table[row] = value(state, in) ? 1 : 0;
    }
    return table;
  };

  std::vector<unsigned> output_lits;
  const bool moore = ts.semantics() == Semantics::Moore;
  for (unsigned o = 0; o < num_outputs; ++o) {
    auto table = tabulate(!moore, [&](int t, Valuation in) { return ((ts.output(t, in) >> o) & 1u) != 0; });
    output_lits.push_back(synthesize_sop(aig, moore ? state_domain : full_domain, table));
  }
  std::vector<unsigned> next_lits;
  for (unsigned b = 0; b < num_latches; ++b) {
    auto table = tabulate(true, [&](int t, Valuation in) { return ((ts.successor(t, in) >> b) & 1) != 0; });
    next_lits.push_back(synthesize_sop(aig, full_domain, table));
  }

  std::ostringstream out;
  out << "aag " << aig.max_var() << ' ' << num_inputs << ' ' << num_latches << ' ' << num_outputs << ' '
      << aig.gates().size() << '\n';
  for (unsigned j = 0; j < num_inputs; ++j) out << input_lit(j) << '\n';
  for (unsigned b = 0; b < num_latches; ++b) out << latch_lit(b) << ' ' << next_lits[b] << '\n';
  for (unsigned lit : output_lits) out << lit << '\n';
  for (const auto& g : aig.gates()) out << g.lhs << ' ' << g.rhs0 << ' ' << g.rhs1 << '\n';
  for (unsigned j = 0; j < num_inputs; ++j) out << 'i' << j << ' ' << ts.inputs()[j] << '\n';
  for (unsigned b = 0; b < num_latches; ++b) out << 'l' << b << " state[" << b << "]\n";
  for (unsigned o = 0; o < num_outputs; ++o) out << 'o' << o << ' ' << ts.outputs()[o] << '\n';
  out << "c\n";
  out << "semantics " << to_string(ts.semantics()) << '\n';
  out << "states " << ts.size() << '\n';
  return out.str();
}

}  // namespace boundsyn
