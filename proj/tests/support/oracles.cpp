#include "oracles.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace oracle {

namespace ltl = boundsyn::ltl;
namespace logic = boundsyn::logic;
using ltl::Kind;

namespace {

class LassoEvaluator {
 public:
  LassoEvaluator(const std::vector<std::string>& atoms, const std::vector<Valuation>& prefix,
                 const std::vector<Valuation>& loop)
      : atoms_(atoms), letters_(prefix), loop_start_(static_cast<int>(prefix.size())) {
    if (loop.empty()) throw std::invalid_argument("empty loop");
    letters_.insert(letters_.end(), loop.begin(), loop.end());
  }

  const std::vector<char>& eval(const ltl::Formula& f) {
    const std::string key = ltl::to_string(f);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    std::vector<char> out(size(), 0);
    switch (f.kind()) {
      case Kind::Atom: {
        int index = -1;
        for (std::size_t j = 0; j < atoms_.size(); ++j) {
          if (atoms_[j] == f.name()) index = static_cast<int>(j);
        }
        if (index < 0) throw std::invalid_argument("unknown atom " + f.name());
        for (int p = 0; p < size(); ++p) out[p] = (letters_[p] >> index) & 1u;
        break;
      }
      case Kind::True: out.assign(size(), 1); break;
      case Kind::False: break;
      case Kind::Not: {
        const auto a = eval(f.child(0));
        for (int p = 0; p < size(); ++p) out[p] = !a[p];
        break;
      }
      case Kind::And:
      case Kind::Or:
      case Kind::Implies:
      case Kind::Iff: {
        const auto a = eval(f.child(0));
        const auto b = eval(f.child(1));
        for (int p = 0; p < size(); ++p) {
          switch (f.kind()) {
            case Kind::And: out[p] = a[p] && b[p]; break;
            case Kind::Or: out[p] = a[p] || b[p]; break;
            case Kind::Implies: out[p] = !a[p] || b[p]; break;
            default: out[p] = (a[p] != 0) == (b[p] != 0); break;
          }
        }
        break;
      }
      case Kind::Next: {
        const auto a = eval(f.child(0));
        for (int p = 0; p < size(); ++p) out[p] = a[next(p)];
        break;
      }
      case Kind::Finally: out = until(std::vector<char>(size(), 1), eval(f.child(0))); break;
      case Kind::Globally: out = release(std::vector<char>(size(), 0), eval(f.child(0))); break;
      case Kind::Until: {
        const auto a = eval(f.child(0));
        out = until(a, eval(f.child(1)));
        break;
      }
      case Kind::Release: {
        const auto a = eval(f.child(0));
        out = release(a, eval(f.child(1)));
        break;
      }
    }
    return memo_.emplace(key, std::move(out)).first->second;
  }

 private:
  int size() const { return static_cast<int>(letters_.size()); }
  int next(int p) const { return p + 1 < size() ? p + 1 : loop_start_; }

  std::vector<char> until(const std::vector<char>& a, const std::vector<char>& b) const {
    std::vector<char> s(size(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (int p = size() - 1; p >= 0; --p) {
        const char v = b[p] || (a[p] && s[next(p)]);
        if (v != s[p]) s[p] = v, changed = true;
      }
    }
    return s;
  }
  std::vector<char> release(const std::vector<char>& a, const std::vector<char>& b) const {
    std::vector<char> s(size(), 1);
    for (bool changed = true; changed;) {
      changed = false;
      for (int p = size() - 1; p >= 0; --p) {
        const char v = b[p] && (a[p] || s[next(p)]);
        if (v != s[p]) s[p] = v, changed = true;
      }
    }
    return s;
  }

  const std::vector<std::string>& atoms_;
  std::vector<Valuation> letters_;
  int loop_start_;
  std::map<std::string, std::vector<char>> memo_;
};

}  // namespace

bool ltl_holds(const ltl::Formula& f, const std::vector<std::string>& atoms, const std::vector<Valuation>& prefix,
               const std::vector<Valuation>& loop) {
  LassoEvaluator ev(atoms, prefix, loop);
  return ev.eval(f)[0] != 0;
}

void for_each_lasso(int num_letters, int max_prefix, int max_loop,
                    const std::function<void(const std::vector<Valuation>&, const std::vector<Valuation>&)>& visit) {
  auto words = [&](int len) {
    std::vector<std::vector<Valuation>> all{{}};
    for (int k = 0; k < len; ++k) {
      std::vector<std::vector<Valuation>> longer;
      for (const auto& w : all) {
        for (int c = 0; c < num_letters; ++c) {
          longer.push_back(w);
          longer.back().push_back(static_cast<Valuation>(c));
        }
      }
      all = std::move(longer);
    }
    return all;
  };
  for (int lu = 0; lu <= max_prefix; ++lu) {
    const auto us = words(lu);
    for (int lv = 1; lv <= max_loop; ++lv) {
      const auto vs = words(lv);
      for (const auto& u : us) {
        for (const auto& v : vs) visit(u, v);
      }
    }
  }
}

ltl::Formula random_formula(std::mt19937& rng, const std::vector<std::string>& atoms, int size) {
  std::uniform_int_distribution<int> pick_atom(0, static_cast<int>(atoms.size()) - 1);
  if (size <= 0) {
    if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) return ltl::Formula::constant(rng() % 2 == 0);
    return ltl::Formula::atom(atoms[pick_atom(rng)]);
  }
  static const Kind unary[] = {Kind::Not, Kind::Next, Kind::Finally, Kind::Globally};
  static const Kind binary[] = {Kind::And, Kind::Or, Kind::Implies, Kind::Iff, Kind::Until, Kind::Release};
  if (rng() % 3 == 0) {
    return ltl::Formula::unary(unary[rng() % 4], random_formula(rng, atoms, size - 1));
  }
  const int left = std::uniform_int_distribution<int>(0, size - 1)(rng);
  return ltl::Formula::binary(binary[rng() % 6], random_formula(rng, atoms, left),
                              random_formula(rng, atoms, size - 1 - left));
}

std::pair<std::vector<Valuation>, std::vector<Valuation>> trace_of(const TransitionSystem& ts,
                                                                   const std::vector<Valuation>& prefix,
                                                                   const std::vector<Valuation>& loop) {
  const int shift = static_cast<int>(ts.inputs().size());
  std::vector<Valuation> letters;
  int state = 0;
  auto step = [&](Valuation in) {
    letters.push_back(in | (ts.output(state, in) << shift));
    state = ts.successor(state, in);
  };
  for (Valuation in : prefix) step(in);
  std::map<int, std::size_t> seen;
  while (!seen.count(state)) {
    seen[state] = letters.size();
    for (Valuation in : loop) step(in);
  }
  const auto cut = static_cast<std::ptrdiff_t>(seen[state]);
  return {{letters.begin(), letters.begin() + cut}, {letters.begin() + cut, letters.end()}};
}

bool find_violation(const TransitionSystem& ts, const ltl::Formula& f, int max_prefix, int max_loop,
                    std::vector<Valuation>* prefix, std::vector<Valuation>* loop) {
  std::vector<std::string> atoms = ts.inputs();
  atoms.insert(atoms.end(), ts.outputs().begin(), ts.outputs().end());
  bool found = false;
  for_each_lasso(ts.num_input_valuations(), max_prefix, max_loop, [&](const auto& u, const auto& v) {
    if (found) return;
    const auto [tu, tv] = trace_of(ts, u, v);
    if (!ltl_holds(f, atoms, tu, tv)) {
      found = true;
      if (prefix) *prefix = u;
      if (loop) *loop = v;
    }
  });
  return found;
}

void for_each_system(Semantics semantics, const std::vector<std::string>& inputs,
                     const std::vector<std::string>& outputs, int n,
                     const std::function<bool(const TransitionSystem&)>& visit) {
  const int ni = 1 << inputs.size();
  const int no = 1 << outputs.size();
  const int label_slots = semantics == Semantics::Moore ? n : n * ni;
  std::vector<int> digits(static_cast<std::size_t>(n * ni + label_slots), 0);
  std::vector<int> radix(digits.size());
  for (std::size_t k = 0; k < radix.size(); ++k) radix[k] = static_cast<int>(k) < n * ni ? n : no;
  while (true) {
    std::vector<std::vector<int>> succ(n, std::vector<int>(ni));
    std::vector<std::vector<Valuation>> label(n, std::vector<Valuation>(ni));
    for (int t = 0; t < n; ++t) {
      for (int i = 0; i < ni; ++i) {
        succ[t][i] = digits[t * ni + i];
        const int slot = semantics == Semantics::Moore ? t : t * ni + i;
        label[t][i] = static_cast<Valuation>(digits[n * ni + slot]);
      }
    }
    if (!visit(TransitionSystem(semantics, inputs, outputs, succ, label))) return;
    std::size_t k = 0;
    while (k < digits.size() && ++digits[k] == radix[k]) digits[k++] = 0;
    if (k == digits.size()) return;
  }
}

TransitionSystem random_system(std::mt19937& rng, Semantics semantics, const std::vector<std::string>& inputs,
                               const std::vector<std::string>& outputs, int n) {
  const int ni = 1 << inputs.size();
  const int no = 1 << outputs.size();
  std::vector<std::vector<int>> succ(n, std::vector<int>(ni));
  std::vector<std::vector<Valuation>> label(n, std::vector<Valuation>(ni));
  for (int t = 0; t < n; ++t) {
    const auto moore_label = static_cast<Valuation>(rng() % no);
    for (int i = 0; i < ni; ++i) {
      succ[t][i] = static_cast<int>(rng() % n);
      label[t][i] = semantics == Semantics::Moore ? moore_label : static_cast<Valuation>(rng() % no);
    }
  }
  return TransitionSystem(semantics, inputs, outputs, succ, label);
}

namespace {

struct Binder {
  logic::Var var;
  bool forall;
};

std::vector<Binder> flatten_prefix(const logic::QuantifiedProblem& p) {
  std::set<logic::Var> bound;
  std::vector<Binder> order;
  for (const auto& block : p.prefix) {
    for (logic::Var v : block.vars) bound.insert(v);
  }
  for (logic::Var v : p.store->support(p.matrix)) {
    if (!bound.count(v)) order.push_back({v, false});
  }
  for (const auto& block : p.prefix) {
    for (logic::Var v : block.vars) order.push_back({v, block.quantifier == logic::Quantifier::Forall});
  }
  return order;
}

}  // namespace

bool naive_qbf(const logic::QuantifiedProblem& p) {
  const auto order = flatten_prefix(p);
  std::vector<char> value(p.store->num_vars() + 1, 0);
  std::function<bool(std::size_t)> rec = [&](std::size_t k) -> bool {
    if (k == order.size()) return p.store->evaluate(p.matrix, [&](logic::Var v) { return value.at(v) != 0; });
    const Binder b = order[k];
    value[b.var] = 0;
    const bool r0 = rec(k + 1);
    if (b.forall && !r0) return false;
    if (!b.forall && r0) return true;
    value[b.var] = 1;
    return rec(k + 1);
  };
  return rec(0);
}

bool naive_dqbf(const logic::QuantifiedProblem& p) {
  if (!p.dependencies) throw std::invalid_argument("not a DQBF");
  const auto universals = p.universals();
  const auto existentials = p.existentials();
  std::vector<std::size_t> offset;
  std::size_t total = 0;
  for (logic::Var e : existentials) {
    offset.push_back(total);
    total += std::size_t{1} << p.dependencies->at(e).size();
  }
  if (total > 24) throw std::invalid_argument("DQBF too large for enumeration");
  std::vector<char> value(p.store->num_vars() + 1, 0);
  for (std::uint64_t tables = 0; tables < (std::uint64_t{1} << total); ++tables) {
    bool all = true;
    for (std::uint64_t ua = 0; ua < (std::uint64_t{1} << universals.size()) && all; ++ua) {
      for (std::size_t j = 0; j < universals.size(); ++j) value[universals[j]] = (ua >> j) & 1u;
      for (std::size_t k = 0; k < existentials.size(); ++k) {
        const auto& deps = p.dependencies->at(existentials[k]);
        std::size_t row = 0;
        for (std::size_t j = 0; j < deps.size(); ++j) row |= std::size_t{value[deps[j]] != 0} << j;
        value[existentials[k]] = (tables >> (offset[k] + row)) & 1u;
      }
      all = p.store->evaluate(p.matrix, [&](logic::Var v) { return value.at(v) != 0; });
    }
    if (all) return true;
  }
  return false;
}

namespace {

logic::Formula random_matrix(std::mt19937& rng, logic::FormulaStore& s, const std::vector<logic::Var>& vars) {
  const int n = static_cast<int>(vars.size());
  const int clauses = 1 + static_cast<int>(rng() % (2 * n));
  std::vector<logic::Formula> parts;
  auto lit = [&] {
    const logic::Formula x = s.var(vars[rng() % n]);
    return rng() % 2 ? x : s.lnot(x);
  };
  for (int c = 0; c < clauses; ++c) {
    std::vector<logic::Formula> lits;
    const int width = 1 + static_cast<int>(rng() % 3);
    for (int k = 0; k < width; ++k) lits.push_back(lit());
    if (rng() % 4 == 0) lits.push_back(s.lxor(lit(), lit()));
    parts.push_back(s.lor(lits));
  }
  return s.land(parts);
}

}  // namespace

logic::QuantifiedProblem random_qbf(std::mt19937& rng, int vars) {
  auto s = std::make_shared<logic::FormulaStore>();
  logic::QuantifiedProblem p;
  p.store = s;
  std::vector<logic::Var> all;
  bool forall = rng() % 2 == 0;
  for (int k = 0; k < vars;) {
    const int size = std::min(vars - k, 1 + static_cast<int>(rng() % 3));
    logic::QuantBlock block{forall ? logic::Quantifier::Forall : logic::Quantifier::Exists, {}};
    for (int j = 0; j < size; ++j, ++k) {
      const auto v = s->new_var(forall ? logic::VarRole::Input : logic::VarRole::Aux, "v" + std::to_string(k));
      block.vars.push_back(v);
      all.push_back(v);
    }
    p.prefix.push_back(std::move(block));
    forall = !forall;
  }
  p.matrix = random_matrix(rng, *s, all);
  return p;
}

logic::QuantifiedProblem random_dqbf(std::mt19937& rng, int universals, int existentials) {
  auto s = std::make_shared<logic::FormulaStore>();
  logic::QuantifiedProblem p;
  p.store = s;
  std::vector<logic::Var> us, es, all;
  for (int k = 0; k < universals; ++k) us.push_back(s->new_var(logic::VarRole::Input, "u" + std::to_string(k)));
  for (int k = 0; k < existentials; ++k) es.push_back(s->new_var(logic::VarRole::Aux, "e" + std::to_string(k)));
  all = us;
  all.insert(all.end(), es.begin(), es.end());
  p.prefix = {{logic::Quantifier::Forall, us}, {logic::Quantifier::Exists, es}};
  std::map<logic::Var, std::vector<logic::Var>> deps;
  for (logic::Var e : es) {
    auto& d = deps[e];
    for (logic::Var u : us) {
      if (rng() % 2) d.push_back(u);
    }
  }
  p.dependencies = std::move(deps);
  p.matrix = random_matrix(rng, *s, all);
  return p;
}

bool cnf_satisfiable(const logic::Cnf& cnf) {
  if (cnf.num_vars > 22) throw std::invalid_argument("CNF too large for enumeration");
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << cnf.num_vars); ++a) {
    bool ok = true;
    for (const auto& clause : cnf.clauses) {
      bool sat = false;
      for (int lit : clause) {
        const bool v = (a >> (std::abs(lit) - 1)) & 1u;
        if (v == (lit > 0)) {
          sat = true;
          break;
        }
      }
      if (!sat) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::vector<Valuation> simulate_aag(const std::string& text, const std::vector<Valuation>& inputs) {
  std::istringstream in(text);
  std::string magic;
  unsigned M = 0, I = 0, L = 0, O = 0, A = 0;
  in >> magic >> M >> I >> L >> O >> A;
  if (magic != "aag") throw std::invalid_argument("not an aag file");
  std::vector<unsigned> input_lits(I), latch_lits(L), latch_next(L), output_lits(O);
  for (auto& lit : input_lits) in >> lit;
  for (unsigned k = 0; k < L; ++k) {
    in >> latch_lits[k] >> latch_next[k];
    // An optional reset value would follow on the same line; none is written.
  }
  for (auto& lit : output_lits) in >> lit;
  std::map<unsigned, std::pair<unsigned, unsigned>> ands;
  for (unsigned k = 0; k < A; ++k) {
    unsigned lhs = 0, r0 = 0, r1 = 0;
    in >> lhs >> r0 >> r1;
    ands[lhs / 2] = {r0, r1};
  }
  if (!in) throw std::invalid_argument("truncated aag file");

  std::vector<char> latch_state(L, 0);
  std::vector<Valuation> result;
  for (Valuation step_in : inputs) {
    std::map<unsigned, bool> var_value{{0u, false}};
    for (unsigned j = 0; j < I; ++j) var_value[input_lits[j] / 2] = (step_in >> j) & 1u;
    for (unsigned k = 0; k < L; ++k) var_value[latch_lits[k] / 2] = latch_state[k] != 0;
    std::function<bool(unsigned)> lit_value = [&](unsigned lit) -> bool {
      const unsigned var = lit / 2;
      auto it = var_value.find(var);
      bool v;
      if (it != var_value.end()) {
        v = it->second;
      } else {
        const auto& [a, b] = ands.at(var);
        v = lit_value(a) && lit_value(b);
        var_value[var] = v;
      }
      return (lit & 1u) ? !v : v;
    };
    Valuation out = 0;
    for (unsigned o = 0; o < O; ++o) out |= Valuation{lit_value(output_lits[o])} << o;
    result.push_back(out);
    for (unsigned k = 0; k < L; ++k) latch_state[k] = lit_value(latch_next[k]);
  }
  return result;
}

TransitionSystem arbiter_system() {
  // g1 is output bit 0, g2 is bit 1.
  return TransitionSystem(Semantics::Moore, {"r1", "r2"}, {"g1", "g2"}, {{1, 1, 1, 1}, {0, 0, 0, 0}},
                          {{1, 1, 1, 1}, {2, 2, 2, 2}});
}

ltl::Formula arbiter_formula() {
  return ltl::parse("G (r1 -> X F g1) && G (r2 -> X F g2) && G !(g1 && g2)");
}

}  // namespace oracle
