#include "boundsyn/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "scc.hpp"

namespace boundsyn {

int Alphabet::index_of(const std::string& name) const {
  for (int i = 0; i < num_inputs(); ++i) {
    if (inputs[i] == name) return i;
  }
  for (int i = 0; i < num_outputs(); ++i) {
    if (outputs[i] == name) return num_inputs() + i;
  }
  return -1;
}

const std::string& Alphabet::name(int atom) const {
  return atom < num_inputs() ? inputs.at(atom) : outputs.at(atom - num_inputs());
}

bool Guard::evaluate(Valuation letter) const {
  for (const auto& cube : cubes) {
    bool ok = true;
    for (const auto& lit : cube) {
      if ((((letter >> lit.atom) & 1u) != 0) != lit.positive) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  }
  return false;
}

bool Guard::satisfiable() const {
  for (const auto& cube : cubes) {
    bool consistent = true;
    for (std::size_t i = 0; i + 1 < cube.size(); ++i) {
      if (cube[i].atom == cube[i + 1].atom && cube[i].positive != cube[i + 1].positive) consistent = false;
    }
    if (consistent) return true;
  }
  return false;
}

std::string Guard::to_string(const Alphabet& alphabet) const {
  if (cubes.empty()) return "false";
  std::string out;
  for (std::size_t c = 0; c < cubes.size(); ++c) {
    if (c) out += " | ";
    if (cubes[c].empty()) {
      out += "true";
      continue;
    }
    for (std::size_t i = 0; i < cubes[c].size(); ++i) {
      if (i) out += "&";
      if (!cubes[c][i].positive) out += "!";
      out += alphabet.name(cubes[c][i].atom);
    }
  }
  return out;
}

int Ucw::add_state(bool rejecting, std::string label) {
  rejecting_.push_back(rejecting ? 1 : 0);
  labels_.push_back(label.empty() ? "q" + std::to_string(rejecting_.size() - 1) : std::move(label));
  edges_.emplace_back();
  return num_states() - 1;
}

void Ucw::set_initial(int q) {
  if (q < 0 || q >= num_states()) throw Error("initial state out of range");
  initial_ = q;
}

void Ucw::add_edge(int from, int to, Guard guard) {
  if (from < 0 || from >= num_states() || to < 0 || to >= num_states()) throw Error("edge endpoint out of range");
  for (const auto& cube : guard.cubes) {
    for (const auto& lit : cube) {
      if (lit.atom < 0 || lit.atom >= alphabet_.size()) throw Error("guard mentions an atom outside the alphabet");
    }
  }
  for (auto& e : edges_[from]) {
    if (e.target == to) {
      for (auto& c : guard.cubes) e.guard.cubes.push_back(std::move(c));
      return;
    }
  }
  edges_[from].push_back(UcwEdge{to, std::move(guard)});
}

int Ucw::num_rejecting() const { return static_cast<int>(std::count(rejecting_.begin(), rejecting_.end(), 1)); }

const Guard* Ucw::guard(int from, int to) const {
  for (const auto& e : edges_.at(from)) {
    if (e.target == to) return &e.guard;
  }
  return nullptr;
}

std::string Ucw::to_dot() const {
  std::ostringstream out;
  out << "digraph ucw {\n  rankdir=LR;\n  init [shape=point];\n";
  for (int q = 0; q < num_states(); ++q) {
    out << "  q" << q << " [label=\"" << labels_[q] << "\", shape=" << (rejecting(q) ? "doublecircle" : "circle")
        << "];\n";
  }
  out << "  init -> q" << initial_ << ";\n";
  for (int q = 0; q < num_states(); ++q) {
    for (const auto& e : edges_[q]) {
      out << "  q" << q << " -> q" << e.target << " [label=\"" << e.guard.to_string(alphabet_) << "\"];\n";
    }
  }
  out << "}\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Tableau construction

namespace {

struct Sub {
  ltl::Kind kind;
  int lhs = -1;
  int rhs = -1;
  int atom = -1;  // for Atom, and for Not over an atom
};

struct TableauNode {
  std::set<int> incoming;  // -1 stands for the initial pseudo-node
  std::set<int> fresh;
  std::set<int> old;
  std::set<int> next;
};

class Tableau {
 public:
  Tableau(const ltl::Formula& nnf, const Alphabet& alphabet) : alphabet_(alphabet) { root_ = intern(nnf); }

  void run() {
    TableauNode start;
    start.incoming.insert(-1);
    start.fresh.insert(root_);
    expand(std::move(start));
  }

  const std::vector<TableauNode>& nodes() const { return nodes_; }

  std::vector<int> untils() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(subs_.size()); ++i) {
      if (subs_[i].kind == ltl::Kind::Until) out.push_back(i);
    }
    return out;
  }

  const Sub& sub(int id) const { return subs_[id]; }

  Cube label(const TableauNode& node) const {
    Cube cube;
    for (int id : node.old) {
      const Sub& s = subs_[id];
      if (s.kind == ltl::Kind::Atom) cube.push_back({s.atom, true});
      if (s.kind == ltl::Kind::Not) cube.push_back({s.atom, false});
    }
    std::sort(cube.begin(), cube.end(), [](const Literal& a, const Literal& b) { return a.atom < b.atom; });
    return cube;
  }

 private:
  int intern(const ltl::Formula& f) {
    const std::string key = ltl::to_string(f);
    if (auto it = ids_.find(key); it != ids_.end()) return it->second;
    Sub s{f.kind()};
    switch (f.kind()) {
      case ltl::Kind::Atom:
        s.atom = alphabet_.index_of(f.name());
        if (s.atom < 0) throw Error("atom \"" + f.name() + "\" is not in the alphabet");
        break;
      case ltl::Kind::Not:
        if (f.child(0).kind() != ltl::Kind::Atom) throw Error("tableau expects negation normal form");
        s.lhs = intern(f.child(0));
        s.atom = subs_[s.lhs].atom;
        break;
      case ltl::Kind::True:
      case ltl::Kind::False:
        break;
      case ltl::Kind::Next:
        s.lhs = intern(f.child(0));
        break;
      case ltl::Kind::And:
      case ltl::Kind::Or:
      case ltl::Kind::Until:
      case ltl::Kind::Release:
        s.lhs = intern(f.child(0));
        s.rhs = intern(f.child(1));
        break;
      default:
        throw Error("tableau expects negation normal form");
    }
    const int id = static_cast<int>(subs_.size());
    subs_.push_back(s);
    ids_.emplace(key, id);
    return id;
  }

  bool contradicts(const TableauNode& node, int literal) const {
    const Sub& s = subs_[literal];
    for (int id : node.old) {
      const Sub& o = subs_[id];
      if (o.atom == s.atom && (o.kind == ltl::Kind::Atom || o.kind == ltl::Kind::Not) && o.kind != s.kind) return true;
    }
    return false;
  }

  static void add_fresh(TableauNode& node, int id) {
    if (!node.old.count(id)) node.fresh.insert(id);
  }

  void expand(TableauNode node) {
    while (true) {
      if (node.fresh.empty()) {
        for (auto& existing : nodes_) {
          if (existing.old == node.old && existing.next == node.next) {
            existing.incoming.insert(node.incoming.begin(), node.incoming.end());
            return;
          }
        }
        const int id = static_cast<int>(nodes_.size());
        TableauNode successor;
        successor.incoming.insert(id);
        successor.fresh = node.next;
        nodes_.push_back(std::move(node));
        expand(std::move(successor));
        return;
      }
      const int eta = *node.fresh.begin();
      node.fresh.erase(node.fresh.begin());
      if (node.old.count(eta)) continue;
      const Sub& s = subs_[eta];
      switch (s.kind) {
        case ltl::Kind::False:
          return;
        case ltl::Kind::True:
          node.old.insert(eta);
          continue;
        case ltl::Kind::Atom:
        case ltl::Kind::Not:
          if (contradicts(node, eta)) return;
          node.old.insert(eta);
          continue;
        case ltl::Kind::And:
          node.old.insert(eta);
          add_fresh(node, s.lhs);
          add_fresh(node, s.rhs);
          continue;
        case ltl::Kind::Next:
          node.old.insert(eta);
          node.next.insert(s.lhs);
          continue;
        case ltl::Kind::Or:
        case ltl::Kind::Until:
        case ltl::Kind::Release: {
          TableauNode first = node;
          TableauNode second = std::move(node);
          first.old.insert(eta);
          second.old.insert(eta);
          if (s.kind == ltl::Kind::Or) {
            add_fresh(first, s.lhs);
            add_fresh(second, s.rhs);
          } else if (s.kind == ltl::Kind::Until) {
            add_fresh(first, s.lhs);
            first.next.insert(eta);
            add_fresh(second, s.rhs);
          } else {
            add_fresh(first, s.rhs);
            first.next.insert(eta);
            add_fresh(second, s.lhs);
            add_fresh(second, s.rhs);
          }
          expand(std::move(first));
          expand(std::move(second));
          return;
        }
        default:
          return;
      }
    }
  }

  const Alphabet& alphabet_;
  std::vector<Sub> subs_;
  std::map<std::string, int> ids_;
  std::vector<TableauNode> nodes_;
  int root_ = -1;
};

}  // namespace

Ucw ltl_to_ucw(const ltl::Formula& formula, const std::vector<std::string>& inputs,
               const std::vector<std::string>& outputs) {
  Alphabet alphabet{inputs, outputs};
  if (alphabet.size() > kMaxAtoms) throw Error("alphabet too large");
  for (const auto& a : formula.atoms()) {
    if (alphabet.index_of(a) < 0) throw Error("atom \"" + a + "\" is not in the alphabet");
  }

  Tableau tableau(ltl::negate(formula), alphabet);
  tableau.run();
  const auto& nodes = tableau.nodes();
  const auto untils = tableau.untils();
  const int levels = std::max<int>(1, static_cast<int>(untils.size()));

  // in_set[k][node]: node belongs to the k-th generalized acceptance set.
  std::vector<std::vector<char>> in_set(levels, std::vector<char>(nodes.size(), 1));
  for (std::size_t k = 0; k < untils.size(); ++k) {
    const int u = untils[k];
    const int rhs = tableau.sub(u).rhs;
    for (std::size_t n = 0; n < nodes.size(); ++n) {
      in_set[k][n] = !nodes[n].old.count(u) || nodes[n].old.count(rhs);
    }
  }
  std::vector<std::vector<int>> successors(nodes.size() + 1);  // index 0 = initial pseudo-node
  for (std::size_t n = 0; n < nodes.size(); ++n) {
    for (int p : nodes[n].incoming) successors[p + 1].push_back(static_cast<int>(n) + 1);
  }
  std::vector<Cube> labels;
  labels.push_back({});
  for (const auto& node : nodes) labels.push_back(tableau.label(node));

  // Counting degeneralization over (tableau node, level), explored breadth
  // first. A node skips every level whose set it already belongs to; having
  // passed the last level it is accepting and the count restarts at 0.
  auto jump = [&](int node, int level) {
    while (level < levels && in_set[level][node - 1]) ++level;
    return level;
  };
  std::map<std::pair<int, int>, int> index;
  std::vector<std::pair<int, int>> states;
  std::vector<std::vector<int>> graph;
  std::deque<int> queue;
  auto lookup = [&](int node, int level) {
    auto [it, inserted] = index.try_emplace({node, level}, static_cast<int>(states.size()));
    if (inserted) {
      states.push_back({node, level});
      graph.emplace_back();
      queue.push_back(it->second);
    }
    return it->second;
  };
  lookup(0, 0);
  while (!queue.empty()) {
    const int s = queue.front();
    queue.pop_front();
    const auto [node, level] = states[s];
    int next_level = 0;
    if (node != 0) {
      next_level = jump(node, level);
      if (next_level == levels) next_level = 0;
    }
    for (int succ : successors[node]) {
      const int t = lookup(succ, next_level);
      graph[s].push_back(t);
    }
  }
  std::vector<char> rejecting(states.size(), 0);
  for (std::size_t s = 0; s < states.size(); ++s) {
    const auto [node, level] = states[s];
    rejecting[s] = node != 0 && jump(node, level) == levels;
  }

  // Keep only states that can reach a cycle through a rejecting state.
  int num_components = 0;
  const auto comp = detail::tarjan_scc(graph, &num_components);
  const auto cyclic = detail::cyclic_components(graph, comp, num_components);
  std::vector<char> useful(states.size(), 0);
  std::vector<char> component_rejecting(num_components, 0);
  for (std::size_t s = 0; s < states.size(); ++s) {
    if (rejecting[s] && cyclic[comp[s]]) component_rejecting[comp[s]] = 1;
  }
  // Tarjan ids are reverse topological: successors have smaller ids.
  std::vector<std::vector<int>> members(num_components);
  for (std::size_t s = 0; s < states.size(); ++s) members[comp[s]].push_back(static_cast<int>(s));
  std::vector<char> component_useful(num_components, 0);
  for (int c = 0; c < num_components; ++c) {
    bool ok = component_rejecting[c];
    for (int s : members[c]) {
      for (int t : graph[s]) {
        if (comp[t] != c && component_useful[comp[t]]) ok = true;
      }
    }
    component_useful[c] = ok;
  }
  for (std::size_t s = 0; s < states.size(); ++s) useful[s] = component_useful[comp[s]];

  Ucw ucw(alphabet);
  std::vector<int> renamed(states.size(), -1);
  std::deque<int> order{0};
  renamed[0] = ucw.add_state(useful[0] && rejecting[0], "init");
  while (!order.empty()) {
    const int s = order.front();
    order.pop_front();
    for (int t : graph[s]) {
      if (!useful[t]) continue;
      if (renamed[t] < 0) {
        const auto [node, level] = states[t];
        renamed[t] = ucw.add_state(rejecting[t], "n" + std::to_string(node - 1) + "/" + std::to_string(level));
        order.push_back(t);
      }
      ucw.add_edge(renamed[s], renamed[t], Guard::cube(labels[states[t].first]));
    }
  }
  ucw.set_initial(0);
  return ucw;
}

bool ucw_accepts_lasso(const Ucw& automaton, const std::vector<Valuation>& prefix, const std::vector<Valuation>& loop) {
  if (loop.empty()) throw Error("lasso loop must be nonempty");
  const int positions = static_cast<int>(prefix.size() + loop.size());
  auto letter = [&](int p) { return p < static_cast<int>(prefix.size()) ? prefix[p] : loop[p - prefix.size()]; };
  auto successor = [&](int p) { return p + 1 < positions ? p + 1 : static_cast<int>(prefix.size()); };
  const int m = automaton.num_states();
  auto id = [&](int q, int p) { return q * positions + p; };
  std::vector<std::vector<int>> graph(static_cast<std::size_t>(m) * positions);
  for (int q = 0; q < m; ++q) {
    for (int p = 0; p < positions; ++p) {
      for (const auto& e : automaton.edges(q)) {
        if (e.guard.evaluate(letter(p))) graph[id(q, p)].push_back(id(e.target, successor(p)));
      }
    }
  }
  // Restrict to vertices reachable from (q0, 0).
  std::vector<char> reachable(graph.size(), 0);
  std::vector<int> stack{id(automaton.initial(), 0)};
  reachable[stack.back()] = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : graph[v]) {
      if (!reachable[w]) {
        reachable[w] = 1;
        stack.push_back(w);
      }
    }
  }
  int num_components = 0;
  const auto comp = detail::tarjan_scc(graph, &num_components);
  const auto cyclic = detail::cyclic_components(graph, comp, num_components);
  for (int q = 0; q < m; ++q) {
    if (!automaton.rejecting(q)) continue;
    for (int p = 0; p < positions; ++p) {
      const int v = id(q, p);
      if (reachable[v] && cyclic[comp[v]]) return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// SCC analysis

int SccInfo::num_counted() const { return static_cast<int>(std::count(counted.begin(), counted.end(), 1)); }

namespace {

int counter_width(const Ucw& automaton, int system_states) {
  if (system_states < 1) throw Error("system bound must be at least 1");
  const auto max_rank = static_cast<std::uint64_t>(system_states) * static_cast<std::uint64_t>(automaton.num_rejecting());
  return std::max(1, ceil_log2(max_rank + 1));
}

std::vector<std::vector<int>> edge_graph(const Ucw& automaton) {
  std::vector<std::vector<int>> graph(automaton.num_states());
  for (int q = 0; q < automaton.num_states(); ++q) {
    for (const auto& e : automaton.edges(q)) {
      if (e.guard.satisfiable()) graph[q].push_back(e.target);
    }
  }
  return graph;
}

}  // namespace

SccInfo analyze_sccs(const Ucw& automaton, int system_states) {
  SccInfo info;
  info.counter_bits = counter_width(automaton, system_states);
  int num_components = 0;
  info.scc_id = detail::tarjan_scc(edge_graph(automaton), &num_components);
  std::vector<char> has_rejecting(num_components, 0);
  for (int q = 0; q < automaton.num_states(); ++q) {
    if (automaton.rejecting(q)) has_rejecting[info.scc_id[q]] = 1;
  }
  info.counted.resize(automaton.num_states());
  for (int q = 0; q < automaton.num_states(); ++q) info.counted[q] = has_rejecting[info.scc_id[q]];
  return info;
}

SccInfo unreduced_scc_info(const Ucw& automaton, int system_states) {
  SccInfo info;
  info.counter_bits = counter_width(automaton, system_states);
  // A single pseudo-component: every edge carries a comparison.
  info.scc_id.assign(automaton.num_states(), 0);
  info.counted.assign(automaton.num_states(), 1);
  return info;
}

// ---------------------------------------------------------------------------
// Symbolic encoding

SymbolicUcw encode_symbolic(const Ucw& automaton) {
  using logic::Formula;
  SymbolicUcw sym;
  sym.store = std::make_shared<logic::FormulaStore>();
  sym.alphabet = automaton.alphabet();
  sym.num_states = automaton.num_states();
  auto& store = *sym.store;
  const int bits = std::max(1, ceil_log2(static_cast<std::uint64_t>(automaton.num_states())));
  for (int b = 0; b < bits; ++b) {
    sym.state_bits.push_back(store.new_var(logic::VarRole::AutomatonState, "q[" + std::to_string(b) + "]"));
  }
  for (int b = 0; b < bits; ++b) {
    sym.next_state_bits.push_back(store.new_var(logic::VarRole::NextAutomatonState, "q'[" + std::to_string(b) + "]"));
  }
  for (int a = 0; a < sym.alphabet.size(); ++a) {
    sym.atom_vars.push_back(
        store.new_var(sym.alphabet.is_input(a) ? logic::VarRole::Input : logic::VarRole::Output, sym.alphabet.name(a)));
  }
  logic::BitVec current, primed;
  for (auto v : sym.state_bits) current.bits.push_back(store.var(v));
  for (auto v : sym.next_state_bits) primed.bits.push_back(store.var(v));

  sym.init = logic::bv_equals_const(store, current, static_cast<std::uint64_t>(automaton.initial()));
  std::vector<Formula> rejecting;
  std::vector<Formula> edges;
  for (int q = 0; q < automaton.num_states(); ++q) {
    if (automaton.rejecting(q)) rejecting.push_back(logic::bv_equals_const(store, primed, static_cast<std::uint64_t>(q)));
    for (const auto& e : automaton.edges(q)) {
      std::vector<Formula> cubes;
      for (const auto& cube : e.guard.cubes) {
        std::vector<Formula> lits;
        for (const auto& lit : cube) {
          const Formula v = store.var(sym.atom_vars[lit.atom]);
          lits.push_back(lit.positive ? v : store.lnot(v));
        }
        cubes.push_back(store.land(std::move(lits)));
      }
      edges.push_back(store.land({logic::bv_equals_const(store, current, static_cast<std::uint64_t>(q)),
                                  store.lor(std::move(cubes)),
                                  logic::bv_equals_const(store, primed, static_cast<std::uint64_t>(e.target))}));
    }
  }
  sym.reject = store.lor(std::move(rejecting));
  sym.delta = store.lor(std::move(edges));
  return sym;
}

}  // namespace boundsyn
