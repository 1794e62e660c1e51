#include "boundsyn/logic.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace boundsyn::logic {

std::size_t FormulaStore::KeyHash::operator()(const std::vector<std::uint32_t>& key) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (std::uint32_t x : key) {
    h ^= x + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

FormulaStore::FormulaStore() {
  false_ = intern(NodeKind::Const, 0, {});
  true_ = intern(NodeKind::Const, 1, {});
}

Formula FormulaStore::intern(NodeKind kind, std::uint32_t payload, std::vector<Formula> children) {
  std::vector<std::uint32_t> key;
  key.reserve(children.size() + 2);
  key.push_back(static_cast<std::uint32_t>(kind));
  key.push_back(payload);
  for (Formula c : children) key.push_back(c.id);
  auto [it, inserted] = table_.try_emplace(std::move(key), static_cast<std::uint32_t>(nodes_.size()));
  if (inserted) nodes_.push_back(Node{kind, payload, std::move(children)});
  return Formula{it->second};
}

Var FormulaStore::new_var(VarRole role, std::string name) {
  vars_.push_back(VarInfo{role, std::move(name)});
  const Var v = static_cast<Var>(vars_.size());
  var_nodes_.push_back(intern(NodeKind::Var, v, {}));
  return v;
}

Formula FormulaStore::var(Var v) {
  if (v == 0 || v > vars_.size()) throw Error("unknown variable " + std::to_string(v));
  return var_nodes_[v - 1];
}

Formula FormulaStore::lnot(Formula f) {
  if (f == true_) return false_;
  if (f == false_) return true_;
  const Node& n = node(f);
  if (n.kind == NodeKind::Not) return n.children[0];
  return intern(NodeKind::Not, 0, {f});
}

namespace {

// Shared body of land/lor: `absorbing` is the constant that decides the
// result, `neutral` the one that disappears.
template <typename Store>
std::optional<Formula> normalize_junction(Store& store, std::vector<Formula>& parts, Formula absorbing, Formula neutral) {
  std::vector<Formula> kept;
  kept.reserve(parts.size());
  for (Formula p : parts) {
    if (p == absorbing) return absorbing;
    if (p != neutral) kept.push_back(p);
  }
  std::sort(kept.begin(), kept.end());
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());
  for (Formula p : kept) {
    const Node& n = store.node(p);
    if (n.kind == NodeKind::Not && std::binary_search(kept.begin(), kept.end(), n.children[0])) return absorbing;
  }
  if (kept.empty()) return neutral;
  if (kept.size() == 1) return kept.front();
  parts = std::move(kept);
  return std::nullopt;
}

}  // namespace

Formula FormulaStore::land(std::vector<Formula> parts) {
  if (auto r = normalize_junction(*this, parts, false_, true_)) return *r;
  return intern(NodeKind::And, 0, std::move(parts));
}

Formula FormulaStore::lor(std::vector<Formula> parts) {
  if (auto r = normalize_junction(*this, parts, true_, false_)) return *r;
  return intern(NodeKind::Or, 0, std::move(parts));
}

Formula FormulaStore::lxor(Formula a, Formula b) {
  bool flip = false;
  if (node(a).kind == NodeKind::Not) {
    a = node(a).children[0];
    flip = !flip;
  }
  if (node(b).kind == NodeKind::Not) {
    b = node(b).children[0];
    flip = !flip;
  }
  Formula result;
  if (a == b) {
    result = false_;
  } else if (a == false_ || b == false_) {
    result = a == false_ ? b : a;
  } else if (a == true_ || b == true_) {
    result = lnot(a == true_ ? b : a);
  } else {
    if (b < a) std::swap(a, b);
    result = intern(NodeKind::Xor, 0, {a, b});
  }
  return flip ? lnot(result) : result;
}

Formula FormulaStore::ite(Formula c, Formula t, Formula e) {
  if (c == true_) return t;
  if (c == false_) return e;
  if (t == e) return t;
  if (node(c).kind == NodeKind::Not) return ite(node(c).children[0], e, t);
  if (t == true_) return lor(c, e);
  if (t == false_) return land(lnot(c), e);
  if (e == true_) return lor(lnot(c), t);
  if (e == false_) return land(c, t);
  return intern(NodeKind::Ite, 0, {c, t, e});
}

std::size_t FormulaStore::dag_size(Formula root) const {
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<Formula> stack{root};
  std::size_t count = 0;
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (seen[f.id]) continue;
    seen[f.id] = 1;
    ++count;
    for (Formula c : nodes_[f.id].children) stack.push_back(c);
  }
  return count;
}

std::vector<Var> FormulaStore::support(Formula root) const {
  std::vector<char> seen(nodes_.size(), 0);
  std::vector<Formula> stack{root};
  std::vector<Var> vars;
  while (!stack.empty()) {
    Formula f = stack.back();
    stack.pop_back();
    if (seen[f.id]) continue;
    seen[f.id] = 1;
    if (nodes_[f.id].kind == NodeKind::Var) vars.push_back(nodes_[f.id].payload);
    for (Formula c : nodes_[f.id].children) stack.push_back(c);
  }
  std::sort(vars.begin(), vars.end());
  return vars;
}

bool FormulaStore::evaluate(Formula root, const std::function<bool(Var)>& assignment) const {
  std::vector<std::int8_t> value(nodes_.size(), -1);
  std::vector<std::pair<Formula, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [f, expanded] = stack.back();
    stack.pop_back();
    if (value[f.id] >= 0) continue;
    const Node& n = nodes_[f.id];
    if (!expanded && !n.children.empty()) {
      stack.push_back({f, true});
      for (Formula c : n.children) {
        if (value[c.id] < 0) stack.push_back({c, false});
      }
      continue;
    }
    bool v = false;
    switch (n.kind) {
      case NodeKind::Const: v = n.payload != 0; break;
      case NodeKind::Var: v = assignment(n.payload); break;
      case NodeKind::Not: v = !value[n.children[0].id]; break;
      case NodeKind::And:
        v = std::all_of(n.children.begin(), n.children.end(), [&](Formula c) { return value[c.id] == 1; });
        break;
      case NodeKind::Or:
        v = std::any_of(n.children.begin(), n.children.end(), [&](Formula c) { return value[c.id] == 1; });
        break;
      case NodeKind::Xor: v = value[n.children[0].id] != value[n.children[1].id]; break;
      case NodeKind::Ite:
        v = value[n.children[0].id] ? value[n.children[1].id] == 1 : value[n.children[2].id] == 1;
        break;
    }
    value[f.id] = v ? 1 : 0;
  }
  return value[root.id] == 1;
}

Formula FormulaStore::import(const FormulaStore& source, Formula root, const std::function<Formula(Var)>& mapping) {
  std::unordered_map<std::uint32_t, Formula> memo;
  std::function<Formula(Formula)> copy = [&](Formula f) -> Formula {
    if (auto it = memo.find(f.id); it != memo.end()) return it->second;
    const Node& n = source.node(f);
    Formula result;
    switch (n.kind) {
      case NodeKind::Const: result = constant(n.payload != 0); break;
      case NodeKind::Var: result = mapping(n.payload); break;
      case NodeKind::Not: result = lnot(copy(n.children[0])); break;
      case NodeKind::And:
      case NodeKind::Or: {
        std::vector<Formula> parts;
        parts.reserve(n.children.size());
        for (Formula c : n.children) parts.push_back(copy(c));
        result = n.kind == NodeKind::And ? land(std::move(parts)) : lor(std::move(parts));
        break;
      }
      case NodeKind::Xor: result = lxor(copy(n.children[0]), copy(n.children[1])); break;
      case NodeKind::Ite: result = ite(copy(n.children[0]), copy(n.children[1]), copy(n.children[2])); break;
    }
    memo.emplace(f.id, result);
    return result;
  };
  return copy(root);
}

// ---------------------------------------------------------------------------
// Bit vectors

BitVec fresh_bitvec(FormulaStore& store, int width, VarRole role, const std::string& name) {
  BitVec v;
  for (int i = 0; i < width; ++i) v.bits.push_back(store.var(store.new_var(role, name + "[" + std::to_string(i) + "]")));
  return v;
}

BitVec constant_bitvec(const FormulaStore& store, std::uint64_t value, int width) {
  BitVec v;
  for (int i = 0; i < width; ++i) v.bits.push_back(store.constant(((value >> i) & 1u) != 0));
  return v;
}

Formula bv_greater(FormulaStore& store, const BitVec& x, const BitVec& y, bool strict) {
  if (x.width() != y.width()) throw Error("bit-vector width mismatch");
  // acc holds the comparison of the low-order prefix processed so far.
  Formula acc = store.constant(!strict);
  for (std::size_t i = 0; i < x.width(); ++i) {
    const Formula xi = x.bits[i];
    const Formula yi = y.bits[i];
    acc = store.lor(store.land(xi, store.lnot(yi)), store.land(store.iff(xi, yi), acc));
  }
  return acc;
}

Formula bv_equal(FormulaStore& store, const BitVec& x, const BitVec& y) {
  if (x.width() != y.width()) throw Error("bit-vector width mismatch");
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < x.width(); ++i) parts.push_back(store.iff(x.bits[i], y.bits[i]));
  return store.land(std::move(parts));
}

Formula bv_equals_const(FormulaStore& store, const BitVec& x, std::uint64_t value) {
  std::vector<Formula> parts;
  for (std::size_t i = 0; i < x.width(); ++i) {
    parts.push_back(((value >> i) & 1u) ? x.bits[i] : store.lnot(x.bits[i]));
  }
  if (x.width() < 64 && (value >> x.width()) != 0) return store.constant(false);
  return store.land(std::move(parts));
}

Formula bv_less_than_const(FormulaStore& store, const BitVec& x, std::uint64_t bound) {
  if (x.width() < 64 && bound >= (std::uint64_t{1} << x.width())) return store.constant(true);
  // x < bound  <=>  not (x >= bound)
  return store.lnot(bv_greater(store, x, constant_bitvec(store, bound, static_cast<int>(x.width())), false));
}

// ---------------------------------------------------------------------------
// Problems

Fragment QuantifiedProblem::fragment() const {
  if (dependencies) return Fragment::Dqbf;
  for (const auto& b : prefix) {
    if (b.quantifier == Quantifier::Forall && !b.vars.empty()) return Fragment::Qbf;
  }
  return Fragment::Sat;
}

std::vector<Var> QuantifiedProblem::universals() const {
  std::vector<Var> out;
  for (const auto& b : prefix) {
    if (b.quantifier == Quantifier::Forall) out.insert(out.end(), b.vars.begin(), b.vars.end());
  }
  return out;
}

std::vector<Var> QuantifiedProblem::existentials() const {
  std::vector<Var> out;
  for (const auto& b : prefix) {
    if (b.quantifier == Quantifier::Exists) out.insert(out.end(), b.vars.begin(), b.vars.end());
  }
  return out;
}

void QuantifiedProblem::validate() const {
  if (!store) throw Error("problem without formula store");
  std::vector<int> bound(store->num_vars() + 1, 0);
  for (const auto& b : prefix) {
    for (Var v : b.vars) {
      if (v == 0 || v > store->num_vars()) throw Error("prefix names unknown variable " + std::to_string(v));
      if (++bound[v] > 1) throw Error("variable " + std::to_string(v) + " bound twice");
    }
  }
  for (Var v : store->support(matrix)) {
    if (bound[v] == 0) throw Error("variable " + std::to_string(v) + " (" + store->var_info(v).name + ") is free");
  }
  if (dependencies) {
    std::set<Var> universal_set;
    for (Var u : universals()) universal_set.insert(u);
    for (Var e : existentials()) {
      auto it = dependencies->find(e);
      if (it == dependencies->end()) throw Error("existential " + std::to_string(e) + " lacks a dependency set");
      for (Var u : it->second) {
        if (!universal_set.count(u)) throw Error("dependency of " + std::to_string(e) + " is not universal");
      }
    }
  }
}

CountProfile count_profile(const QuantifiedProblem& problem) {
  CountProfile p;
  p.existentials = problem.existentials().size();
  p.universals = problem.universals().size();
  p.matrix_nodes = problem.store->dag_size(problem.matrix);
  return p;
}

// ---------------------------------------------------------------------------
// Tseitin

namespace {

class Definer {
 public:
  Definer(const FormulaStore& store, TseitinResult& out) : store_(store), out_(out), lit_(store.num_nodes(), 0) {
    out_.cnf.num_vars = store.num_vars();
  }

  int literal(Formula root) {
    std::vector<std::pair<Formula, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [f, expanded] = stack.back();
      stack.pop_back();
      if (lit_[f.id] != 0) continue;
      const Node& n = store_.node(f);
      if (n.kind == NodeKind::Var) {
        lit_[f.id] = static_cast<int>(n.payload);
        continue;
      }
      if (!expanded && !n.children.empty()) {
        stack.push_back({f, true});
        for (Formula c : n.children) {
          if (lit_[c.id] == 0) stack.push_back({c, false});
        }
        continue;
      }
      if (n.kind == NodeKind::Not) {
        lit_[f.id] = -lit_[n.children[0].id];
        continue;
      }
      const int t = fresh(f);
      lit_[f.id] = t;
      auto child = [&](std::size_t i) { return lit_[n.children[i].id]; };
      auto& clauses = out_.cnf.clauses;
      switch (n.kind) {
        case NodeKind::Const:
          clauses.push_back({n.payload ? t : -t});
          break;
        case NodeKind::And: {
          Clause big{t};
          for (std::size_t i = 0; i < n.children.size(); ++i) {
            clauses.push_back({-t, child(i)});
            big.push_back(-child(i));
          }
          clauses.push_back(std::move(big));
          break;
        }
        case NodeKind::Or: {
          Clause big{-t};
          for (std::size_t i = 0; i < n.children.size(); ++i) {
            clauses.push_back({t, -child(i)});
            big.push_back(child(i));
          }
          clauses.push_back(std::move(big));
          break;
        }
        case NodeKind::Xor: {
          const int a = child(0), b = child(1);
          clauses.push_back({-t, a, b});
          clauses.push_back({-t, -a, -b});
          clauses.push_back({t, -a, b});
          clauses.push_back({t, a, -b});
          break;
        }
        case NodeKind::Ite: {
          const int c = child(0), a = child(1), b = child(2);
          clauses.push_back({-t, -c, a});
          clauses.push_back({-t, c, b});
          clauses.push_back({t, -c, -a});
          clauses.push_back({t, c, -b});
          break;
        }
        default:
          break;
      }
    }
    return lit_[root.id];
  }

 private:
  int fresh(Formula f) {
    const int t = static_cast<int>(++out_.cnf.num_vars);
    out_.definitions.emplace(static_cast<Var>(t), f);
    return t;
  }

  const FormulaStore& store_;
  TseitinResult& out_;
  std::vector<int> lit_;
};

}  // namespace

TseitinResult tseitin(const FormulaStore& store, Formula root) {
  TseitinResult result;
  Definer definer(store, result);
  if (store.is_const(root, true)) return result;
  if (store.is_const(root, false)) {
    result.cnf.clauses.push_back({});
    return result;
  }
  const int top = definer.literal(root);
  result.cnf.clauses.push_back({top});
  return result;
}

TseitinResult clausify(const FormulaStore& store, Formula root) {
  TseitinResult result;
  Definer definer(store, result);
  auto& clauses = result.cnf.clauses;
  std::vector<Formula> pending{root};
  std::vector<char> done(store.num_nodes(), 0);
  while (!pending.empty()) {
    const Formula f = pending.back();
    pending.pop_back();
    if (done[f.id]) continue;
    done[f.id] = 1;
    const Node& n = store.node(f);
    if (n.kind == NodeKind::Const) {
      if (n.payload == 0) clauses.push_back({});
      continue;
    }
    if (n.kind == NodeKind::And) {
      for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) pending.push_back(*it);
      continue;
    }
    if (n.kind == NodeKind::Or) {
      Clause c;
      for (Formula child : n.children) c.push_back(definer.literal(child));
      clauses.push_back(std::move(c));
      continue;
    }
    if (n.kind == NodeKind::Xor) {
      const int a = definer.literal(n.children[0]);
      const int b = definer.literal(n.children[1]);
      clauses.push_back({a, b});
      clauses.push_back({-a, -b});
      continue;
    }
    if (n.kind == NodeKind::Not) {
      const Node& inner = store.node(n.children[0]);
      if (inner.kind == NodeKind::Xor) {
        const int a = definer.literal(inner.children[0]);
        const int b = definer.literal(inner.children[1]);
        clauses.push_back({-a, b});
        clauses.push_back({a, -b});
        continue;
      }
      if (inner.kind == NodeKind::And) {
        Clause c;
        for (Formula child : inner.children) c.push_back(-definer.literal(child));
        clauses.push_back(std::move(c));
        continue;
      }
    }
    clauses.push_back({definer.literal(f)});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Emitters

namespace {

void write_clauses(std::ostringstream& out, const std::vector<Clause>& clauses) {
  for (const auto& c : clauses) {
    for (int l : c) out << l << ' ';
    out << "0\n";
  }
}

void write_var_line(std::ostringstream& out, char kind, const std::vector<int>& vars) {
  out << kind;
  for (int v : vars) out << ' ' << v;
  out << " 0\n";
}

}  // namespace

std::string emit_dimacs(const QuantifiedProblem& problem) {
  if (problem.fragment() != Fragment::Sat) throw FormatError("DIMACS requires a purely existential problem");
  problem.validate();
  const auto ts = clausify(*problem.store, problem.matrix);
  std::ostringstream out;
  out << "p cnf " << ts.cnf.num_vars << ' ' << ts.cnf.clauses.size() << '\n';
  write_clauses(out, ts.cnf.clauses);
  return out.str();
}

std::string emit_qdimacs(const QuantifiedProblem& problem) {
  if (problem.fragment() == Fragment::Dqbf) throw FormatError("QDIMACS requires a prenex QBF (no dependency sets)");
  problem.validate();
  const auto ts = clausify(*problem.store, problem.matrix);

  std::vector<ClauseFile::Quant> blocks;
  for (const auto& b : problem.prefix) {
    if (b.vars.empty()) continue;
    const char kind = b.quantifier == Quantifier::Forall ? 'a' : 'e';
    if (blocks.empty() || blocks.back().kind != kind) blocks.push_back({kind, {}});
    for (Var v : b.vars) blocks.back().vars.push_back(static_cast<int>(v));
  }
  if (!ts.definitions.empty()) {
    if (blocks.empty() || blocks.back().kind != 'e') blocks.push_back({'e', {}});
    for (const auto& [v, node] : ts.definitions) blocks.back().vars.push_back(static_cast<int>(v));
  }
  std::ostringstream out;
  out << "p cnf " << ts.cnf.num_vars << ' ' << ts.cnf.clauses.size() << '\n';
  for (const auto& b : blocks) write_var_line(out, b.kind, b.vars);
  write_clauses(out, ts.cnf.clauses);
  return out.str();
}

std::string emit_dqdimacs(const QuantifiedProblem& problem) {
  if (problem.fragment() != Fragment::Dqbf) throw FormatError("DQDIMACS requires a problem with dependency sets");
  problem.validate();
  const FormulaStore& store = *problem.store;
  const auto ts = clausify(store, problem.matrix);
  const auto universals = problem.universals();

  // Dependency set of every node: universals it mentions plus the
  // dependencies of the existentials it mentions.
  std::vector<std::set<Var>> var_deps(store.num_vars() + 1);
  for (Var u : universals) var_deps[u].insert(u);
  for (const auto& [e, deps] : *problem.dependencies) var_deps[e].insert(deps.begin(), deps.end());
  std::vector<std::optional<std::set<Var>>> node_deps(store.num_nodes());
  std::function<const std::set<Var>&(Formula)> cone = [&](Formula f) -> const std::set<Var>& {
    auto& slot = node_deps[f.id];
    if (slot) return *slot;
    const Node& n = store.node(f);
    std::set<Var> acc;
    if (n.kind == NodeKind::Var) acc = var_deps[n.payload];
    for (Formula c : n.children) {
      const auto& sub = cone(c);
      acc.insert(sub.begin(), sub.end());
    }
    slot = std::move(acc);
    return *slot;
  };

  std::ostringstream out;
  out << "p cnf " << ts.cnf.num_vars << ' ' << ts.cnf.clauses.size() << '\n';
  if (!universals.empty()) {
    std::vector<int> u(universals.begin(), universals.end());
    write_var_line(out, 'a', u);
  }
  std::vector<Var> exist = problem.existentials();
  std::sort(exist.begin(), exist.end());
  auto write_dep = [&](Var v, const std::set<Var>& deps) {
    out << "d " << v;
    for (Var u : deps) out << ' ' << u;
    out << " 0\n";
  };
  for (Var e : exist) {
    const auto& deps = problem.dependencies->at(e);
    write_dep(e, std::set<Var>(deps.begin(), deps.end()));
  }
  for (const auto& [v, node] : ts.definitions) write_dep(v, cone(node));
  write_clauses(out, ts.cnf.clauses);
  return out.str();
}

std::string emit_matching(const QuantifiedProblem& problem) {
  switch (problem.fragment()) {
    case Fragment::Sat: return emit_dimacs(problem);
    case Fragment::Qbf: return emit_qdimacs(problem);
    case Fragment::Dqbf: return emit_dqdimacs(problem);
  }
  return {};
}

// ---------------------------------------------------------------------------
// Reader

namespace {

std::vector<int> read_ints_until_zero(std::istringstream& in, std::size_t line_no) {
  std::vector<int> values;
  long long x = 0;
  while (in >> x) {
    if (x == 0) return values;
    values.push_back(static_cast<int>(x));
  }
  throw FormatError("line " + std::to_string(line_no) + ": missing terminating 0");
}

}  // namespace

ClauseFile read_clause_file(std::string_view text) {
  ClauseFile file;
  bool seen_header = false;
  std::size_t declared_clauses = 0;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string line(text.substr(pos, end - pos));
    pos = end + 1;
    ++line_no;
    if (line.empty()) continue;
    if (line[0] == 'c') {
      if (seen_header) throw FormatError("line " + std::to_string(line_no) + ": comment after header");
      file.comments.push_back(line);
      continue;
    }
    std::istringstream in(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      long long vars = -1, clauses = -1;
      if (!(in >> p >> fmt >> vars >> clauses) || fmt != "cnf" || vars < 0 || clauses < 0) {
        throw FormatError("line " + std::to_string(line_no) + ": malformed header");
      }
      file.num_vars = static_cast<std::uint32_t>(vars);
      declared_clauses = static_cast<std::size_t>(clauses);
      seen_header = true;
      continue;
    }
    if (!seen_header) throw FormatError("line " + std::to_string(line_no) + ": data before header");
    if (line[0] == 'a' || line[0] == 'e') {
      char kind = 0;
      in >> kind;
      file.quantifiers.push_back({kind, read_ints_until_zero(in, line_no)});
      continue;
    }
    if (line[0] == 'd') {
      char kind = 0;
      int v = 0;
      in >> kind >> v;
      file.dependencies.push_back({v, read_ints_until_zero(in, line_no)});
      continue;
    }
    file.clauses.push_back(read_ints_until_zero(in, line_no));
  }
  if (!seen_header) throw FormatError("missing header");
  if (file.clauses.size() != declared_clauses) throw FormatError("clause count does not match header");
  auto check_range = [&](int lit, const char* where) {
    if (lit == 0 || static_cast<std::uint32_t>(std::abs(lit)) > file.num_vars) {
      throw FormatError(std::string("variable ") + std::to_string(lit) + " out of range in " + where);
    }
  };
  for (const auto& c : file.clauses) {
    for (int lit : c) check_range(lit, "clause");
  }
  for (const auto& q : file.quantifiers) {
    for (int v : q.vars) check_range(v, "quantifier line");
  }
  for (const auto& d : file.dependencies) {
    check_range(d.var, "dependency line");
    for (int v : d.deps) check_range(v, "dependency line");
  }
  return file;
}

std::string write_clause_file(const ClauseFile& file) {
  std::ostringstream out;
  for (const auto& c : file.comments) out << c << '\n';
  out << "p cnf " << file.num_vars << ' ' << file.clauses.size() << '\n';
  for (const auto& q : file.quantifiers) write_var_line(out, q.kind, q.vars);
  for (const auto& d : file.dependencies) {
    out << "d " << d.var;
    for (int u : d.deps) out << ' ' << u;
    out << " 0\n";
  }
  write_clauses(out, file.clauses);
  return out.str();
}

}  // namespace boundsyn::logic
