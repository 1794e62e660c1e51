#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "boundsyn/automaton.hpp"
#include "boundsyn/encode.hpp"
#include "boundsyn/logic.hpp"
#include "oracles.hpp"

using namespace boundsyn;
using namespace boundsyn::logic;

namespace {

struct Fixture {
  std::shared_ptr<FormulaStore> store = std::make_shared<FormulaStore>();
  std::vector<Var> vars;
  explicit Fixture(int n) {
    for (int k = 0; k < n; ++k) vars.push_back(store->new_var(VarRole::Aux, "x" + std::to_string(k)));
  }
};

Formula random_prop(std::mt19937& rng, FormulaStore& s, const std::vector<Var>& vars, int size) {
  if (size <= 0) {
    if (rng() % 12 == 0) return s.constant(rng() % 2 == 0);
    return s.var(vars[rng() % vars.size()]);
  }
  switch (rng() % 6) {
    case 0: return s.lnot(random_prop(rng, s, vars, size - 1));
    case 1: {
      const int l = static_cast<int>(rng() % size);
      return s.land(random_prop(rng, s, vars, l), random_prop(rng, s, vars, size - 1 - l));
    }
    case 2: {
      const int l = static_cast<int>(rng() % size);
      return s.lor(random_prop(rng, s, vars, l), random_prop(rng, s, vars, size - 1 - l));
    }
    case 3: {
      const int l = static_cast<int>(rng() % size);
      return s.lxor(random_prop(rng, s, vars, l), random_prop(rng, s, vars, size - 1 - l));
    }
    case 4: {
      const int l = static_cast<int>(rng() % size);
      return s.iff(random_prop(rng, s, vars, l), random_prop(rng, s, vars, size - 1 - l));
    }
    default: {
      const int a = static_cast<int>(rng() % size);
      const int b = static_cast<int>(rng() % (size - a));
      return s.ite(random_prop(rng, s, vars, a), random_prop(rng, s, vars, b),
                   random_prop(rng, s, vars, size - 1 - a - b));
    }
  }
}

bool truth_table_sat(const FormulaStore& s, Formula f, int nvars) {
  for (std::uint64_t a = 0; a < (std::uint64_t{1} << nvars); ++a) {
    if (s.evaluate(f, [&](Var v) { return ((a >> (v - 1)) & 1u) != 0; })) return true;
  }
  return false;
}

/// Extends an assignment of the original variables with the definition values.
std::vector<char> witness(const FormulaStore& s, const TseitinResult& t, std::uint64_t a, int nvars) {
  std::vector<char> value(t.cnf.num_vars + 1, 0);
  for (int v = 1; v <= nvars; ++v) value[v] = (a >> (v - 1)) & 1u;
  for (const auto& [dv, node] : t.definitions) {
    value[dv] = s.evaluate(node, [&](Var v) { return value.at(v) != 0; });
  }
  return value;
}

bool satisfies(const Cnf& cnf, const std::vector<char>& value) {
  for (const auto& clause : cnf.clauses) {
    if (std::none_of(clause.begin(), clause.end(), [&](int lit) { return (value[std::abs(lit)] != 0) == (lit > 0); }))
      return false;
  }
  return true;
}

std::set<std::vector<int>> clause_set(const std::vector<Clause>& clauses) {
  std::set<std::vector<int>> out;
  for (auto c : clauses) {
    std::sort(c.begin(), c.end());
    out.insert(c);
  }
  return out;
}

}  // namespace

TEST_CASE("hash consing shares equal constructions") {
  Fixture f(3);
  auto& s = *f.store;
  const Formula a = s.var(f.vars[0]), b = s.var(f.vars[1]);
  const Formula x = s.land(a, s.lor(b, s.lnot(a)));
  const std::size_t nodes = s.num_nodes();
  const Formula y = s.land(a, s.lor(b, s.lnot(a)));
  CHECK(x == y);
  CHECK(s.num_nodes() == nodes);
  CHECK(s.lnot(s.lnot(a)) == a);
  CHECK(s.land(a, s.constant(true)) == a);
  CHECK(s.land(a, s.constant(false)) == s.constant(false));
  CHECK(s.lor(std::vector<Formula>{}) == s.constant(false));
  CHECK(s.dag_size(x) <= 5);
  CHECK(s.support(x) == std::vector<Var>{f.vars[0], f.vars[1]});
}

TEST_CASE("bv_greater examples") {
  Fixture f(0);
  auto& s = *f.store;
  const BitVec one = constant_bitvec(s, 1, 2), zero = constant_bitvec(s, 0, 2);
  CHECK(s.is_const(bv_greater(s, one, zero, true), true));
  CHECK(s.is_const(bv_greater(s, one, one, true), false));
  CHECK(s.is_const(bv_greater(s, one, one, false), true));
  CHECK_THROWS_AS(bv_greater(s, one, constant_bitvec(s, 0, 3), true), Error);
}

TEST_CASE("property: comparators match integer arithmetic for widths up to 3") {
  for (int b = 1; b <= 3; ++b) {
    Fixture f(0);
    auto& s = *f.store;
    const BitVec x = fresh_bitvec(s, b, VarRole::Rank, "x");
    const BitVec y = fresh_bitvec(s, b, VarRole::Rank, "y");
    const Formula gt = bv_greater(s, x, y, true), ge = bv_greater(s, x, y, false), eq = bv_equal(s, x, y);
    for (std::uint64_t xv = 0; xv < (1u << b); ++xv) {
      for (std::uint64_t yv = 0; yv < (1u << b); ++yv) {
        // Symbolic operands: x is vars 1..b, y is vars b+1..2b.
        auto value = [&](Var v) {
          return v <= static_cast<Var>(b) ? ((xv >> (v - 1)) & 1u) != 0 : ((yv >> (v - 1 - b)) & 1u) != 0;
        };
        CHECK(s.evaluate(gt, value) == (xv > yv));
        CHECK(s.evaluate(ge, value) == (xv >= yv));
        CHECK(s.evaluate(eq, value) == (xv == yv));
        // Constant operands fold completely.
        const BitVec cx = constant_bitvec(s, xv, b), cy = constant_bitvec(s, yv, b);
        CHECK(s.is_const(bv_greater(s, cx, cy, true), xv > yv));
        CHECK(s.is_const(bv_greater(s, cx, cy, false), xv >= yv));
      }
      for (std::uint64_t bound = 0; bound <= (1u << b); ++bound) {
        const Formula lt = bv_less_than_const(s, x, bound);
        CHECK(s.evaluate(lt, [&](Var v) { return v <= static_cast<Var>(b) && ((xv >> (v - 1)) & 1u); }) ==
              (xv < bound));
      }
      const Formula is = bv_equals_const(s, x, xv);
      for (std::uint64_t other = 0; other < (1u << b); ++other) {
        CHECK(s.evaluate(is, [&](Var v) { return v <= static_cast<Var>(b) && ((other >> (v - 1)) & 1u); }) ==
              (other == xv));
      }
    }
  }
}

TEST_CASE("tseitin examples") {
  Fixture f(2);
  auto& s = *f.store;
  const TseitinResult unit = tseitin(s, s.var(f.vars[0]));
  CHECK(unit.cnf.clauses == std::vector<Clause>{{1}});
  CHECK(unit.definitions.empty());

  const TseitinResult conj = tseitin(s, s.land(s.var(f.vars[0]), s.var(f.vars[1])));
  REQUIRE(conj.definitions.size() == 1);
  const int t = static_cast<int>(conj.definitions.begin()->first);
  CHECK(t == 3);
  CHECK(clause_set(conj.cnf.clauses) == clause_set({{-t, 1}, {-t, 2}, {t, -1, -2}, {t}}));
}

TEST_CASE("property: tseitin and clausify are equisatisfiable and witness-faithful") {
  std::mt19937 rng(31);
  for (int k = 0; k < 400; ++k) {
    const int nvars = 1 + static_cast<int>(rng() % 6);
    Fixture f(nvars);
    auto& s = *f.store;
    const Formula root = random_prop(rng, s, f.vars, static_cast<int>(rng() % 10));
    const bool sat = truth_table_sat(s, root, nvars);
    for (const auto& t : {tseitin(s, root), clausify(s, root)}) {
      CHECK(t.cnf.num_vars >= static_cast<std::uint32_t>(nvars));
      if (t.cnf.num_vars <= 20) CHECK(oracle::cnf_satisfiable(t.cnf) == sat);
      for (std::uint64_t a = 0; a < (std::uint64_t{1} << nvars); ++a) {
        const bool value = s.evaluate(root, [&](Var v) { return ((a >> (v - 1)) & 1u) != 0; });
        CHECK(satisfies(t.cnf, witness(s, t, a, nvars)) == value);
      }
    }
  }
}

TEST_CASE("emitters: small examples") {
  auto s = std::make_shared<FormulaStore>();
  const Var x = s->new_var(VarRole::Aux, "x");
  const QuantifiedProblem sat{s, s->var(x), {{Quantifier::Exists, {x}}}, std::nullopt};
  CHECK(emit_dimacs(sat) == "p cnf 1 1\n1 0\n");
  CHECK(sat.fragment() == Fragment::Sat);

  auto q = std::make_shared<FormulaStore>();
  const Var u = q->new_var(VarRole::Input, "u");
  const Var e = q->new_var(VarRole::Aux, "e");
  const QuantifiedProblem qbf{q, q->iff(q->var(e), q->var(u)),
                              {{Quantifier::Forall, {u}}, {Quantifier::Exists, {e}}}, std::nullopt};
  const std::string text = emit_qdimacs(qbf);
  CHECK(text.rfind("p cnf 2 2\na 1 0\ne 2 0\n", 0) == 0);
  const ClauseFile parsed = read_clause_file(text);
  CHECK(clause_set(parsed.clauses) == clause_set({{-1, 2}, {1, -2}}));
  CHECK(emit_matching(qbf) == text);
  CHECK_THROWS_AS(emit_dimacs(qbf), FormatError);
  CHECK_THROWS_AS(emit_dqdimacs(qbf), FormatError);
  // A purely existential problem is a one-block QBF.
  CHECK(emit_qdimacs(sat) == "p cnf 1 1\ne 1 0\n1 0\n");
}

TEST_CASE("emitters: DQDIMACS definition dependencies are cone unions") {
  auto s = std::make_shared<FormulaStore>();
  const Var u1 = s->new_var(VarRole::Input, "u1"), u2 = s->new_var(VarRole::Input, "u2");
  const Var e1 = s->new_var(VarRole::Aux, "e1"), e2 = s->new_var(VarRole::Aux, "e2");
  const Formula left = s->land(s->var(e1), s->var(e2));
  const Formula right = s->land(s->lnot(s->var(e1)), s->var(u1));
  const QuantifiedProblem p{s, s->lor(left, right),
                            {{Quantifier::Forall, {u1, u2}}, {Quantifier::Exists, {e1, e2}}},
                            std::map<Var, std::vector<Var>>{{e1, {u1}}, {e2, {u2}}}};
  CHECK(p.fragment() == Fragment::Dqbf);
  const ClauseFile file = read_clause_file(emit_dqdimacs(p));
  REQUIRE(file.quantifiers.size() == 1);
  CHECK(file.quantifiers[0].kind == 'a');
  std::map<int, std::vector<int>> deps;
  for (const auto& d : file.dependencies) deps[d.var] = d.deps;
  CHECK(deps.at(3) == std::vector<int>{1});
  CHECK(deps.at(4) == std::vector<int>{2});
  // Definitions: e1 && e2 depends on {u1, u2}; !e1 && u1 on {u1}.
  std::set<std::vector<int>> def_deps;
  for (const auto& [v, d] : deps) {
    if (v > 4) def_deps.insert(d);
  }
  CHECK(def_deps == std::set<std::vector<int>>{{1}, {1, 2}});
}

TEST_CASE("problem validation") {
  auto s = std::make_shared<FormulaStore>();
  const Var u = s->new_var(VarRole::Input, "u"), e = s->new_var(VarRole::Aux, "e");
  const Formula m = s->lxor(s->var(u), s->var(e));
  QuantifiedProblem twice{s, m, {{Quantifier::Exists, {e}}, {Quantifier::Forall, {u, e}}}, std::nullopt};
  CHECK_THROWS_AS(twice.validate(), Error);
  QuantifiedProblem free_var{s, m, {{Quantifier::Exists, {e}}}, std::nullopt};
  CHECK_THROWS_AS(free_var.validate(), Error);
  QuantifiedProblem bad_dep{s, m, {{Quantifier::Forall, {u}}, {Quantifier::Exists, {e}}},
                            std::map<Var, std::vector<Var>>{{e, {e}}}};
  CHECK_THROWS_AS(bad_dep.validate(), Error);
  QuantifiedProblem ok{s, m, {{Quantifier::Forall, {u}}, {Quantifier::Exists, {e}}},
                       std::map<Var, std::vector<Var>>{{e, {u}}}};
  CHECK_NOTHROW(ok.validate());
  const CountProfile c = count_profile(ok);
  CHECK(c.existentials == 1);
  CHECK(c.universals == 1);
  CHECK(c.matrix_nodes == s->dag_size(m));
}

TEST_CASE("clause file reader rejects malformed input") {
  CHECK_THROWS_AS(read_clause_file("1 2 0\n"), FormatError);
  CHECK_THROWS_AS(read_clause_file("p cnf 2 1\n1 3 0\n"), FormatError);
  CHECK_THROWS_AS(read_clause_file("p cnf 2 2\n1 0\n"), FormatError);
  CHECK_THROWS_AS(read_clause_file("p cnf 2 1\n1 x 0\n"), FormatError);
  const ClauseFile f = read_clause_file("c hello\np cnf 2 1\n1 -2 0\n");
  CHECK(f.comments.size() == 1);
  CHECK(write_clause_file(f) == "c hello\np cnf 2 1\n1 -2 0\n");
}

TEST_CASE("property: emitted encodings round-trip byte-identically and deterministically") {
  const Ucw arb = ltl_to_ucw(oracle::arbiter_formula(), {"r1", "r2"}, {"g1", "g2"});
  for (EncodingKind kind :
       {EncodingKind::Basic, EncodingKind::InputSymbolic, EncodingKind::StateSymbolic, EncodingKind::FullySymbolic}) {
    for (Semantics sem : {Semantics::Moore, Semantics::Mealy}) {
      const Encoding enc = encode(kind, arb, 2, sem);
      const std::string text = emit_matching(enc.problem);
      CHECK(write_clause_file(read_clause_file(text)) == text);
      CHECK(emit_matching(encode(kind, arb, 2, sem).problem) == text);
    }
  }
}
