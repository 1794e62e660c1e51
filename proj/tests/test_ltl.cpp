#include <doctest.h>

#include <random>

#include "boundsyn/ltl.hpp"
#include "boundsyn/spec_file.hpp"
#include "oracles.hpp"

using namespace boundsyn;
using namespace boundsyn::ltl;

namespace {

const Formula a = Formula::atom("a");
const Formula b = Formula::atom("b");
const Formula c = Formula::atom("c");

bool is_nnf(const Formula& f) {
  switch (f.kind()) {
    case Kind::Implies:
    case Kind::Iff:
    case Kind::Finally:
    case Kind::Globally: return false;
    case Kind::Not: return f.child(0).kind() == Kind::Atom;
    default:
      for (const auto& ch : f.children()) {
        if (!is_nnf(ch)) return false;
      }
      return true;
  }
}

}  // namespace

TEST_CASE("parse: response property") {
  const Formula expected = globally(implies(Formula::atom("r1"), next(finally(Formula::atom("g1")))));
  CHECK(parse("G (r1 -> X F g1)") == expected);
}

TEST_CASE("parse: single atom") {
  const Formula f = parse("a");
  CHECK(f.kind() == Kind::Atom);
  CHECK(f.name() == "a");
}

TEST_CASE("parse: U is right associative") {
  CHECK(parse("a U b U c") == until(a, until(b, c)));
  CHECK(parse("a R b R c") == release(a, release(b, c)));
}

TEST_CASE("parse: precedence and spellings") {
  CHECK(parse("a -> b -> c") == implies(a, implies(b, c)));
  CHECK(parse("a <-> b -> c") == iff(a, implies(b, c)));
  CHECK(parse("a || b && c") == (a || (b && c)));
  CHECK(parse("a & b | c") == ((a && b) || c));
  CHECK(parse("a && b U c") == (a && until(b, c)));
  CHECK(parse("!a U X b") == until(!a, next(b)));
  CHECK(parse("  G\tF  a ") == globally(finally(a)));
  CHECK(parse("true && false") == (Formula::constant(true) && Formula::constant(false)));
  CHECK(parse("(a)") == a);
  CHECK(parse("Xa") == Formula::atom("Xa"));
  CHECK(parse("X(a)") == next(a));
}

TEST_CASE("parse: errors carry offsets") {
  try {
    parse("a && ");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 5);
    CHECK_FALSE(e.expected().empty());
  }
  try {
    parse("a $ b");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 2);
  }
  CHECK_THROWS_AS(parse("(a"), ParseError);
  CHECK_THROWS_AS(parse("a b"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
}

TEST_CASE("to_nnf examples") {
  CHECK(to_nnf(parse("!(a U b)")) == release(!a, !b));
  CHECK(to_nnf(parse("!G a")) == until(Formula::constant(true), !a));
  // !(a <-> b) against (a && !b) || (!a && b) on every 2-step trace.
  const Formula lhs = to_nnf(parse("!(a <-> b)"));
  const Formula rhs = parse("(a && !b) || (!a && b)");
  CHECK(is_nnf(lhs));
  for (Valuation x = 0; x < 4; ++x) {
    for (Valuation y = 0; y < 4; ++y) {
      CHECK(oracle::ltl_holds(lhs, {"a", "b"}, {x}, {y}) == oracle::ltl_holds(rhs, {"a", "b"}, {x}, {y}));
    }
  }
}

TEST_CASE("negate examples") {
  CHECK(negate(Formula::constant(true)) == Formula::constant(false));
  CHECK(negate(parse("G !(g1 && g2)")) ==
        until(Formula::constant(true), Formula::atom("g1") && Formula::atom("g2")));
  CHECK(negate(next(a)) == next(!a));
}

TEST_CASE("assemble_spec examples") {
  CHECK(assemble_spec({}, {globally(a)}) == globally(a));
  CHECK(assemble_spec({}, {}) == Formula::constant(true));
  CHECK(assemble_spec({parse("G r")}, {parse("G g")}) == implies(parse("G r"), parse("G g")));
  CHECK(assemble_spec({}, {a, b}) == (a && b));
}

TEST_CASE("property: parse is a left inverse of to_string") {
  std::mt19937 rng(7);
  for (int k = 0; k < 500; ++k) {
    const Formula f = oracle::random_formula(rng, {"a", "b", "c"}, static_cast<int>(rng() % 10));
    REQUIRE(parse(to_string(f)) == f);
  }
}

TEST_CASE("property: to_nnf is idempotent and in normal form") {
  std::mt19937 rng(11);
  for (int k = 0; k < 500; ++k) {
    const Formula f = oracle::random_formula(rng, {"a", "b", "c"}, static_cast<int>(rng() % 10));
    const Formula g = to_nnf(f);
    CHECK(is_nnf(g));
    CHECK(to_nnf(g) == g);
  }
}

TEST_CASE("property: to_nnf preserves the lasso semantics") {
  std::mt19937 rng(13);
  const std::vector<std::string> atoms{"a", "b", "c"};
  for (int k = 0; k < 200; ++k) {
    const Formula f = oracle::random_formula(rng, atoms, static_cast<int>(rng() % 8));
    const Formula g = to_nnf(f);
    for (int trial = 0; trial < 20; ++trial) {
      const int lu = static_cast<int>(rng() % 4);
      const int lv = 1 + static_cast<int>(rng() % (4 - lu));
      std::vector<Valuation> u(lu), v(lv);
      for (auto& x : u) x = rng() % 8;
      for (auto& x : v) x = rng() % 8;
      REQUIRE(oracle::ltl_holds(f, atoms, u, v) == oracle::ltl_holds(g, atoms, u, v));
    }
  }
}

TEST_CASE("oracle sanity: lasso evaluator on hand-checked words") {
  // a holds at positions 0 and 2 of (a, -) (a, -)...
  CHECK(oracle::ltl_holds(parse("G F a"), {"a"}, {}, {1, 0}));
  CHECK_FALSE(oracle::ltl_holds(parse("F G a"), {"a"}, {}, {1, 0}));
  CHECK(oracle::ltl_holds(parse("F G a"), {"a"}, {0, 0}, {1}));
  CHECK(oracle::ltl_holds(parse("a U b"), {"a", "b"}, {1, 1}, {2}));
  CHECK_FALSE(oracle::ltl_holds(parse("a U b"), {"a", "b"}, {}, {1}));
  CHECK(oracle::ltl_holds(parse("a R b"), {"a", "b"}, {}, {2}));
  CHECK(oracle::ltl_holds(parse("X X a"), {"a"}, {0, 0}, {1}));
}

TEST_CASE("specification files") {
  const Specification s = parse_specification(R"J({"semantics":"moore","inputs":["r"],"outputs":["g"],
      "assumptions":["G F r"],"guarantees":["G (r -> F g)"]})J");
  CHECK(s.semantics == Semantics::Moore);
  CHECK(s.inputs == std::vector<std::string>{"r"});
  CHECK(s.formula() == implies(parse("G F r"), parse("G (r -> F g)")));

  const Specification plain = parse_specification(R"J({"semantics":"mealy","inputs":[],"outputs":["g"],
      "guarantees":["G g"]})J");
  CHECK(plain.assumptions.empty());
  CHECK(plain.formula() == parse("G g"));

  CHECK_THROWS_AS(parse_specification("{"), SpecError);
  CHECK_THROWS_AS(parse_specification(R"J({"semantics":"both","inputs":[],"outputs":[],"guarantees":[]})J"),
                  SpecError);
  CHECK_THROWS_AS(parse_specification(R"J({"semantics":"mealy","inputs":["a"],"outputs":["a"],"guarantees":[]})J"),
                  SpecError);
  CHECK_THROWS_AS(parse_specification(R"J({"semantics":"mealy","inputs":["a"],"outputs":["b"],"guarantees":["c"]})J"),
                  SpecError);
  CHECK_THROWS_AS(parse_specification(R"J({"semantics":"mealy","inputs":["1a"],"outputs":[],"guarantees":[]})J"),
                  SpecError);
  CHECK_THROWS_AS(parse_specification(R"J({"semantics":"mealy","inputs":[],"outputs":["g"],"guarantees":["g &&"]})J"),
                  Error);
}

TEST_CASE("suite specification files load") {
  for (const char* name : {"arbiter_moore", "copy_mealy", "trivial_true", "assume_guarantee_mealy"}) {
    CHECK_NOTHROW(load_specification(std::string(BOUNDSYN_SPEC_DIR) + "/" + name + ".json"));
  }
  CHECK_THROWS_AS(load_specification("/nonexistent/spec.json"), Error);
}
