import json
import os

import pytest

import boundsyn

SPEC_DIR = os.environ.get(
    "BOUNDSYN_SPEC_DIR", os.path.join(os.path.dirname(__file__), "..", "specs")
)


def spec(name):
    return boundsyn.Specification.load(os.path.join(SPEC_DIR, name + ".json"))


def test_formula_round_trip():
    assert boundsyn.normalize(boundsyn.normalize("G (r -> X F g)")) == boundsyn.normalize("G (r -> X F g)")
    assert boundsyn.nnf("!(a && b)") == "(!a || !b)"
    assert boundsyn.nnf("!G a") == "(true U !a)"


def test_parse_error_is_raised():
    with pytest.raises(boundsyn.BoundsynError):
        boundsyn.normalize("a && ")


def test_arbiter_synthesis_alternates_grants():
    outcome, system = boundsyn.synthesize(os.path.join(SPEC_DIR, "arbiter_moore.json"))
    assert outcome == "REALIZABLE"
    assert system.size == 2
    grants = system.run([set(), {"r1"}, {"r1", "r2"}, {"r2"}, set()])
    assert all(g in ({"g1"}, {"g2"}) for g in grants)
    assert all(a != b for a, b in zip(grants, grants[1:]))
    assert boundsyn.model_check(system, spec("arbiter_moore"))
    assert system.to_aiger().startswith("aag ")


def test_semantics_separation():
    copy = boundsyn.Specification.from_json(
        json.dumps({"semantics": "moore", "inputs": ["r"], "outputs": ["g"], "guarantees": ["G (g <-> r)"]})
    )
    assert boundsyn.check(copy)["outcome"] == "UNREALIZABLE"
    result = boundsyn.check(copy, semantics="mealy")
    assert result["outcome"] == "REALIZABLE"
    assert result["bound"] == 1


def test_counter_strategy_swaps_roles():
    outcome, strategy = boundsyn.synthesize(spec("copy_moore"))
    assert outcome == "UNREALIZABLE"
    assert strategy.inputs == ["g"]
    assert strategy.outputs == ["r"]
    assert strategy.semantics == "mealy"


@pytest.mark.parametrize("encoding", ["basic", "input", "state", "full"])
def test_encodings_agree(encoding):
    assert boundsyn.check(spec("delayed_copy_moore"), encoding=encoding)["outcome"] == "REALIZABLE"


def test_emit_round_trip_and_solve():
    text = boundsyn.emit(spec("arbiter_moore"), encoding="basic", bound=2, format="dimacs")
    assert boundsyn.normalize_clause_file(text) == text
    model = boundsyn.solve_dimacs(text)
    assert isinstance(model, list) and model
    unsat = boundsyn.emit(spec("arbiter_moore"), encoding="basic", bound=1, format="dimacs")
    assert boundsyn.solve_dimacs(unsat) is False


def test_automaton_size():
    assert boundsyn.automaton_size(spec("trivial_true"))[1] == 0
    states, rejecting = boundsyn.automaton_size(spec("arbiter_moore"))
    assert 0 < rejecting < states
