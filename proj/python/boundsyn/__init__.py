"""Bounded synthesis of Mealy and Moore machines from LTL specifications."""

from ._boundsyn import (
    BoundsynError,
    Specification,
    TransitionSystem,
    automaton_size,
    check,
    emit,
    model_check,
    nnf,
    normalize,
    normalize_clause_file,
    solve_dimacs,
)


def synthesize(spec, **options):
    """Search for a machine; returns (outcome, system) where system realizes
    the specification or, when unrealizable, is the environment's
    counter-strategy."""
    if isinstance(spec, str):
        spec = Specification.load(spec)
    result = check(spec, synthesize=True, **options)
    return result["outcome"], result["system"]


__all__ = [
    "BoundsynError",
    "Specification",
    "TransitionSystem",
    "automaton_size",
    "check",
    "emit",
    "model_check",
    "nnf",
    "normalize",
    "normalize_clause_file",
    "solve_dimacs",
    "synthesize",
]
