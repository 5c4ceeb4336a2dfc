"""Exact Coxeter diagram arithmetic, classification and searches."""

import json
from fractions import Fraction

from . import _core
from ._core import (
    D_func,
    Diagram,
    DomainError,
    Error,
    GuardError,
    ParseError,
    UnassignedVariableError,
    canonical_form,
    certify,
    d_func,
    det,
    det_cycles,
    expansion_search,
    fixture,
    fixture_names,
    is_lanner,
    lanner_pair_diagram,
    lanner_subdiagrams,
    neighbor_table,
)


def _exact(assignment):
    return {k: str(Fraction(v)) for k, v in (assignment or {}).items()}


def classify(diagram, assignment=None):
    return _core.classify(diagram, _exact(assignment))


def inertia(diagram, assignment=None):
    return _core.inertia(diagram, _exact(assignment))


def polytope_admissible(diagram, assignment=None):
    return _core.polytope_admissible(diagram, _exact(assignment))


def three_free_contradiction(d):
    return json.loads(_core.three_free_contradiction(d))


def catalog(max_n=10, max_label=10):
    return json.loads(_core.catalog_json(max_n, max_label))


__all__ = [
    "D_func", "Diagram", "DomainError", "Error", "GuardError", "ParseError",
    "UnassignedVariableError", "canonical_form", "catalog", "certify", "classify",
    "d_func", "det", "det_cycles", "expansion_search", "fixture", "fixture_names",
    "inertia", "is_lanner", "lanner_pair_diagram", "lanner_subdiagrams",
    "neighbor_table", "polytope_admissible", "three_free_contradiction",
]
