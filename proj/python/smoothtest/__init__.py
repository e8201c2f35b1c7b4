"""Smoothness test for affine and projective varieties."""

import json

from . import _core
from ._core import (
    Ideal,
    ParseError,
    cyclic_polytope,
    parse_ideal,
    rational_normal_curve,
    read_ideal,
    suite,
    suite_names,
    veronese_ci,
    coordinate_change,
)

__all__ = [
    "Ideal",
    "ParseError",
    "check",
    "is_smooth",
    "coordinate_change",
    "cyclic_polytope",
    "parse_ideal",
    "rational_normal_curve",
    "read_ideal",
    "suite",
    "suite_names",
    "veronese_ci",
]


def check(ideal, **options):
    """Runs the test and returns the report as a dict.

    `ideal` is an Ideal or ideal text. Keyword options: projective, mode,
    descents, to_codim, jobs, seed, time_limit, strict_cover, combinations,
    timings.
    """
    if isinstance(ideal, str):
        ideal = parse_ideal(ideal)
    return json.loads(_core.check(ideal, **options))


def is_smooth(ideal, **options):
    """True, False, or None when the run gave up."""
    verdict = check(ideal, **options)["verdict"]
    return {"smooth": True, "singular": False}.get(verdict)
