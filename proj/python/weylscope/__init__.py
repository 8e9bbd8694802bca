"""Weyl calculus, Bargmann transforms and rank-one decompositions on desk-scale grids."""

import json as _json

from ._weylscope import (
    InputError,
    apply_weyl,
    grid_nodes,
    mod_norm,
    order_names,
    phase_names,
    rank_one,
    run_criterion,
    stilde_norm,
    suite_names,
    weyl_kernel,
)
from ._weylscope import run_suite as _run_suite

__all__ = [
    "InputError",
    "apply_weyl",
    "grid_nodes",
    "mod_norm",
    "order_names",
    "phase_names",
    "rank_one",
    "run_criterion",
    "run_suite",
    "stilde_norm",
    "suite_names",
    "weyl_kernel",
]


def run_suite(suites, corpus="default"):
    """Runs the suites and returns the parsed report."""
    return _json.loads(_run_suite(list(suites), corpus))
