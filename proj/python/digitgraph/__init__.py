"""Exact evaluation and verification of a plane-filling digit graph.

Values cross the boundary as exact strings: points and rationals as "p/q",
dyadics as "m/2^k".  Families may be passed as JSON text or as a plain dict
of the same shape, e.g. ``{"functions": [{"coeffs": ["0", "1"]}]}``.
"""

import json as _json

from digitgraph._digitgraph import (
    bit,
    check_reading,
    classify,
    count_T,
    digit_window,
)
from digitgraph import _digitgraph as _core

__all__ = [
    "bit",
    "digit_window",
    "classify",
    "count_T",
    "y_digit",
    "eval_F",
    "F_minus_f",
    "check_reading",
    "check_injective",
    "box_count_exhaustive",
    "box_count_random",
    "occupy",
    "projection_check",
]


def _family_text(family):
    if isinstance(family, str):
        return family
    return _json.dumps(family)


def y_digit(n, x, family):
    """n-th binary digit of F(x)."""
    return _core.y_digit(n, x, _family_text(family))


def eval_F(x, bits, family):
    """F(x) truncated to the first `bits` digits, with exact tail bracket."""
    return _core.eval_F(x, bits, _family_text(family))


def F_minus_f(x, bits, i, family):
    """Exact bracket for F(x) - f_i(x) from the first `bits` digits of F."""
    return _core.F_minus_f(x, bits, i, _family_text(family))


def check_injective(trials, seed, family, bits=24):
    """Seeded campaign of pair-separation readings against the family."""
    return _core.check_injective(trials, seed, _family_text(family), bits)


def box_count_exhaustive(N, family):
    """Exact occupied-cell count at level N (all-constant families)."""
    return _core.box_count_exhaustive(N, _family_text(family))


def box_count_random(N, samples, seed, family):
    """Seeded sampled occupied-cell count at level N."""
    return _core.box_count_random(N, samples, seed, _family_text(family))


def occupy(x, N, family):
    """Grid cell of the graph point (x, F(x) mod 1) at level N."""
    return _core.occupy(x, N, _family_text(family))


def projection_check(N, col, row, samples, seed, family):
    """Column-measure test for one grid cell."""
    return _core.projection_check(N, col, row, samples, seed, _family_text(family))
