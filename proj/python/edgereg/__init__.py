"""Betti numbers and regularity of edge ideals and their powers."""

import json as _json

from ._core import (
    CapExceeded,
    ParseError,
    betti_table,
    canonical_graph6,
    edges,
    from_edges,
    ideal_betti_table,
    induced_matching_number,
    projective_dimension,
    regularity,
    s_suspension,
)
from . import _core


def check_froberg(graph6, field="Q"):
    return _json.loads(_core.check_froberg(graph6, field))


def check_main2(graph6, s, k_max=3, field="Q"):
    return _json.loads(_core.check_main2(graph6, list(s), k_max, field))


def check_betti_splitting(i, j, k, variables):
    return _json.loads(_core.check_betti_splitting(i, j, k, variables))
