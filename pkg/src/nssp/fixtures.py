"""Bundled matrices, certificates, and expected classification data.

Exact fixtures are integers or rational strings; the one irrational witness
pair ships as decimal floats with ``exact=False`` and is verified against a
1e-9 residual tolerance instead of exactly.
"""
from __future__ import annotations

import math
from functools import cache
from typing import Dict, List, Tuple

from .digraph import Digraph, make_double_path
from .exact import RatMatrix
from .poly import MultiPoly
from .prover import CertStep, Certificate, REACHED
from .witnesses import AllowWitness, WitnessPair


def _pair(g: Digraph, a, x, source: str) -> WitnessPair:
    return WitnessPair(g, RatMatrix.from_rows(a), RatMatrix.from_rows(x),
                       exact=True, source=source)


# -- endpoint-looped 3-path: the smallest allows-but-not-requires pattern ----


@cache
def path3_endpoints_pair() -> WitnessPair:
    g = make_double_path(3, {1, 3})
    return _pair(
        g,
        [[1, 1, 0], [1, 0, 1], [0, 1, 1]],
        [[0, 0, 1], [0, 1, 0], [1, 0, 0]],
        source="fixture:path3-endpoints",
    )


# -- the 3x3 corner pattern (loops at 1,2 plus arcs (1,3),(3,1)) --------------

CORNER3 = Digraph(3, {(1, 1), (1, 3), (2, 2), (3, 1)})

CORNER3_VARS = ("a_1_1", "a_1_3", "a_2_2", "a_3_1")


def _cv(name: str, sign: int = 1) -> MultiPoly:
    return MultiPoly.var(CORNER3_VARS, name, sign)


def _cz() -> MultiPoly:
    return MultiPoly.zero(CORNER3_VARS)


@cache
def corner3_allow() -> AllowWitness:
    return AllowWitness(CORNER3, RatMatrix.from_rows(
        [[1, 0, 1], [0, 2, 0], [1, 0, 0]]), source="fixture:corner3")


@cache
def corner3_pair() -> WitnessPair:
    return _pair(
        CORNER3,
        [[1, 0, 2], [0, -1, 0], [1, 0, 0]],
        [[0, 0, 0], [1, 0, -1], [0, 0, 0]],
        source="fixture:corner3",
    )


@cache
def corner3_system() -> List[List[MultiPoly]]:
    """The symbolic 6x5 equation system in variable order
    (x12, x21, x23, x32, x33)."""
    a11, a13, a22, a31 = (_cv(v) for v in CORNER3_VARS)
    z = _cz()
    return [
        [-a13, z, z, a22, z],
        [z, a31, -a22, z, z],
        [z, a11 - a22, a13, z, z],
        [a22 - a11, z, z, -a31, z],
        [z, z, z, z, a13],
        [z, z, z, z, a31],
    ]


@cache
def corner3_det_target() -> MultiPoly:
    a11, a13, a22, a31 = (_cv(v) for v in CORNER3_VARS)
    inner = a13 * a31 + a22 * (a11 - a22)
    return a13 * inner * inner


# -- reducible 3-vertex pattern (double arc {1,2}, arc (2,3), loops vary) -----

REDUCIBLE3_LOOPED = Digraph(3, {(1, 1), (1, 2), (2, 1), (2, 3), (3, 3)})
REDUCIBLE3_BARE = Digraph(3, {(1, 1), (1, 2), (2, 1), (2, 3)})


@cache
def reducible3_allow() -> AllowWitness:
    return AllowWitness(REDUCIBLE3_LOOPED, RatMatrix.from_rows(
        [[-1, 1, 0], [1, 0, 1], [0, 0, 1]]), source="fixture:reducible3")


# -- 3-vertex certified pattern and its hand-encoded certificate --------------

TRIANGLE_CERTIFIED = Digraph(3, {(1, 3), (3, 1), (2, 1), (3, 2), (3, 3)})


@cache
def triangle_certificate() -> Certificate:
    steps = (
        CertStep(kind="R1", eq=(1, 3), var=(1, 1), coeff=(1, 3)),
        CertStep(kind="R1", eq=(2, 3), var=(1, 2), coeff=(1, 3)),
        CertStep(kind="R1", eq=(1, 2), var=(2, 3), coeff=(1, 3)),
        CertStep(kind="R1", eq=(3, 2), var=(2, 2), coeff=(3, 2)),
    )
    return Certificate(TRIANGLE_CERTIFIED, steps, REACHED)


# -- certified 5-path with loops {1,2,4}: the eight monomial-rule stages ------

PATH5_124_LOOPS = frozenset({1, 2, 4})

PATH5_124_TRIPLES: Tuple[Tuple[int, int, int], ...] = (
    (2, 1, 3),
    (3, 1, 4),
    (3, 5, 2),
    (1, 5, 1),
    (1, 4, 2),
    (2, 5, 3),
    (2, 3, 3),
    (4, 5, 5),
)


# -- interior-looped 7-path witness -------------------------------------------


@cache
def path7_interior_allow() -> AllowWitness:
    a = [
        [0, 1, 0, 0, 0, 0, 0],
        [1, 1, 1, 0, 0, 0, 0],
        [0, 1, 1, 1, 0, 0, 0],
        [0, 0, 2, 2, 2, 0, 0],
        [0, 0, 0, 1, 1, 1, 0],
        [0, 0, 0, 0, 1, 1, 1],
        [0, 0, 0, 0, 0, 2, 0],
    ]
    return AllowWitness(make_double_path(7, set(range(2, 7))),
                        RatMatrix.from_rows(a),
                        source="fixture:path7-interior")


# -- middle-looped 5-path: printed witness matrix and coefficient system ------


@cache
def path5_middle_allow() -> AllowWitness:
    a = [
        [0, 1, 0, 0, 0],
        [1, 0, -1, 0, 0],
        [0, 1, 1, 1, 0],
        [0, 0, 1, 0, -1],
        [0, 0, 0, 1, 0],
    ]
    return AllowWitness(make_double_path(5, {3}), RatMatrix.from_rows(a),
                        source="fixture:path5-middle")


# The 20 nonzero coefficient rows for the matrix above, in the published
# order, over variables (x11,x13,x14,x15,x22,x24,x25,x31,x35,x41,x42,x44,
# x51,x52,x53,x55).
PATH5_MIDDLE_ROWS: Tuple[Tuple[int, ...], ...] = (
    (0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (1, -1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 1, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, -1, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, -1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 1, 0, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0, 0),
    (-1, 0, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, -1, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 0, -1, 0, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, -1, 0, -1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 1, 0, 0, 1, 0, 0, -1, 0, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 1, 0, 0, -1, 0, 0, -1, 0, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, -1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, -1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 0, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0, 0, -1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, -1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 0),
    (0, 0, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0, 0, 0, -1),
    (0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, -1),
)


# -- published 5-path counterexample pairs ------------------------------------


@cache
def path5_pairs() -> Dict[Tuple[int, ...], WitnessPair]:
    """Exact (A, X) pairs for the ad hoc 5-path loop assignments."""
    out: Dict[Tuple[int, ...], WitnessPair] = {}
    out[(1, 4)] = _pair(
        make_double_path(5, {1, 4}),
        [[1, 2, 0, 0, 0],
         [1, 0, 2, 0, 0],
         [0, 4, 0, 2, 0],
         [0, 0, -1, -1, 2],
         [0, 0, 0, 1, 0]],
        [[0, 0, 2, 1, 1],
         [0, 4, 0, -2, 0],
         [2, 0, 2, 0, -1],
         [-2, 2, 0, 0, 0],
         [-4, 0, 4, 0, 2]],
        source="fixture:path5-14",
    )
    out[(2, 3)] = _pair(
        make_double_path(5, {2, 3}),
        [[0, 1, 0, 0, 0],
         [2, 1, 1, 0, 0],
         [0, 2, 2, 1, 0],
         [0, 0, 1, 0, 1],
         [0, 0, 0, 1, 0]],
        [[-2, 0, 4, -8, 4],
         [0, 0, 0, 4, -4],
         [1, 0, 0, 0, 2],
         [-2, 2, 0, -2, 0],
         [1, -2, 2, 0, -4]],
        source="fixture:path5-23",
    )
    out[(1, 2, 5)] = _pair(
        make_double_path(5, {1, 2, 5}),
        [[1, 1, 0, 0, 0],
         ["7/3", 2, 1, 0, 0],
         [0, 1, 0, 1, 0],
         [0, 0, 1, 0, 1],
         [0, 0, 0, 1, 3]],
        [[0, 0, 0, 0, 7],
         [0, 0, 0, 3, 6],
         [0, 0, 3, 0, 2],
         [0, 3, 0, 2, 0],
         [3, 6, 2, 0, 0]],
        source="fixture:path5-125",
    )
    out[(1, 3, 4)] = _pair(
        make_double_path(5, {1, 3, 4}),
        [[1, 1, 0, 0, 0],
         [10, 0, 1, 0, 0],
         [0, 2, "-9/35", 1, 0],
         [0, 0, "10296/1225", "46/35", 1],
         [0, 0, 0, 1, 0]],
        [[0, 0, 10296, "453024/35", "-41184/5"],
         [0, "5148/5", 0, "41184/5", "370656/175"],
         ["2574/5", 0, 0, 0, "41184/5"],
         [77, 490, 0, 0, 0],
         [-49, 126, 980, 0, "-41184/5"]],
        source="fixture:path5-134",
    )
    return out


@cache
def path5_135_pair_inexact() -> WitnessPair:
    """Witness pair with entries in the quadratic extension by sqrt(3),
    bundled as floats and verified to a 1e-9 residual."""
    s = math.sqrt(3.0)
    a = (
        (1.0, 1.0, 0.0, 0.0, 0.0),
        (0.75 * (2.0 + s), 0.0, 1.0, 0.0, 0.0),
        (0.0, 0.25 * (4.0 + s), 1.0, 1.0, 0.0),
        (0.0, 0.0, 2.0, 0.0, 1.0),
        (0.0, 0.0, 0.0, 3.0, 1.0),
    )
    x = (
        (0.0, 0.0, 0.75 * (2.0 + s), 0.0, -0.375 * (3.0 + s)),
        (0.0, 1.0, 0.0, 0.5 * (1.0 + s), 0.0),
        (-4.0 / 13.0 * (s - 4.0), 0.0, 0.0, 0.0, 1.5 * (1.0 + s)),
        (0.0, (1.0 + 3.0 * s) / 13.0, 0.0, 0.5 * (1.0 + s), 0.0),
        ((7.0 * s - 15.0) / 39.0, 0.0, 0.25 * (1.0 + s), 0.0, 0.0),
    )
    return WitnessPair(make_double_path(5, {1, 3, 5}), a, x, exact=False,
                       source="fixture:path5-135-inexact")


# -- derived pairs for the two classes with no published witness --------------


@cache
def derived_pairs() -> Dict[Tuple[int, Tuple[int, ...]], WitnessPair]:
    """Counterexample pairs completing the 4- and 5-path classifications.

    The violating matrices sit on a measure-zero variety, so seeded random
    search cannot find them; these were obtained by eliminating the linear
    system by hand and are re-verified from scratch in the test suite.
    """
    out: Dict[Tuple[int, Tuple[int, ...]], WitnessPair] = {}
    out[(4, (1, 3))] = _pair(
        make_double_path(4, {1, 3}),
        [[1, 1, 0, 0], [2, 0, 1, 0], [0, 1, 1, 1], [0, 0, 1, 0]],
        [[0, 0, 2, 0], [0, 1, 0, 1], [1, 0, 0, 0], [0, 1, 0, -1]],
        source="derived:path4-13",
    )
    out[(5, (1, 3))] = _pair(
        make_double_path(5, {1, 3}),
        [[2, 1, 0, 0, 0],
         [1, 0, 1, 0, 0],
         [0, 1, 1, 1, 0],
         [0, 0, 1, 0, 3],
         [0, 0, 0, 1, 0]],
        [[0, 0, 3, 3, 1],
         [0, 3, 0, 0, 1],
         [3, 0, 0, 0, -1],
         [3, 0, 0, -3, 0],
         [3, 3, -3, 0, -2]],
        source="derived:path5-13",
    )
    return out


@cache
def pair_catalog() -> Dict[Tuple[int, frozenset], WitnessPair]:
    """All bundled counterexample pairs for double paths, keyed by (n, loops)."""
    out: Dict[Tuple[int, frozenset], WitnessPair] = {}
    out[(3, frozenset({1, 3}))] = path3_endpoints_pair()
    for loops, pair in path5_pairs().items():
        out[(5, frozenset(loops))] = pair
    out[(5, frozenset({1, 3, 5}))] = path5_135_pair_inexact()
    for (n, loops), pair in derived_pairs().items():
        out[(n, frozenset(loops))] = pair
    return out


@cache
def allow_catalog() -> Tuple[AllowWitness, ...]:
    """Bundled matrices with verified full-rank verification matrices."""
    return (
        corner3_allow(),
        reducible3_allow(),
        path5_middle_allow(),
        path7_interior_allow(),
    )
