"""Explicit counterexample pairs (A, X) and property-witness matrices from
the classification constructions, plus seeded exact searches.

A WitnessPair proves the given matrix lacks the property (so the pattern
does not require it); an AllowWitness proves the pattern allows it.  Every
constructor output re-verifies from scratch via `verify_witness`.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple, Union

from .digraph import Arc, Digraph, complement, make_double_path
from .exact import RatMatrix, commutator_check, matmul, matsub
from .commutator import (
    adjacency_matrix,
    check_pattern,
    find_violation,
    has_nssp,
    random_pattern_matrix,
)

FLOAT_TOLERANCE = 1e-9

FloatMatrix = Tuple[Tuple[float, ...], ...]


@dataclass(frozen=True)
class WitnessPair:
    """A with the pattern's support and X != O certifying failure for A."""

    graph: Digraph
    a: Union[RatMatrix, FloatMatrix]
    x: Union[RatMatrix, FloatMatrix]
    exact: bool = True
    source: str = ""


@dataclass(frozen=True)
class AllowWitness:
    graph: Digraph
    a: RatMatrix
    source: str = ""


# -- constructors -------------------------------------------------------------


def w_no_double_arcs(g: Digraph) -> WitnessPair:
    """X = I - A^T for the adjacency matrix of a double-arc-free pattern."""
    if g.has_double_arc():
        raise ValueError("pattern has a double arc")
    a = adjacency_matrix(g)
    x = matsub(RatMatrix.identity(g.n), a.transpose())
    if x.is_zero():
        raise ValueError("degenerate: adjacency is the identity, X would be O")
    return _checked_pair(g, a, x, source="identity-shift")


def w_scalar_shift(g: Digraph, a: RatMatrix) -> WitnessPair:
    """X = a_vv I - A^T where v is the unique looped vertex; works for every
    A with the pattern's support, hence single-loop double-arc-free patterns
    rule the property out entirely."""
    if g.n < 2:
        raise ValueError("needs at least two vertices")
    if g.has_double_arc():
        raise ValueError("pattern has a double arc")
    loops = sorted(g.loops())
    if len(loops) != 1:
        raise ValueError(f"needs exactly one loop, found {loops}")
    check_pattern(g, a)
    v = loops[0]
    shift = a.entry(v, v)
    x = matsub(_scalar(g.n, shift), a.transpose())
    return _checked_pair(g, a, x, source="loop-scalar-shift")


def w_endpoint_loops_path(n: int, complemented: bool = False) -> WitnessPair:
    """Both-endpoint-looped double path: adjacency A with X = E - A; the
    complemented variant uses B = I - A on the loop-complement path."""
    if n < 3:
        raise ValueError("needs n >= 3")
    g = make_double_path(n, {1, n})
    a = adjacency_matrix(g)
    ones = RatMatrix.from_rows([[1] * n for _ in range(n)])
    x = matsub(ones, a)
    if not complemented:
        return _checked_pair(g, a, x, source="endpoint-loops")
    gc = make_double_path(n, set(range(2, n)))
    b = matsub(RatMatrix.identity(n), a)
    y = matsub(RatMatrix.identity(n), x)
    return _checked_pair(gc, b, y, source="endpoint-loops-complement")


def w_middle_loop_path(n: int) -> WitnessPair:
    """Odd path with only the middle vertex looped: block-antidiagonal X
    commuting with the adjacency matrix."""
    if n < 3 or n % 2 == 0:
        raise ValueError("needs odd n >= 3")
    g = make_double_path(n, {(n + 1) // 2})
    a = adjacency_matrix(g)
    k = (n - 1) // 2
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(1, k + 1):
        rows[i - 1][i - 1] = Fraction(-1)
        rows[n - i][n - i] = Fraction(-1)
        rows[i - 1][n - i] = Fraction(1)
        rows[n - i][i - 1] = Fraction(1)
    x = RatMatrix.from_rows(rows)
    return _checked_pair(g, a, x, source="middle-loop")


def w_even_loops_path(n: int, loops: Iterable[int], a: RatMatrix) -> WitnessPair:
    """Odd path with loops only at even vertices: recursive X whose
    even-indexed rows and columns are all zero; valid for the given A."""
    loop_set = frozenset(loops)
    if n < 3 or n % 2 == 0:
        raise ValueError("needs odd n >= 3")
    if any(v % 2 == 1 or not (1 <= v <= n) for v in loop_set):
        raise ValueError("loops must sit at even vertices within range")
    g = make_double_path(n, loop_set)
    check_pattern(g, a)
    x = RatMatrix.from_rows(_even_loops_x(n, a))
    pair = _checked_pair(g, a, x, source="even-loop-positions")
    for i in range(2, n + 1, 2):
        if any(x.entry(i, j) != 0 for j in range(1, n + 1)) or \
           any(x.entry(j, i) != 0 for j in range(1, n + 1)):
            raise AssertionError("even-indexed rows/columns of X must be zero")
    return pair


def _even_loops_x(n: int, a: RatMatrix) -> List[List[Fraction]]:
    if n == 3:
        return [
            [a.entry(2, 3) * a.entry(3, 2), Fraction(0), -a.entry(2, 1) * a.entry(3, 2)],
            [Fraction(0), Fraction(0), Fraction(0)],
            [-a.entry(1, 2) * a.entry(2, 3), Fraction(0), a.entry(1, 2) * a.entry(2, 1)],
        ]
    m = n - 2
    inner = _even_loops_x(m, a)
    alpha = a.entry(m, m + 1)
    beta = a.entry(m + 1, m)
    gamma = a.entry(m + 1, m + 2)
    delta = a.entry(m + 2, m + 1)
    rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(m):
        for j in range(m):
            rows[i][j] = inner[i][j]
    for i in range(1, m + 1, 2):
        rows[i - 1][n - 1] = -(beta / gamma) * inner[i - 1][m - 1]
        rows[n - 1][i - 1] = -(alpha / delta) * inner[m - 1][i - 1]
    rows[n - 1][n - 1] = (alpha * beta) / (gamma * delta) * inner[m - 1][m - 1]
    return rows


def w_bipartite_family(g: Digraph) -> WitnessPair:
    """Half-looped cycle family: vertices [2m], loops exactly [m], forced
    arcs (i+m, i) and the in-block successor arcs, optional cross arcs with
    no mutual pairs; the block matrix A = [[I, B], [I, O]] admits
    X = [[O, -Y], [-B^T Y, Y]] for any Y certifying failure for B."""
    m, b_graph = _check_half_looped_cycle(g)
    b = adjacency_matrix(b_graph)
    y = _inner_violation(b_graph, b)
    n = 2 * m
    rows = [[Fraction(0)] * n for _ in range(n)]
    bty = matmul(b.transpose(), y)
    for i in range(m):
        for j in range(m):
            rows[i][m + j] = -y.data[i][j]
            rows[m + i][j] = -bty.data[i][j]
            rows[m + i][m + j] = y.data[i][j]
    a_rows = [[Fraction(0)] * n for _ in range(n)]
    for i in range(m):
        a_rows[i][i] = Fraction(1)
        a_rows[m + i][i] = Fraction(1)
        for j in range(m):
            a_rows[i][m + j] = b.data[i][j]
    return _checked_pair(g, RatMatrix.from_rows(a_rows),
                         RatMatrix.from_rows(rows),
                         source="half-looped-cycle-family")


def _check_half_looped_cycle(g: Digraph) -> Tuple[int, Digraph]:
    if g.n % 2 != 0 or g.n < 4:
        raise ValueError("family needs an even vertex count 2m with m >= 2")
    m = g.n // 2
    if g.loops() != frozenset(range(1, m + 1)):
        raise ValueError(f"family needs loops exactly at 1..{m}")
    forced_back = {(i + m, i) for i in range(1, m + 1)}
    cycle = {(i, m + (i % m) + 1) for i in range(1, m + 1)}
    loops = {(i, i) for i in range(1, m + 1)}
    cross = {(u, v) for (u, v) in g.arcs if u <= m and v > m}
    rest = g.arcs - loops - forced_back - cross
    if rest:
        raise ValueError(f"arcs outside the family shape: {sorted(rest)}")
    if not forced_back <= g.arcs:
        raise ValueError("missing forced arcs from the upper block")
    if not cycle <= cross:
        raise ValueError("missing in-block successor arcs")
    optional = cross - cycle
    for (u, v) in optional:
        i, j = u, v - m
        if i != j and (j, i + m) in cross:
            raise ValueError(
                f"optional arc ({u},{v}) has the mutual arc ({j},{i + m}) present")
    b_arcs = frozenset((u, v - m) for (u, v) in cross)
    return m, Digraph(m, b_arcs)


def _inner_violation(h: Digraph, b: RatMatrix) -> RatMatrix:
    if not h.has_double_arc():
        y = matsub(RatMatrix.identity(h.n), b.transpose())
        if not y.is_zero():
            return y
    y = find_violation(h, b)
    if y is None:
        raise ValueError("inner block admits no violation; family member unsupported")
    return y


# -- seeded searches ----------------------------------------------------------


def random_violation_search(g: Digraph, trials: int, seed: int
                            ) -> Optional[WitnessPair]:
    """First sampled A admitting a nonzero X; absence is not a claim."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    for _ in range(trials):
        a = random_pattern_matrix(g, rng)
        x = find_violation(g, a)
        if x is not None:
            return _checked_pair(g, a, x, source="sampled")
    return None


def random_nssp_search(g: Digraph, trials: int, seed: int
                       ) -> Optional[AllowWitness]:
    """First sampled A with full-rank verification matrix (an exact proof)."""
    if trials < 1:
        raise ValueError("trials must be >= 1")
    rng = random.Random(seed)
    for _ in range(trials):
        a = random_pattern_matrix(g, rng)
        if has_nssp(g, a):
            return AllowWitness(g, a, source="sampled")
    return None


# -- verification --------------------------------------------------------------


def verify_witness(w: Union[WitnessPair, AllowWitness]) -> bool:
    ok, _ = verify_witness_detail(w)
    return ok


def verify_witness_detail(w: Union[WitnessPair, AllowWitness]
                          ) -> Tuple[bool, str]:
    """Re-check all invariants of the witness from scratch."""
    if isinstance(w, AllowWitness):
        try:
            check_pattern(w.graph, w.a)
        except ValueError as e:
            return False, str(e)
        if not has_nssp(w.graph, w.a):
            return False, "verification matrix is rank deficient"
        return True, "full column rank"
    if not w.exact:
        return _verify_float_pair(w)
    try:
        check_pattern(w.graph, w.a)
    except ValueError as e:
        return False, str(e)
    if w.x.is_zero():
        return False, "X is the zero matrix"
    comp = complement(w.graph).arcs
    bad = sorted(w.x.support() - comp)
    if bad:
        return False, f"X has support outside the complement: {bad}"
    ok_had, ok_comm = commutator_check(w.a, w.x)
    if not ok_had:
        return False, "Hadamard product A o X is not zero"
    if not ok_comm:
        return False, "A X^T != X^T A"
    return True, "valid pair"


def _verify_float_pair(w: WitnessPair) -> Tuple[bool, str]:
    n = w.graph.n
    a, x = w.a, w.x
    if len(a) != n or len(x) != n:
        return False, "shape mismatch"
    arcs = w.graph.arcs
    for i in range(n):
        for j in range(n):
            if (i + 1, j + 1) in arcs:
                if a[i][j] == 0.0:
                    return False, f"A zero at pattern position ({i+1},{j+1})"
                if x[i][j] != 0.0:
                    return False, f"X nonzero at pattern position ({i+1},{j+1})"
            elif a[i][j] != 0.0:
                return False, f"A nonzero off pattern at ({i+1},{j+1})"
    if all(v == 0.0 for row in x for v in row):
        return False, "X is the zero matrix"
    resid = 0.0
    for i in range(n):
        for j in range(n):
            axt = sum(a[i][k] * x[j][k] for k in range(n))
            xta = sum(x[k][i] * a[k][j] for k in range(n))
            resid = max(resid, abs(axt - xta))
    if resid > FLOAT_TOLERANCE:
        return False, f"commutator residual {resid:.3e} exceeds {FLOAT_TOLERANCE}"
    return True, f"residual {resid:.3e} within tolerance"


def _checked_pair(g: Digraph, a: RatMatrix, x: RatMatrix,
                  source: str) -> WitnessPair:
    pair = WitnessPair(g, a, x, exact=True, source=source)
    ok, reason = verify_witness_detail(pair)
    if not ok:
        raise AssertionError(f"constructed pair failed verification: {reason}")
    return pair


def _scalar(n: int, c: Fraction) -> RatMatrix:
    return RatMatrix.from_rows(
        [[c if i == j else Fraction(0) for j in range(n)] for i in range(n)]
    )
