"""Symbolic commutator equations for a pattern, their instantiation into the
verification matrix, and per-matrix / generic rank tests.

For a pattern G and A with support exactly arcs(G), the unknown X lives at
the complement positions; position (i,j) of the commutator condition gives
one homogeneous linear equation per matrix position.  A has the structural
property under test exactly when the stacked coefficient matrix (the
verification matrix) has full column rank.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Dict, Optional, Tuple

from .digraph import Arc, Digraph
from .exact import RatMatrix, commutator_check, nullspace, rank
from .poly import MultiPoly, symbolic_rank

SYMBOLIC_MAX_N = 4
SYMBOLIC_MAX_VARS = 9
SAMPLE_VALUES = tuple(v for v in range(-10, 11) if v != 0)


@dataclass(frozen=True)
class Term:
    """One summand of an equation: sign * A[a_pos] * X[x_pos]."""

    sign: int
    a_pos: Arc
    x_pos: Arc


@dataclass(frozen=True)
class PatternSystem:
    graph: Digraph
    variables: Tuple[Arc, ...]
    equations: Tuple[Tuple[Arc, Tuple[Term, ...]], ...]

    def var_index(self) -> Dict[Arc, int]:
        return {p: i for i, p in enumerate(self.variables)}

    def equation(self, i: int, j: int) -> Tuple[Term, ...]:
        return self.equations[(i - 1) * self.graph.n + (j - 1)][1]


@dataclass(frozen=True)
class VerificationMatrix:
    system: PatternSystem
    matrix: RatMatrix


def build_system(g: Digraph) -> PatternSystem:
    """Equations row-major over (i,j); variables row-major over complement."""
    arcs = g.arcs
    n = g.n
    variables = tuple(
        (p, q) for p in range(1, n + 1) for q in range(1, n + 1)
        if (p, q) not in arcs
    )
    out = {v: sorted(g.out_neighbors(v)) for v in g.vertices}
    inn = {v: sorted(g.in_neighbors(v)) for v in g.vertices}
    equations = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            terms = []
            for k in out[i]:
                if (j, k) not in arcs:
                    terms.append(Term(1, (i, k), (j, k)))
            for m in inn[j]:
                if (m, i) not in arcs:
                    terms.append(Term(-1, (m, j), (m, i)))
            equations.append(((i, j), tuple(terms)))
    return PatternSystem(g, variables, tuple(equations))


def check_pattern(g: Digraph, a: RatMatrix) -> None:
    """Reject A whose support differs from arcs(G)."""
    if not (a.is_square() and a.rows == g.n):
        raise ValueError(f"matrix is {a.rows}x{a.cols}, pattern has n={g.n}")
    support = a.support()
    missing = sorted(g.arcs - support)
    spurious = sorted(support - g.arcs)
    if missing or spurious:
        raise ValueError(
            "pattern mismatch: "
            f"zero at pattern positions {missing}, nonzero off pattern {spurious}"
        )


def verification_matrix(g: Digraph, a: RatMatrix) -> VerificationMatrix:
    check_pattern(g, a)
    system = build_system(g)
    idx = system.var_index()
    nvars = len(system.variables)
    rows = []
    for (_, terms) in system.equations:
        row = [Fraction(0)] * nvars
        for t in terms:
            row[idx[t.x_pos]] += t.sign * a.entry(*t.a_pos)
        rows.append(tuple(row))
    matrix = RatMatrix(g.n * g.n, nvars, tuple(rows))
    return VerificationMatrix(system, matrix)


def has_nssp(g: Digraph, a: RatMatrix) -> bool:
    vm = verification_matrix(g, a)
    return rank(vm.matrix) == len(vm.system.variables)


def find_violation(g: Digraph, a: RatMatrix) -> Optional[RatMatrix]:
    """A nonzero X with support in the complement witnessing failure, if any."""
    vm = verification_matrix(g, a)
    basis = nullspace(vm.matrix)
    if not basis:
        return None
    x = assemble_from_vector(g, vm.system.variables, basis[0])
    ok_had, ok_comm = commutator_check(a, x)
    if not (ok_had and ok_comm and not x.is_zero()):
        raise AssertionError("nullspace vector failed the commutator re-check")
    return x


def assemble_from_vector(g: Digraph, variables: Tuple[Arc, ...],
                         vec: Tuple[int, ...]) -> RatMatrix:
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for (p, q), val in zip(variables, vec):
        rows[p - 1][q - 1] = Fraction(val)
    return RatMatrix.from_rows(rows)


def adjacency_matrix(g: Digraph) -> RatMatrix:
    rows = [[Fraction(1 if (u, v) in g.arcs else 0) for v in g.vertices]
            for u in g.vertices]
    return RatMatrix.from_rows(rows)


def random_pattern_matrix(g: Digraph, rng: random.Random) -> RatMatrix:
    """Independent nonzero integer entries, uniform on [-10,10] \\ {0}."""
    rows = [[Fraction(0)] * g.n for _ in range(g.n)]
    for u in g.vertices:
        for v in g.vertices:
            if (u, v) in g.arcs:
                rows[u - 1][v - 1] = Fraction(rng.choice(SAMPLE_VALUES))
    return RatMatrix.from_rows(rows)


def generic_rank_sampled(g: Digraph, trials: int, seed: int
                         ) -> Tuple[int, Optional[RatMatrix]]:
    """Max verification-matrix rank over sampled A; witness if full rank.

    A full-rank hit is a proof that the pattern admits a matrix with the
    property; rank deficiency across all trials is evidence only.
    """
    if trials < 1:
        raise ValueError("trials must be >= 1")
    nvars = g.n * g.n - g.arc_count()
    rng = random.Random(seed)
    best = -1
    witness = None
    for _ in range(trials):
        a = random_pattern_matrix(g, rng)
        r = rank(verification_matrix(g, a).matrix)
        if r > best:
            best = r
        if r == nvars:
            witness = a
            break
    return best, witness


def pattern_variables(g: Digraph) -> Tuple[str, ...]:
    return tuple(f"a_{u}_{v}" for (u, v) in sorted(g.arcs))


def symbolic_system_matrix(g: Digraph) -> list[list[MultiPoly]]:
    """The equation system with pattern entries as indeterminates."""
    system = build_system(g)
    idx = system.var_index()
    vars = pattern_variables(g)
    zero = MultiPoly.zero(vars)
    rows = []
    for (_, terms) in system.equations:
        row = [zero] * len(system.variables)
        for t in terms:
            u, v = t.a_pos
            row[idx[t.x_pos]] = row[idx[t.x_pos]] + MultiPoly.var(
                vars, f"a_{u}_{v}", t.sign)
        rows.append(row)
    return rows


def generic_rank_symbolic(g: Digraph) -> int:
    """Exact rank over the function field of the pattern indeterminates.

    Equals the maximum verification-matrix rank over all matrices with the
    pattern's support: the rank-r minors are polynomials, and a nonzero
    polynomial is nonzero somewhere on the (Zariski-dense) set of points
    with all coordinates nonzero.
    """
    nvars = g.n * g.n - g.arc_count()
    if g.n > SYMBOLIC_MAX_N or nvars > SYMBOLIC_MAX_VARS:
        raise ValueError(
            f"symbolic rank limited to n <= {SYMBOLIC_MAX_N} and "
            f"<= {SYMBOLIC_MAX_VARS} variables (got n={g.n}, {nvars} variables)"
        )
    if nvars == 0:
        return 0
    return symbolic_rank(symbolic_system_matrix(g))
