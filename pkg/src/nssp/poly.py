"""Integer-coefficient multivariate polynomials with exact determinant and
fraction-free symbolic rank.

Exponent vectors are dense tuples over a fixed variable environment (at most
a couple dozen names at desk scale); the canonical term order is graded
lexicographic, highest first.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Mapping, Sequence, Tuple

Exponents = Tuple[int, ...]

POLY_DET_MAX_DIM = 6


@dataclass(frozen=True)
class MultiPoly:
    vars: Tuple[str, ...]
    terms: Mapping[Exponents, int] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {e: c for e, c in self.terms.items() if c != 0}
        for e in clean:
            if len(e) != len(self.vars):
                raise ValueError("exponent vector length does not match variables")
        object.__setattr__(self, "terms", clean)

    # -- constructors -------------------------------------------------------

    @classmethod
    def zero(cls, vars: Sequence[str]) -> "MultiPoly":
        return cls(tuple(vars), {})

    @classmethod
    def const(cls, vars: Sequence[str], c: int) -> "MultiPoly":
        vars = tuple(vars)
        return cls(vars, {(0,) * len(vars): c} if c else {})

    @classmethod
    def var(cls, vars: Sequence[str], name: str, coeff: int = 1) -> "MultiPoly":
        vars = tuple(vars)
        idx = vars.index(name)
        e = tuple(1 if i == idx else 0 for i in range(len(vars)))
        return cls(vars, {e: coeff})

    # -- ring operations ------------------------------------------------------

    def _compat(self, other: "MultiPoly") -> None:
        if self.vars != other.vars:
            raise ValueError("mixed variable environments")

    def __add__(self, other: "MultiPoly") -> "MultiPoly":
        self._compat(other)
        out: Dict[Exponents, int] = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return MultiPoly(self.vars, out)

    def __sub__(self, other: "MultiPoly") -> "MultiPoly":
        return self + (-other)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(self.vars, {e: -c for e, c in self.terms.items()})

    def __mul__(self, other: "MultiPoly") -> "MultiPoly":
        self._compat(other)
        out: Dict[Exponents, int] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                out[e] = out.get(e, 0) + c1 * c2
        return MultiPoly(self.vars, out)

    def scale(self, c: int) -> "MultiPoly":
        return MultiPoly(self.vars, {e: c * v for e, v in self.terms.items()})

    def is_zero(self) -> bool:
        return not self.terms

    def total_degree(self) -> int:
        return max((sum(e) for e in self.terms), default=0)

    # -- graded-lex order ------------------------------------------------------

    @staticmethod
    def _key(e: Exponents) -> Tuple[int, Exponents]:
        return (sum(e), e)

    def leading(self) -> Tuple[Exponents, int]:
        e = max(self.terms, key=self._key)
        return e, self.terms[e]

    def sorted_terms(self) -> list[Tuple[Exponents, int]]:
        return sorted(self.terms.items(), key=lambda t: self._key(t[0]), reverse=True)

    # -- exact division ---------------------------------------------------------

    def exact_div(self, d: "MultiPoly") -> "MultiPoly":
        """Quotient self / d, valid only when the division is exact."""
        self._compat(d)
        if d.is_zero():
            raise ZeroDivisionError("polynomial division by zero")
        rem = MultiPoly(self.vars, dict(self.terms))
        out: Dict[Exponents, int] = {}
        de, dc = d.leading()
        while not rem.is_zero():
            re, rc = rem.leading()
            qe = tuple(a - b for a, b in zip(re, de))
            if any(x < 0 for x in qe) or rc % dc != 0:
                raise ArithmeticError("inexact polynomial division")
            qc = rc // dc
            out[qe] = out.get(qe, 0) + qc
            rem = rem - d * MultiPoly(self.vars, {qe: qc})
        return MultiPoly(self.vars, out)

    # -- evaluation --------------------------------------------------------------

    def evaluate(self, assignment: Mapping[str, int]) -> Fraction:
        total = Fraction(0)
        vals = [Fraction(assignment[v]) for v in self.vars]
        for e, c in self.terms.items():
            prod = Fraction(c)
            for v, p in zip(vals, e):
                if p:
                    prod *= v ** p
            total += prod
        return total

    # -- canonical text ------------------------------------------------------------

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        parts = []
        for e, c in self.sorted_terms():
            mono = "*".join(
                v if p == 1 else f"{v}^{p}"
                for v, p in zip(self.vars, e) if p
            )
            mag = abs(c)
            if mono:
                body = mono if mag == 1 else f"{mag}*{mono}"
            else:
                body = str(mag)
            if not parts:
                parts.append(body if c > 0 else f"-{body}")
            else:
                parts.append(f"+ {body}" if c > 0 else f"- {body}")
        return " ".join(parts)


def poly_det(matrix: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Exact determinant by first-column expansion with minor memoization."""
    dim = len(matrix)
    if dim == 0 or any(len(row) != dim for row in matrix):
        raise ValueError("poly_det needs a nonempty square matrix")
    if dim > POLY_DET_MAX_DIM:
        raise ValueError(f"poly_det limited to dimension <= {POLY_DET_MAX_DIM}")
    vars = matrix[0][0].vars
    for row in matrix:
        for p in row:
            if p.vars != vars:
                raise ValueError("mixed variable environments in matrix")

    cache: Dict[Tuple[int, ...], MultiPoly] = {}

    def minor(cols: Tuple[int, ...]) -> MultiPoly:
        if not cols:
            return MultiPoly.const(vars, 1)
        if cols in cache:
            return cache[cols]
        row = dim - len(cols)
        acc = MultiPoly.zero(vars)
        for pos, c in enumerate(cols):
            entry = matrix[row][c]
            if entry.is_zero():
                continue
            sub = minor(cols[:pos] + cols[pos + 1:])
            term = entry * sub
            acc = acc + (term if pos % 2 == 0 else -term)
        cache[cols] = acc
        return acc

    return minor(tuple(range(dim)))


def symbolic_rank(matrix: Sequence[Sequence[MultiPoly]]) -> int:
    """Rank over the rational function field via fraction-free elimination.

    Pivot selection takes the lowest-total-degree nonzero entry to limit
    intermediate expression swell.
    """
    m = [list(row) for row in matrix]
    if not m:
        return 0
    rows, cols = len(m), len(m[0])
    vars = m[0][0].vars
    prev = MultiPoly.const(vars, 1)
    r = 0
    while r < rows and r < cols:
        best = None
        for i in range(r, rows):
            for j in range(r, cols):
                if not m[i][j].is_zero():
                    key = (m[i][j].total_degree(), i, j)
                    if best is None or key < best[0]:
                        best = (key, i, j)
        if best is None:
            break
        _, pi, pj = best
        if pi != r:
            m[r], m[pi] = m[pi], m[r]
        if pj != r:
            for row in m:
                row[r], row[pj] = row[pj], row[r]
        pivot = m[r][r]
        for i in range(r + 1, rows):
            head = m[i][r]
            for j in range(r + 1, cols):
                m[i][j] = (m[i][j] * pivot - head * m[r][j]).exact_div(prev)
            m[i][r] = MultiPoly.zero(vars)
        prev = pivot
        r += 1
    return r
