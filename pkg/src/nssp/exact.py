"""Exact rational matrices with fraction-free rank and integer nullspaces.

Entries are `fractions.Fraction`; elimination clears denominators row by row
and runs Bareiss over the integers, so no floating point is involved anywhere.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence, Tuple, Union

Rat = Fraction
Entry = Union[int, str, Fraction]


def to_rat(x: Entry) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot build an exact rational from {x!r}")


@dataclass(frozen=True)
class RatMatrix:
    rows: int
    cols: int
    data: Tuple[Tuple[Fraction, ...], ...]

    def __post_init__(self) -> None:
        if len(self.data) != self.rows or any(len(r) != self.cols for r in self.data):
            raise ValueError("matrix data does not match declared shape")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Entry]]) -> "RatMatrix":
        data = tuple(tuple(to_rat(x) for x in row) for row in rows)
        if not data:
            raise ValueError("matrix needs at least one row")
        return cls(len(data), len(data[0]), data)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "RatMatrix":
        return cls(rows, cols, tuple((Fraction(0),) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, n: int) -> "RatMatrix":
        return cls(n, n, tuple(
            tuple(Fraction(1 if i == j else 0) for j in range(n)) for i in range(n)
        ))

    def __getitem__(self, pos: Tuple[int, int]) -> Fraction:
        i, j = pos
        return self.data[i][j]

    def entry(self, u: int, v: int) -> Fraction:
        """1-indexed access matching the vertex convention."""
        return self.data[u - 1][v - 1]

    def transpose(self) -> "RatMatrix":
        return RatMatrix(self.cols, self.rows,
                         tuple(zip(*self.data)) if self.data else ())

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.data for x in row)

    def is_square(self) -> bool:
        return self.rows == self.cols

    def support(self) -> frozenset[Tuple[int, int]]:
        """1-indexed nonzero positions."""
        return frozenset(
            (i + 1, j + 1)
            for i in range(self.rows) for j in range(self.cols)
            if self.data[i][j] != 0
        )


def matmul(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if a.cols != b.rows:
        raise ValueError(f"shape mismatch: {a.rows}x{a.cols} @ {b.rows}x{b.cols}")
    bt = b.transpose().data
    data = tuple(
        tuple(sum(x * y for x, y in zip(row, col)) for col in bt)
        for row in a.data
    )
    return RatMatrix(a.rows, b.cols, data)


def matsub(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch in subtraction")
    return RatMatrix(a.rows, a.cols, tuple(
        tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a.data, b.data)
    ))


def hadamard(a: RatMatrix, b: RatMatrix) -> RatMatrix:
    if (a.rows, a.cols) != (b.rows, b.cols):
        raise ValueError("shape mismatch in Hadamard product")
    return RatMatrix(a.rows, a.cols, tuple(
        tuple(x * y for x, y in zip(ra, rb)) for ra, rb in zip(a.data, b.data)
    ))


def commutator_check(a: RatMatrix, x: RatMatrix) -> Tuple[bool, bool]:
    """(A o X == O, A X^T == X^T A)."""
    if not (a.is_square() and x.is_square() and a.rows == x.rows):
        raise ValueError("commutator_check needs square matrices of equal size")
    xt = x.transpose()
    return hadamard(a, x).is_zero(), matsub(matmul(a, xt), matmul(xt, a)).is_zero()


# -- fraction-free elimination ------------------------------------------------


def _integer_rows(m: RatMatrix) -> list[list[int]]:
    """Scale each row by the lcm of its denominators (rank-preserving)."""
    out = []
    for row in m.data:
        mult = lcm(*(x.denominator for x in row)) if row else 1
        out.append([int(x * mult) for x in row])
    return out


def rank(m: RatMatrix) -> int:
    """Exact rank over the rationals via Bareiss elimination."""
    a = _integer_rows(m)
    rows, cols = m.rows, m.cols
    r = 0
    prev = 1
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        pivot = a[r][c]
        for i in range(r + 1, rows):
            aic = a[i][c]
            ai = a[i]
            ar = a[r]
            for j in range(c + 1, cols):
                ai[j] = (ai[j] * pivot - aic * ar[j]) // prev
            ai[c] = 0
        prev = pivot
        r += 1
        if r == rows:
            break
    return r


def nullspace(m: RatMatrix) -> list[Tuple[int, ...]]:
    """Basis of the right kernel as primitive integer vectors.

    Each vector has gcd 1 and positive first nonzero entry; one vector per
    free column, ordered by free-column index.
    """
    rows, cols = m.rows, m.cols
    a = [list(row) for row in m.data]
    pivots: list[Tuple[int, int]] = []
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        if piv != r:
            a[r], a[piv] = a[piv], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(rows):
            if i != r and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append((r, c))
        r += 1
        if r == rows:
            break

    pivot_cols = {c for (_, c) in pivots}
    basis = []
    for free in range(cols):
        if free in pivot_cols:
            continue
        vec = [Fraction(0)] * cols
        vec[free] = Fraction(1)
        for (pr, pc) in pivots:
            vec[pc] = -a[pr][free]
        basis.append(_primitive(vec))
    return basis


def _primitive(vec: Sequence[Fraction]) -> Tuple[int, ...]:
    mult = lcm(*(x.denominator for x in vec))
    ints = [int(x * mult) for x in vec]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    if g > 1:
        ints = [x // g for x in ints]
    lead = next((x for x in ints if x != 0), 0)
    if lead < 0:
        ints = [-x for x in ints]
    return tuple(ints)
