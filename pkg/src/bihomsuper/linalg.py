"""Exact dense linear algebra over the rationals.

Matrices are tuples of row tuples of :class:`fractions.Fraction`. Everything
here is exact; pivots are chosen as the first nonzero entry, never by size.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

Vector = tuple[Fraction, ...]
Matrix = tuple[Vector, ...]

ZERO = Fraction(0)
ONE = Fraction(1)


class SingularMatrixError(ValueError):
    pass


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        raise TypeError(f"refusing float {x!r}; use an exact rational")
    return Fraction(x)


def vector(values: Iterable) -> Vector:
    return tuple(as_fraction(v) for v in values)


def matrix(rows: Iterable[Iterable]) -> Matrix:
    return tuple(vector(r) for r in rows)


def zero_vector(n: int) -> Vector:
    return (ZERO,) * n


def unit_vector(n: int, i: int) -> Vector:
    return tuple(ONE if k == i else ZERO for k in range(n))


def zero_matrix(n: int, m: int | None = None) -> Matrix:
    return tuple(zero_vector(n if m is None else m) for _ in range(n))


def identity_matrix(n: int) -> Matrix:
    return tuple(unit_vector(n, i) for i in range(n))


def add(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a + b for a, b in zip(u, v))


def sub(u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    return tuple(a - b for a, b in zip(u, v))


def scale(c: Fraction, u: Sequence[Fraction]) -> Vector:
    return tuple(c * a for a in u)


def is_zero(u: Sequence[Fraction]) -> bool:
    return all(a == 0 for a in u)


def mat_vec(a: Matrix, u: Sequence[Fraction]) -> Vector:
    return tuple(sum((x * y for x, y in zip(row, u) if x and y), ZERO) for row in a)


def mat_mul(a: Matrix, b: Matrix) -> Matrix:
    cols = list(zip(*b)) if b else []
    return tuple(
        tuple(sum((x * y for x, y in zip(row, col) if x and y), ZERO) for col in cols)
        for row in a
    )


def mat_add(a: Matrix, b: Matrix) -> Matrix:
    return tuple(add(r, s) for r, s in zip(a, b))


def mat_sub(a: Matrix, b: Matrix) -> Matrix:
    return tuple(sub(r, s) for r, s in zip(a, b))


def mat_scale(c: Fraction, a: Matrix) -> Matrix:
    return tuple(scale(c, r) for r in a)


def transpose(a: Matrix) -> Matrix:
    return tuple(zip(*a)) if a else ()


def rref(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> tuple[Matrix, tuple[int, ...]]:
    """Reduced row echelon form and the pivot columns.

    Zero rows are dropped from the result, so the returned matrix has exactly
    ``rank`` rows.
    """
    work = [list(r) for r in rows]
    if ncols is None:
        ncols = len(work[0]) if work else 0
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, len(work)) if work[i][c] != 0), None)
        if pivot is None:
            continue
        work[r], work[pivot] = work[pivot], work[r]
        inv = ONE / work[r][c]
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c] != 0:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return tuple(tuple(row) for row in work[:r]), tuple(pivots)


def rank(rows: Sequence[Sequence[Fraction]], ncols: int | None = None) -> int:
    return len(rref(rows, ncols)[1])


def nullspace(rows: Sequence[Sequence[Fraction]], ncols: int) -> Matrix:
    """Basis of ``{v : A v = 0}`` returned in reduced echelon form.

    The raw kernel vectors (one per free column) are row reduced again so the
    basis is canonical for the column ordering.
    """
    reduced, pivots = rref(rows, ncols)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for f in free:
        v = [ZERO] * ncols
        v[f] = ONE
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(v)
    if not basis:
        return ()
    return rref(basis, ncols)[0]


def inverse(a: Matrix) -> Matrix:
    """Exact Gauss-Jordan inverse; raises SingularMatrixError."""
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("inverse needs a square matrix")
    aug = [list(row) + list(e) for row, e in zip(a, identity_matrix(n))]
    reduced, pivots = rref(aug, 2 * n)
    if pivots[:n] != tuple(range(n)) or len(reduced) < n:
        raise SingularMatrixError("matrix is singular")
    return tuple(tuple(row[n:]) for row in reduced)


def in_span(basis: Sequence[Sequence[Fraction]], v: Sequence[Fraction]) -> bool:
    if is_zero(v):
        return True
    n = len(v)
    return rank(list(basis) + [list(v)], n) == rank(basis, n) if basis else False


def same_row_space(a: Sequence[Sequence[Fraction]], b: Sequence[Sequence[Fraction]], ncols: int) -> bool:
    return rref(a, ncols)[0] == rref(b, ncols)[0]
