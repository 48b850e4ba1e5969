"""Z2-graded spaces and homogeneous linear maps with exact entries."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from . import linalg
from .linalg import Matrix, Vector


class StructuralError(ValueError):
    """Shapes or spaces do not line up."""


class NotBijective(ValueError):
    def __init__(self, name: str = "map"):
        super().__init__(f"{name} is not bijective")
        self.name = name


@dataclass(frozen=True)
class GradedSpace:
    parities: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "parities", tuple(int(p) for p in self.parities))
        if any(p not in (0, 1) for p in self.parities):
            raise StructuralError(f"parities must be 0 or 1, got {self.parities}")

    @property
    def dim(self) -> int:
        return len(self.parities)

    def parity(self, i: int) -> int:
        return self.parities[i]

    def block(self, parity: int) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parities) if p == parity)

    def vector_parity(self, v: Sequence[Fraction]) -> int | None:
        """Parity of a homogeneous vector, ``None`` for zero or mixed vectors."""
        ps = {self.parities[i] for i, x in enumerate(v) if x != 0}
        return ps.pop() if len(ps) == 1 else None


@dataclass(frozen=True, eq=False)
class HomogeneousMap:
    """A linear map of a given parity degree; column ``j`` is the image of ``e_j``."""

    space: GradedSpace
    entries: Matrix
    degree: int = 0

    def __post_init__(self):
        entries = linalg.matrix(self.entries)
        n = self.space.dim
        if len(entries) != n or any(len(r) != n for r in entries):
            raise StructuralError(f"expected a {n}x{n} table")
        object.__setattr__(self, "entries", entries)
        object.__setattr__(self, "degree", int(self.degree) % 2)
        bad = parity_violations(entries, self.space, self.degree)
        if bad:
            i, j = bad[0]
            raise StructuralError(
                f"entry ({i},{j}) is nonzero but breaks degree {self.degree}"
            )

    def __eq__(self, other):
        if not isinstance(other, HomogeneousMap):
            return NotImplemented
        return (self.space, self.degree, self.entries) == (other.space, other.degree, other.entries)

    def __hash__(self):
        return hash((self.space, self.degree, self.entries))

    @property
    def dim(self) -> int:
        return self.space.dim

    def __call__(self, v: Sequence[Fraction]) -> Vector:
        return linalg.mat_vec(self.entries, v)

    def column(self, j: int) -> Vector:
        return tuple(row[j] for row in self.entries)

    def flat(self) -> Vector:
        return tuple(x for row in self.entries for x in row)

    def is_zero(self) -> bool:
        return all(x == 0 for row in self.entries for x in row)

    def __add__(self, other: HomogeneousMap) -> HomogeneousMap:
        _same_space(self, other)
        if self.degree != other.degree and not (self.is_zero() or other.is_zero()):
            raise StructuralError("sum of maps with different degrees is not homogeneous")
        deg = other.degree if self.is_zero() else self.degree
        return _make(self.space, linalg.mat_add(self.entries, other.entries), deg)

    def __sub__(self, other: HomogeneousMap) -> HomogeneousMap:
        return self + other.scaled(Fraction(-1))

    def scaled(self, c) -> HomogeneousMap:
        return _make(self.space, linalg.mat_scale(linalg.as_fraction(c), self.entries), self.degree)


class EvenMap(HomogeneousMap):
    """Parity-preserving map; houses structure maps."""

    def __init__(self, space: GradedSpace, entries: Matrix, degree: int = 0):
        if int(degree) % 2:
            raise StructuralError("an even map has degree 0")
        super().__init__(space, entries, 0)


def _make(space: GradedSpace, entries: Matrix, degree: int) -> HomogeneousMap:
    return EvenMap(space, entries) if degree == 0 else HomogeneousMap(space, entries, degree)


def _same_space(f: HomogeneousMap, g: HomogeneousMap) -> None:
    if f.space != g.space:
        raise StructuralError(f"maps live on different spaces ({f.dim} vs {g.dim})")


def parity_violations(table: Matrix, space: GradedSpace, degree: int = 0) -> list[tuple[int, int]]:
    p = space.parities
    return [
        (i, j)
        for i, row in enumerate(table)
        for j, x in enumerate(row)
        if x != 0 and p[i] != (p[j] + degree) % 2
    ]


def identity(space: GradedSpace) -> EvenMap:
    return EvenMap(space, linalg.identity_matrix(space.dim))


def zero_map(space: GradedSpace, degree: int = 0) -> HomogeneousMap:
    return _make(space, linalg.zero_matrix(space.dim), degree % 2)


def diagonal(space: GradedSpace, values: Iterable) -> EvenMap:
    vals = linalg.vector(values)
    n = space.dim
    return EvenMap(space, tuple(tuple(vals[i] if i == j else linalg.ZERO for j in range(n)) for i in range(n)))


def compose_maps(f: HomogeneousMap, g: HomogeneousMap) -> HomogeneousMap:
    """``f`` after ``g``."""
    _same_space(f, g)
    return _make(f.space, linalg.mat_mul(f.entries, g.entries), (f.degree + g.degree) % 2)


def power(f: HomogeneousMap, k: int) -> HomogeneousMap:
    if k < 0:
        raise ValueError("negative powers: use invert_map")
    out: HomogeneousMap = identity(f.space)
    for _ in range(k):
        out = compose_maps(f, out)
    return out


def invert_map(f: EvenMap, name: str = "map") -> EvenMap:
    try:
        inv = linalg.inverse(f.entries)
    except linalg.SingularMatrixError:
        raise NotBijective(name) from None
    return EvenMap(f.space, inv)


def is_bijective(f: HomogeneousMap) -> bool:
    return linalg.rank(f.entries, f.dim) == f.dim


def check_even(table: Matrix, space: GradedSpace) -> bool:
    return not parity_violations(linalg.matrix(table), space, 0)


def commute(f: HomogeneousMap, g: HomogeneousMap) -> bool:
    _same_space(f, g)
    return linalg.mat_mul(f.entries, g.entries) == linalg.mat_mul(g.entries, f.entries)
