"""Structure-constant products and the BiHom identity verifiers.

A product is stored as ``c[i][j][k]`` with ``e_i * e_j = sum_k c[i][j][k] e_k``.
Every verifier loops over homogeneous basis tuples in lexicographic order;
by multilinearity that decides the identity on the whole space.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from functools import cached_property
from typing import Callable, Iterable, Sequence

from . import linalg
from .graded_core import (
    EvenMap,
    GradedSpace,
    HomogeneousMap,
    StructuralError,
    commute,
    compose_maps,
    identity,
    invert_map,
    is_bijective,
)
from .linalg import Vector

Table = tuple[tuple[Vector, ...], ...]


def sign(exponent: int) -> int:
    return -1 if exponent % 2 else 1


@dataclass(frozen=True)
class BilinearMap:
    space: GradedSpace
    c: Table

    def __post_init__(self):
        n = self.space.dim
        c = tuple(tuple(linalg.vector(cell) for cell in row) for row in self.c)
        if len(c) != n or any(len(row) != n or any(len(cell) != n for cell in row) for row in c):
            raise StructuralError(f"structure constants must be {n}x{n}x{n}")
        object.__setattr__(self, "c", c)
        bad = self.parity_violations()
        if bad:
            i, j, k = bad[0]
            raise StructuralError(f"c[{i}][{j}][{k}] is nonzero but breaks evenness")

    @classmethod
    def zero(cls, space: GradedSpace) -> BilinearMap:
        n = space.dim
        return cls(space, tuple(tuple(linalg.zero_vector(n) for _ in range(n)) for _ in range(n)))

    @classmethod
    def from_entries(cls, space: GradedSpace, entries: Iterable[tuple[int, int, int, object]]) -> BilinearMap:
        n = space.dim
        c = [[[linalg.ZERO] * n for _ in range(n)] for _ in range(n)]
        for i, j, k, v in entries:
            c[i][j][k] += linalg.as_fraction(v)
        return cls(space, tuple(tuple(tuple(cell) for cell in row) for row in c))

    @classmethod
    def from_function(cls, space: GradedSpace, f: Callable[[int, int], Sequence[Fraction]]) -> BilinearMap:
        """Materialize the table of ``(i, j) -> f(i, j)`` on basis pairs."""
        n = space.dim
        return cls(space, tuple(tuple(tuple(f(i, j)) for j in range(n)) for i in range(n)))

    def parity_violations(self) -> list[tuple[int, int, int]]:
        p = self.space.parities
        return [
            (i, j, k)
            for i, row in enumerate(self.c)
            for j, cell in enumerate(row)
            for k, x in enumerate(cell)
            if x != 0 and p[k] != (p[i] + p[j]) % 2
        ]

    def entries(self) -> list[tuple[int, int, int, Fraction]]:
        """Nonzero constants as sorted ``(i, j, k, value)``."""
        return [
            (i, j, k, x)
            for i, row in enumerate(self.c)
            for j, cell in enumerate(row)
            for k, x in enumerate(cell)
            if x != 0
        ]

    def is_zero(self) -> bool:
        return not self.entries()

    def __call__(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        return eval_product(self, u, v)

    def basis(self, i: int, j: int) -> Vector:
        return self.c[i][j]

    def __add__(self, other: BilinearMap) -> BilinearMap:
        return BilinearMap.from_function(self.space, lambda i, j: linalg.add(self.c[i][j], other.c[i][j]))

    def scaled(self, s) -> BilinearMap:
        s = linalg.as_fraction(s)
        return BilinearMap.from_function(self.space, lambda i, j: linalg.scale(s, self.c[i][j]))


def eval_product(m: BilinearMap, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
    n = m.space.dim
    if len(u) != n or len(v) != n:
        raise StructuralError(f"vectors must have length {n}")
    out = [linalg.ZERO] * n
    for i, ui in enumerate(u):
        if not ui:
            continue
        row = m.c[i]
        for j, vj in enumerate(v):
            if not vj:
                continue
            w = ui * vj
            for k, x in enumerate(row[j]):
                if x:
                    out[k] += w * x
    return tuple(out)


class Kind(str, Enum):
    ASSOCIATIVE = "associative-candidate"
    LIE = "lie-candidate"
    UNCLASSIFIED = "unclassified"


@dataclass(frozen=True)
class BiHomSuperalgebra:
    """The bundle (space, product, alpha, beta).

    Commutation and multiplicativity of the structure maps are not enforced on
    construction: the verifiers report them, so failing inputs stay inspectable.
    """

    product: BilinearMap
    alpha: EvenMap
    beta: EvenMap
    kind: Kind = Kind.UNCLASSIFIED
    name: str = ""

    def __post_init__(self):
        sp = self.product.space
        if self.alpha.space != sp or self.beta.space != sp:
            raise StructuralError("product, alpha and beta must share a space")
        if self.alpha.degree or self.beta.degree:
            raise StructuralError("structure maps must be even")
        object.__setattr__(self, "kind", Kind(self.kind))

    @property
    def space(self) -> GradedSpace:
        return self.product.space

    @property
    def dim(self) -> int:
        return self.space.dim

    @property
    def parities(self) -> tuple[int, ...]:
        return self.space.parities

    @cached_property
    def alpha_bijective(self) -> bool:
        return is_bijective(self.alpha)

    @cached_property
    def beta_bijective(self) -> bool:
        return is_bijective(self.beta)

    @cached_property
    def alpha_inv(self) -> EvenMap:
        return invert_map(self.alpha, "alpha")

    @cached_property
    def beta_inv(self) -> EvenMap:
        return invert_map(self.beta, "beta")

    @cached_property
    def beta_sq(self) -> HomogeneousMap:
        return compose_maps(self.beta, self.beta)

    def mul(self, u: Sequence[Fraction], v: Sequence[Fraction]) -> Vector:
        return eval_product(self.product, u, v)

    def e(self, i: int) -> Vector:
        return linalg.unit_vector(self.dim, i)

    def with_product(self, product: BilinearMap, kind: Kind = Kind.UNCLASSIFIED, name: str | None = None) -> BiHomSuperalgebra:
        return BiHomSuperalgebra(product, self.alpha, self.beta, kind, self.name if name is None else name)

    def with_maps(self, alpha: EvenMap, beta: EvenMap) -> BiHomSuperalgebra:
        return BiHomSuperalgebra(self.product, alpha, beta, self.kind, self.name)


@dataclass(frozen=True)
class Witness:
    indices: tuple[int, ...]
    residual: Vector
    label: str = ""


@dataclass(frozen=True)
class IdentityReport:
    identity: str
    witnesses: tuple[Witness, ...] = field(default=())

    @property
    def holds(self) -> bool:
        return not self.witnesses

    def __bool__(self) -> bool:
        return self.holds


def _collect(tuples: Iterable[tuple[int, ...]], residual: Callable[..., Vector], label: str = "") -> list[Witness]:
    out = []
    for idx in tuples:
        r = residual(*idx)
        if not linalg.is_zero(r):
            out.append(Witness(tuple(idx), r, label))
    return out


def check_commute(A: BiHomSuperalgebra) -> IdentityReport:
    if commute(A.alpha, A.beta):
        return IdentityReport("commute")
    ab = compose_maps(A.alpha, A.beta)
    ba = compose_maps(A.beta, A.alpha)
    ws = [
        Witness((j,), linalg.sub(ab.column(j), ba.column(j)))
        for j in range(A.dim)
        if ab.column(j) != ba.column(j)
    ]
    return IdentityReport("commute", tuple(ws))


def _multiplicative_witnesses(A: BiHomSuperalgebra, f: HomogeneousMap, label: str) -> list[Witness]:
    n = A.dim
    images = [f.column(i) for i in range(n)]
    return _collect(itertools.product(range(n), repeat=2),
        lambda i, j: linalg.sub(f(A.product.basis(i, j)), A.mul(images[i], images[j])),
        label,
    )


def check_multiplicative(A: BiHomSuperalgebra) -> IdentityReport:
    ws = _multiplicative_witnesses(A, A.alpha, "alpha") + _multiplicative_witnesses(A, A.beta, "beta")
    return IdentityReport("multiplicative", tuple(ws))


def associator_residual(A: BiHomSuperalgebra, x: Vector, y: Vector, z: Vector) -> Vector:
    """``alpha(x)(yz) - (xy)beta(z)`` on arbitrary vectors."""
    return linalg.sub(A.mul(A.alpha(x), A.mul(y, z)), A.mul(A.mul(x, y), A.beta(z)))


def check_bihom_associative(A: BiHomSuperalgebra) -> IdentityReport:
    n = A.dim
    return IdentityReport(
        "bihom-associative",
        tuple(_collect(itertools.product(range(n), repeat=3),
            lambda i, j, k: associator_residual(A, A.e(i), A.e(j), A.e(k)),
        )),
    )


def skew_residual(A: BiHomSuperalgebra, i: int, j: int) -> Vector:
    p = A.parities
    b, a = A.beta, A.alpha
    left = A.mul(b.column(i), a.column(j))
    right = A.mul(b.column(j), a.column(i))
    return linalg.add(left, linalg.scale(Fraction(sign(p[i] * p[j])), right))


def check_skew_supersymmetry(A: BiHomSuperalgebra) -> IdentityReport:
    n = A.dim
    return IdentityReport(
        "skew-supersymmetry",
        tuple(_collect(itertools.product(range(n), repeat=2), lambda i, j: skew_residual(A, i, j))),
    )


def jacobi_terms(A: BiHomSuperalgebra, i: int, j: int, k: int) -> tuple[Vector, Vector, Vector]:
    """The three signed cyclic terms of the BiHom super-Jacobi sum at ``(e_i, e_j, e_k)``."""
    p = A.parities
    b, a, b2 = A.beta, A.alpha, A.beta_sq
    mul = A.mul

    def term(x: int, y: int, z: int) -> Vector:
        inner = mul(b.column(y), a.column(z))
        return linalg.scale(Fraction(sign(p[x] * p[z])), mul(b2.column(x), inner))

    return term(i, j, k), term(j, k, i), term(k, i, j)


def jacobi_residual(A: BiHomSuperalgebra, i: int, j: int, k: int) -> Vector:
    t1, t2, t3 = jacobi_terms(A, i, j, k)
    return linalg.add(linalg.add(t1, t2), t3)


def check_bihom_jacobi(A: BiHomSuperalgebra) -> IdentityReport:
    n = A.dim
    return IdentityReport(
        "bihom-super-jacobi",
        tuple(_collect(itertools.product(range(n), repeat=3), lambda i, j, k: jacobi_residual(A, i, j, k))),
    )


def lie_reports(A: BiHomSuperalgebra) -> list[IdentityReport]:
    return [check_commute(A), check_multiplicative(A), check_skew_supersymmetry(A), check_bihom_jacobi(A)]


def is_bihom_lie(A: BiHomSuperalgebra) -> bool:
    return all(r.holds for r in lie_reports(A))


def is_bihom_associative(A: BiHomSuperalgebra) -> bool:
    return all(r.holds for r in (check_commute(A), check_multiplicative(A), check_bihom_associative(A)))


BIHOM_ASSOCIATIVE = "BiHom-associative superalgebra"
BIHOM_LIE = "BiHom-Lie superalgebra"


@dataclass(frozen=True)
class StructureReport:
    reports: tuple[IdentityReport, ...]

    def report(self, identity: str) -> IdentityReport:
        return next(r for r in self.reports if r.identity == identity)

    @property
    def structures(self) -> tuple[str, ...]:
        ok = {r.identity: r.holds for r in self.reports}
        base = ok["commute"] and ok["multiplicative"]
        out = []
        if base and ok["bihom-associative"]:
            out.append(BIHOM_ASSOCIATIVE)
        if base and ok["skew-supersymmetry"] and ok["bihom-super-jacobi"]:
            out.append(BIHOM_LIE)
        return tuple(out)

    @property
    def is_associative(self) -> bool:
        return BIHOM_ASSOCIATIVE in self.structures

    @property
    def is_lie(self) -> bool:
        return BIHOM_LIE in self.structures


def classify_structure(A: BiHomSuperalgebra) -> StructureReport:
    return StructureReport((
        check_commute(A),
        check_multiplicative(A),
        check_bihom_associative(A),
        check_skew_supersymmetry(A),
        check_bihom_jacobi(A),
    ))


def hom_special_case(A: BiHomSuperalgebra) -> BiHomSuperalgebra:
    """The same product with ``beta`` replaced by ``alpha``."""
    return A.with_maps(A.alpha, A.alpha)


def untwisted(A: BiHomSuperalgebra) -> BiHomSuperalgebra:
    sp = A.space
    return A.with_maps(identity(sp), identity(sp))
