"""Associators, graded S3 sums and the subgroup classification of admissibility.

The dressed associator ``F(x, y, z) = as(a^-1 b^2 x, b y, a z)`` (a = alpha,
b = beta) is the building block. A permutation acts on a triple by
rearranging positions, ``sigma(x1, x2, x3) = (x_s(1), x_s(2), x_s(3))``, and
its graded parity is the Koszul sign of that rearrangement.

Two placements of the permutation are supported. With ``action="elements"``
(the default) the basis elements are permuted and then dressed, so the dressing
maps keep their slots; this is the form in which the S3 sum reproduces the
super-Jacobi sum of the admissible bracket. With ``action="dressed"`` the
already dressed triple is permuted.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Literal

from . import linalg
from .algebra import BiHomSuperalgebra, IdentityReport, Witness, associator_residual, jacobi_residual, sign
from .constructions import admissible_bracket
from .graded_core import compose_maps
from .linalg import Vector

Action = Literal["elements", "dressed"]


class InternalInconsistency(AssertionError):
    """Two independent evaluation routes disagree; indicates a bug, not bad data."""


@dataclass(frozen=True)
class Permutation3:
    images: tuple[int, int, int]
    name: str = ""

    def __post_init__(self):
        if sorted(self.images) != [1, 2, 3]:
            raise ValueError(f"{self.images} is not a permutation of (1,2,3)")

    @property
    def signature(self) -> int:
        inv = sum(1 for a, b in itertools.combinations(self.images, 2) if a > b)
        return sign(inv)

    def apply(self, triple):
        return tuple(triple[i - 1] for i in self.images)

    def then(self, other: Permutation3) -> Permutation3:
        """The product ``self other``: act with ``other`` first, then ``self``."""
        return Permutation3(self.apply(other.images))

    def __mul__(self, other: Permutation3) -> Permutation3:
        return self.then(other)

    def __eq__(self, other):
        return isinstance(other, Permutation3) and self.images == other.images

    def __hash__(self):
        return hash(self.images)


ID = Permutation3((1, 2, 3), "id")
S12 = Permutation3((2, 1, 3), "(12)")
S23 = Permutation3((1, 3, 2), "(23)")
# products follow the positional action: (S12 * S23)(x) = S12(S23(x))
C312 = Permutation3((3, 1, 2), "s1s2")
C231 = Permutation3((2, 3, 1), "s2s1")
S13 = Permutation3((3, 2, 1), "(13)")
S3 = (ID, S12, S23, C312, C231, S13)


def perm_parity(sigma: Permutation3, p1: int, p2: int, p3: int) -> int:
    """Koszul parity of rearranging ``(x1, x2, x3)`` into ``sigma(x1, x2, x3)``.

    Sum of ``|x_a||x_b|`` over the pairs whose order is reversed.
    """
    p = (p1, p2, p3)
    im = sigma.images
    return sum(
        p[im[s] - 1] * p[im[t] - 1] for s, t in itertools.combinations(range(3), 2) if im[s] > im[t]
    ) % 2


class SubgroupId(str, Enum):
    G1 = "G1"
    G2 = "G2"
    G3 = "G3"
    G4 = "G4"
    G5 = "G5"
    G6 = "G6"

    @property
    def elements(self) -> tuple[Permutation3, ...]:
        return _ELEMENTS[self]


_ELEMENTS = {
    SubgroupId.G1: (ID,),
    SubgroupId.G2: (ID, S12),
    SubgroupId.G3: (ID, S23),
    SubgroupId.G4: (ID, S13),
    SubgroupId.G5: (ID, C312, C231),
    SubgroupId.G6: S3,
}


def associator(A: BiHomSuperalgebra, i: int, j: int, k: int) -> Vector:
    return associator_residual(A, A.e(i), A.e(j), A.e(k))


class _Dressing:
    """Cached columns of ``a^-1 b^2``, ``b`` and ``a`` for one algebra."""

    def __init__(self, A: BiHomSuperalgebra):
        self.A = A
        d1 = compose_maps(A.alpha_inv, A.beta_sq)
        n = A.dim
        self.maps = (
            [d1.column(i) for i in range(n)],
            [A.beta.column(i) for i in range(n)],
            [A.alpha.column(i) for i in range(n)],
        )

    def dressed(self, x: int, y: int, z: int) -> tuple[Vector, Vector, Vector]:
        return self.maps[0][x], self.maps[1][y], self.maps[2][z]

    def F(self, x: int, y: int, z: int) -> Vector:
        return associator_residual(self.A, *self.dressed(x, y, z))

    def sigma_term(self, sigma: Permutation3, triple: tuple[int, int, int], action: Action) -> Vector:
        if action == "elements":
            return self.F(*sigma.apply(triple))
        if action == "dressed":
            return associator_residual(self.A, *sigma.apply(self.dressed(*triple)))
        raise ValueError(f"unknown action {action!r}")


def _combine(terms) -> Vector:
    out = None
    for c, v in terms:
        w = linalg.scale(Fraction(c), v)
        out = w if out is None else linalg.add(out, w)
    return out


def s_cyclic(A: BiHomSuperalgebra, i: int, j: int, k: int, _d: _Dressing | None = None) -> Vector:
    """Cyclic signed sum ``S(x,y,z)`` of dressed associators."""
    d = _d or _Dressing(A)
    p = A.parities
    return _combine((
        (sign(p[i] * p[k]), d.F(i, j, k)),
        (sign(p[j] * p[i]), d.F(j, k, i)),
        (sign(p[k] * p[j]), d.F(k, i, j)),
    ))


def six_term_combination(A: BiHomSuperalgebra, i: int, j: int, k: int, _d: _Dressing | None = None) -> Vector:
    """Six-term signed combination of dressed associators equal to the admissible Jacobi sum."""
    d = _d or _Dressing(A)
    p = A.parities
    x, y, z = p[i], p[j], p[k]
    return _combine((
        (sign(x * z), d.F(i, j, k)),
        (sign(x * y), d.F(j, k, i)),
        (sign(z * y), d.F(k, i, j)),
        (-sign(x * z + z * y), d.F(i, k, j)),
        (-sign(x * y + z * y), d.F(k, j, i)),
        (-sign(x * y + z * x), d.F(j, i, k)),
    ))


def _admissible(A: BiHomSuperalgebra) -> BiHomSuperalgebra:
    return A.with_product(admissible_bracket(A))


def check_six_term_identity(A: BiHomSuperalgebra, i: int, j: int, k: int) -> bool:
    """Admissible-bracket Jacobi sum equals the six-term associator identity at one triple."""
    lhs = jacobi_residual(_admissible(A), i, j, k)
    return lhs == six_term_combination(A, i, j, k)


def s_criterion_residual(A: BiHomSuperalgebra, i: int, j: int, k: int, _d: _Dressing | None = None) -> Vector:
    """``S(x,y,z) - (-1)^{|x||y|+|y||z|+|z||x|} S(x,z,y)``."""
    d = _d or _Dressing(A)
    p = A.parities
    s = sign(p[i] * p[j] + p[j] * p[k] + p[k] * p[i])
    return linalg.sub(s_cyclic(A, i, j, k, d), linalg.scale(Fraction(s), s_cyclic(A, i, k, j, d)))


def g_sum(A: BiHomSuperalgebra, G: SubgroupId, i: int, j: int, k: int,
          action: Action = "elements", _d: _Dressing | None = None) -> Vector:
    d = _d or _Dressing(A)
    p = A.parities
    triple = (i, j, k)
    return _combine(
        (sigma.signature * sign(perm_parity(sigma, p[i], p[j], p[k])), d.sigma_term(sigma, triple, action))
        for sigma in SubgroupId(G).elements
    )


def _triples(n: int):
    return itertools.product(range(n), repeat=3)


def g_check(A: BiHomSuperalgebra, G: SubgroupId, action: Action = "elements") -> IdentityReport:
    G = SubgroupId(G)
    d = _Dressing(A)
    ws = []
    for t in _triples(A.dim):
        r = g_sum(A, G, *t, action=action, _d=d)
        if not linalg.is_zero(r):
            ws.append(Witness(t, r))
    return IdentityReport(f"{G.value}-bihom-associative", tuple(ws))


@dataclass(frozen=True)
class AdmissibilityVerdict:
    jacobi: bool
    s_criterion: bool
    g6: bool

    @property
    def agree(self) -> bool:
        return self.jacobi == self.s_criterion == self.g6


def admissibility_routes(A: BiHomSuperalgebra) -> AdmissibilityVerdict:
    d = _Dressing(A)
    L = _admissible(A)
    n = A.dim
    jac = all(linalg.is_zero(jacobi_residual(L, *t)) for t in _triples(n))
    crit = all(linalg.is_zero(s_criterion_residual(A, *t, _d=d)) for t in _triples(n))
    g6 = all(linalg.is_zero(g_sum(A, SubgroupId.G6, *t, _d=d)) for t in _triples(n))
    return AdmissibilityVerdict(jac, crit, g6)


def check_admissible(A: BiHomSuperalgebra) -> bool:
    """Whether the admissible bracket satisfies the BiHom super-Jacobi identity.

    Decided three ways (Jacobi expansion, S-criterion, full S3 sum); raises
    :class:`InternalInconsistency` if they disagree.
    """
    v = admissibility_routes(A)
    if not v.agree:
        raise InternalInconsistency(f"admissibility routes disagree: {v}")
    return v.jacobi


def expanded_condition(A: BiHomSuperalgebra, G: SubgroupId, i: int, j: int, k: int,
                       action: Action = "elements") -> Vector:
    """Written-out two-sided condition for ``G2`` to ``G5``, as ``lhs - rhs``.

    Evaluated from products directly, independent of :func:`g_sum`. For
    ``action="dressed"`` these are the conditions in terms of the permuted
    dressed triple ``(a^-1 b^2 x, b y, a z)``; for ``"elements"`` the dressing
    stays in place and the elements move.
    """
    G = SubgroupId(G)
    a, b = A.alpha, A.beta
    ainv = A.alpha_inv
    mul = A.mul
    p = A.parities
    px, py, pz = p[i], p[j], p[k]
    ex, ey, ez = A.e(i), A.e(j), A.e(k)

    def d1(v):  # a^-1 b^2
        return ainv(b(b(v)))

    def as_(u, v, w):
        return linalg.sub(mul(a(u), mul(v, w)), mul(mul(u, v), b(w)))

    # left side shared by every item: as(a^-1 b^2 x, b y, a z), written out
    lhs = linalg.sub(mul(b(b(ex)), mul(b(ey), a(ez))), mul(mul(d1(ex), b(ey)), a(b(ez))))
    if action == "dressed":
        X = d1(ex)
        if G is SubgroupId.G2:
            rhs = linalg.scale(Fraction(sign(px * py)),
                               linalg.sub(mul(a(b(ey)), mul(X, a(ez))), mul(mul(b(ey), X), a(b(ez)))))
        elif G is SubgroupId.G3:
            rhs = linalg.scale(Fraction(sign(py * pz)),
                               linalg.sub(mul(b(b(ex)), mul(a(ez), b(ey))), mul(mul(X, a(ez)), b(b(ey)))))
        elif G is SubgroupId.G4:
            rhs = linalg.scale(Fraction(sign(px * py + px * pz + py * pz)),
                               linalg.sub(mul(a(a(ez)), mul(b(ey), X)), mul(mul(a(ez), b(ey)), b(X))))
        elif G is SubgroupId.G5:
            t1 = linalg.sub(mul(a(b(ey)), mul(a(ez), X)), mul(mul(b(ey), a(ez)), b(X)))
            t2 = linalg.sub(mul(a(a(ez)), mul(X, b(ey))), mul(mul(a(ez), X), b(b(ey))))
            rhs = linalg.add(linalg.scale(Fraction(-sign(px * py + px * pz)), t1),
                             linalg.scale(Fraction(-sign(py * pz + px * pz)), t2))
        else:
            raise ValueError("expanded conditions cover G2..G5")
    elif action == "elements":
        def F(u, v, w):
            return as_(d1(u), b(v), a(w))

        if G is SubgroupId.G2:
            rhs = linalg.scale(Fraction(sign(px * py)), F(ey, ex, ez))
        elif G is SubgroupId.G3:
            rhs = linalg.scale(Fraction(sign(py * pz)), F(ex, ez, ey))
        elif G is SubgroupId.G4:
            rhs = linalg.scale(Fraction(sign(px * py + px * pz + py * pz)), F(ez, ey, ex))
        elif G is SubgroupId.G5:
            rhs = linalg.add(linalg.scale(Fraction(-sign(px * py + px * pz)), F(ey, ez, ex)),
                             linalg.scale(Fraction(-sign(py * pz + px * pz)), F(ez, ex, ey)))
        else:
            raise ValueError("expanded conditions cover G2..G5")
    else:
        raise ValueError(f"unknown action {action!r}")
    return linalg.sub(lhs, rhs)


def classify_subgroups(A: BiHomSuperalgebra, action: Action = "elements") -> frozenset[SubgroupId]:
    """Every subgroup ``G`` of S3 for which ``A`` is G-BiHom-associative.

    For ``G2..G5`` the generic signed sum is cross-checked against the written-out
    two-sided condition; any disagreement raises :class:`InternalInconsistency`.
    """
    d = _Dressing(A)
    out = set()
    for G in SubgroupId:
        holds = True
        for t in _triples(A.dim):
            generic = g_sum(A, G, *t, action=action, _d=d)
            if G not in (SubgroupId.G1, SubgroupId.G6):
                # written-out form: lhs - rhs equals the sign of the identity term times the sum
                if expanded_condition(A, G, *t, action=action) != generic:
                    raise InternalInconsistency(f"{G.value} expansion disagrees with the sum at {t}")
            if not linalg.is_zero(generic):
                holds = False
        if holds:
            out.add(G)
    return frozenset(out)
