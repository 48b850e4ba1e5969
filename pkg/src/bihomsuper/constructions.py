"""Brackets built from products, Yau twists, and change of basis."""

from __future__ import annotations

from fractions import Fraction

from . import linalg
from .algebra import (
    BiHomSuperalgebra,
    BilinearMap,
    IdentityReport,
    Kind,
    check_bihom_associative,
    check_commute,
    check_multiplicative,
    lie_reports,
    sign,
)
from .graded_core import EvenMap, compose_maps, identity, invert_map


class PreconditionError(ValueError):
    def __init__(self, message: str, reports: tuple[IdentityReport, ...] = ()):
        super().__init__(message)
        self.reports = reports


class TwistNotBiHomAssociative(PreconditionError):
    pass


class ConstructionCheckFailed(AssertionError):
    """A construction produced output that fails the identity it should satisfy."""

    def __init__(self, message: str, reports: tuple[IdentityReport, ...] = ()):
        super().__init__(message)
        self.reports = reports


def _failed(reports) -> tuple[IdentityReport, ...]:
    return tuple(r for r in reports if not r.holds)


def admissible_bracket(A: BiHomSuperalgebra) -> BilinearMap:
    """``[x,y] = xy - (-1)^{|x||y|} (a^-1 b y)(a b^-1 x)`` for a = alpha, b = beta."""
    a, b = A.alpha, A.beta
    ainv_b = compose_maps(A.alpha_inv, b)
    a_binv = compose_maps(a, A.beta_inv)
    p = A.parities

    def bracket(i: int, j: int):
        twisted = A.mul(ainv_b.column(j), a_binv.column(i))
        return linalg.sub(A.product.basis(i, j), linalg.scale(Fraction(sign(p[i] * p[j])), twisted))

    return BilinearMap.from_function(A.space, bracket)


def supercommutator(A: BiHomSuperalgebra, verify: bool = True) -> BiHomSuperalgebra:
    """Supercommutator algebra of a BiHom-associative superalgebra with bijective maps.

    With ``verify`` the output is re-checked against the full BiHom-Lie suite and
    :class:`ConstructionCheckFailed` is raised if any identity fails.
    """
    A.alpha_inv, A.beta_inv  # noqa: B018 -- raises NotBijective early
    pre = _failed((check_commute(A), check_multiplicative(A), check_bihom_associative(A)))
    if pre:
        raise PreconditionError("input is not a BiHom-associative superalgebra", pre)
    L = A.with_product(admissible_bracket(A), Kind.LIE, f"commutator({A.name})" if A.name else "")
    if verify:
        bad = _failed(lie_reports(L))
        if bad:
            raise ConstructionCheckFailed("supercommutator is not BiHom-Lie", bad)
    return L


def second_bracket(L: BiHomSuperalgebra) -> BilinearMap:
    """``[x,y]' = [x,y] - (-1)^{|x||y|}[a^-1 b y, a b^-1 x]`` on a BiHom-Lie superalgebra."""
    L.alpha_inv, L.beta_inv  # noqa: B018
    bad = _failed(lie_reports(L))
    if bad:
        raise PreconditionError("input is not a BiHom-Lie superalgebra", bad)
    return admissible_bracket(L)


def _twist_preconditions(base: BiHomSuperalgebra, a: EvenMap, b: EvenMap) -> list[IdentityReport]:
    probe = base.with_maps(a, b)
    return list(_failed((check_commute(probe), check_multiplicative(probe))))


def _is_untwisted(A: BiHomSuperalgebra) -> bool:
    sp = A.space
    return A.alpha == identity(sp) and A.beta == identity(sp)


def yau_twist_lie(L: BiHomSuperalgebra, a: EvenMap, b: EvenMap, verify: bool = True) -> BiHomSuperalgebra:
    """``[x,y]_{a,b} = [a x, b y]`` with structure maps ``a, b``."""
    if not _is_untwisted(L):
        raise PreconditionError("Yau twist needs a Lie superalgebra with identity structure maps")
    bad = _failed(lie_reports(L))
    if bad:
        raise PreconditionError("input bracket is not a Lie superalgebra", bad)
    bad = _twist_preconditions(L, a, b)
    if bad:
        raise PreconditionError("twisting maps must commute and be multiplicative", tuple(bad))
    product = BilinearMap.from_function(L.space, lambda i, j: L.mul(a.column(i), b.column(j)))
    out = BiHomSuperalgebra(product, a, b, Kind.LIE, f"twist({L.name})" if L.name else "")
    if verify:
        bad = _failed(lie_reports(out))
        if bad:
            raise ConstructionCheckFailed("Yau twist is not BiHom-Lie", bad)
    return out


def yau_twist_associative(A: BiHomSuperalgebra, a: EvenMap, b: EvenMap) -> BiHomSuperalgebra:
    """Product ``a(x) b(y)`` with structure maps ``a, b``, returned only if BiHom-associative."""
    if not _is_untwisted(A):
        raise PreconditionError("associative twist needs identity structure maps")
    assoc = check_bihom_associative(A)
    if not assoc.holds:
        raise PreconditionError("input product is not associative", (assoc,))
    bad = _twist_preconditions(A, a, b)
    if bad:
        raise PreconditionError("twisting maps must commute and be multiplicative", tuple(bad))
    product = BilinearMap.from_function(A.space, lambda i, j: A.mul(a.column(i), b.column(j)))
    out = BiHomSuperalgebra(product, a, b, Kind.ASSOCIATIVE, f"twist({A.name})" if A.name else "")
    report = check_bihom_associative(out)
    if not report.holds:
        raise TwistNotBiHomAssociative("twisted product is not BiHom-associative", (report,))
    return out


def transport(A: BiHomSuperalgebra, P: EvenMap) -> BiHomSuperalgebra:
    """The isomorphic copy of ``A`` under the even change of basis ``P``.

    New product ``P m(P^-1 x, P^-1 y)`` and structure maps ``P f P^-1``.
    """
    Pinv = invert_map(P, "change of basis")
    cols = [Pinv.column(i) for i in range(A.dim)]
    product = BilinearMap.from_function(A.space, lambda i, j: P(A.mul(cols[i], cols[j])))

    def conj(f):
        return compose_maps(P, compose_maps(f, Pinv))

    return BiHomSuperalgebra(product, conj(A.alpha), conj(A.beta), A.kind, A.name)
