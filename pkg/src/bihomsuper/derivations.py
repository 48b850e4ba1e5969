"""beta^k-derivations as exact nullspaces, and the bracket of derivations.

A homogeneous map ``D`` of degree ``d`` is a beta^k-derivation when it commutes
with alpha and beta and

    D[x,y] = [D x, beta^k y] + (-1)^{|x| d} [beta^k x, D y]

on homogeneous ``x, y``; ``beta^-1`` is the zero map. The conditions are linear
in the entries of ``D``, so each parity block is solved as one nullspace.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction

from . import linalg
from .algebra import BiHomSuperalgebra, IdentityReport, Witness, sign
from .graded_core import (
    HomogeneousMap,
    NotBijective,
    compose_maps,
    identity,
    power,
    zero_map,
)
from .linalg import Vector


class NotFixedPoint(ValueError):
    pass


def beta_power(L: BiHomSuperalgebra, k: int) -> HomogeneousMap:
    if k < -1:
        raise ValueError(f"exponent {k} is below -1")
    if k == -1:
        return zero_map(L.space, 0)
    return power(L.beta, k)


def _block_pattern(L: BiHomSuperalgebra, degree: int) -> list[tuple[int, int]]:
    p = L.parities
    n = L.dim
    return [(r, c) for r in range(n) for c in range(n) if p[r] == (p[c] + degree) % 2]


def derivation_residual(L: BiHomSuperalgebra, D: HomogeneousMap, k: int) -> Vector:
    """All defining conditions of a beta^k-derivation stacked into one vector.

    Order: entries of ``D a - a D``, entries of ``D b - b D``, then the Leibniz
    residual for each basis pair ``(i, j)`` in lexicographic order.
    """
    bk = beta_power(L, k)
    out: list[Fraction] = []
    for f in (L.alpha, L.beta):
        out.extend(linalg.sub(compose_maps(D, f).flat(), compose_maps(f, D).flat()))
    p = L.parities
    n = L.dim
    Dcols = [D.column(i) for i in range(n)]
    bcols = [bk.column(i) for i in range(n)]
    for i, j in itertools.product(range(n), repeat=2):
        lhs = D(L.product.basis(i, j))
        t1 = L.mul(Dcols[i], bcols[j])
        t2 = L.mul(bcols[i], Dcols[j])
        r = linalg.sub(lhs, linalg.add(t1, linalg.scale(Fraction(sign(p[i] * D.degree)), t2)))
        out.extend(r)
    return tuple(out)


def is_derivation(L: BiHomSuperalgebra, D: HomogeneousMap, k: int) -> bool:
    return linalg.is_zero(derivation_residual(L, D, k))


def _unit_map(L: BiHomSuperalgebra, r: int, c: int, degree: int) -> HomogeneousMap:
    n = L.dim
    rows = tuple(tuple(linalg.ONE if (a, b) == (r, c) else linalg.ZERO for b in range(n)) for a in range(n))
    return HomogeneousMap(L.space, rows, degree)


def _solve(L: BiHomSuperalgebra, k: int, degree: int) -> tuple[HomogeneousMap, ...]:
    pattern = _block_pattern(L, degree)
    if not pattern:
        return ()
    # the residual is linear in D, so column v of the system is the residual of unit map v
    columns = [derivation_residual(L, _unit_map(L, r, c, degree), k) for r, c in pattern]
    rows = linalg.transpose(tuple(columns))
    kernel = linalg.nullspace(rows, len(pattern))
    n = L.dim
    out = []
    for v in kernel:
        m = [[linalg.ZERO] * n for _ in range(n)]
        for (r, c), x in zip(pattern, v):
            m[r][c] = x
        out.append(HomogeneousMap(L.space, linalg.matrix(m), degree))
    return tuple(out)


@dataclass(frozen=True)
class DerivationSpace:
    k: int
    even_basis: tuple[HomogeneousMap, ...]
    odd_basis: tuple[HomogeneousMap, ...]

    @property
    def dimension(self) -> int:
        return len(self.even_basis) + len(self.odd_basis)

    def basis(self, parity: int) -> tuple[HomogeneousMap, ...]:
        return self.odd_basis if parity % 2 else self.even_basis

    def all(self) -> tuple[HomogeneousMap, ...]:
        return self.even_basis + self.odd_basis

    def contains(self, D: HomogeneousMap) -> bool:
        """Exact span membership of a homogeneous map."""
        if D.is_zero():
            return True
        return linalg.in_span([b.flat() for b in self.basis(D.degree)], D.flat())


def derivation_space(L: BiHomSuperalgebra, k: int) -> DerivationSpace:
    """Basis of beta^k-derivations per parity, in reduced echelon form.

    Coordinates are the row-major entries of ``D``, so bases are canonical.
    """
    beta_power(L, k)
    return DerivationSpace(k, _solve(L, k, 0), _solve(L, k, 1))


def der_bracket(D: HomogeneousMap, D2: HomogeneousMap) -> HomogeneousMap:
    """Super-commutator ``D D2 - (-1)^{|D||D2|} D2 D``."""
    a = compose_maps(D, D2)
    b = compose_maps(D2, D)
    s = Fraction(sign(D.degree * D2.degree))
    return HomogeneousMap(D.space, linalg.mat_sub(a.entries, linalg.mat_scale(s, b.entries)), a.degree)


def check_bracket_closure(L: BiHomSuperalgebra, D: HomogeneousMap, k: int, D2: HomogeneousMap, s: int) -> bool:
    """Whether ``[D, D2]`` is a beta^(k+s)-derivation, for ``D`` a beta^k- and ``D2`` a beta^s-derivation."""
    if k + s < -1:
        raise ValueError("k + s must be at least -1")
    if not (is_derivation(L, D, k) and is_derivation(L, D2, s)):
        raise ValueError("inputs are not derivations of the stated exponents")
    return is_derivation(L, der_bracket(D, D2), k + s)


def tilde_maps(L: BiHomSuperalgebra, D: HomogeneousMap) -> tuple[HomogeneousMap, HomogeneousMap]:
    return compose_maps(L.alpha, D), compose_maps(L.beta, D)


def der_basis(L: BiHomSuperalgebra, max_k: int) -> tuple[HomogeneousMap, ...]:
    """A basis of the span of all beta^k-derivations for ``-1 <= k <= max_k``."""
    spaces = [derivation_space(L, k) for k in range(-1, max_k + 1)]
    out: list[HomogeneousMap] = []
    for parity in (0, 1):
        flats = [D.flat() for S in spaces for D in S.basis(parity)]
        if not flats:
            continue
        reduced, _ = linalg.rref(flats, L.dim ** 2)
        n = L.dim
        for row in reduced:
            out.append(HomogeneousMap(L.space, tuple(tuple(row[r * n:(r + 1) * n]) for r in range(n)), parity))
    return tuple(out)


def verify_der_structure(L: BiHomSuperalgebra, max_k: int) -> tuple[IdentityReport, ...]:
    """Check the BiHom-Lie identities for derivations under ``D -> alpha D``, ``D -> beta D``.

    Runs over a basis of the span of the computed beta^k-derivation spaces,
    ``-1 <= k <= max_k``. Residuals are flattened map entries.
    """
    basis = der_basis(L, max_k)
    m = len(basis)
    at = [tilde_maps(L, D) for D in basis]

    def flat_diff(f, g):
        return linalg.sub(f.flat(), g.flat())

    commute_ws = []
    for i, (a, b) in enumerate(at):
        r = flat_diff(compose_maps(L.alpha, b), compose_maps(L.beta, a))
        if not linalg.is_zero(r):
            commute_ws.append(Witness((i,), r))

    mult_ws = []
    for i, j in itertools.product(range(m), repeat=2):
        br = der_bracket(basis[i], basis[j])
        for label, f, pick in (("alpha", L.alpha, 0), ("beta", L.beta, 1)):
            r = flat_diff(compose_maps(f, br), der_bracket(at[i][pick], at[j][pick]))
            if not linalg.is_zero(r):
                mult_ws.append(Witness((i, j), r, label))

    skew_ws = []
    for i, j in itertools.product(range(m), repeat=2):
        s = Fraction(sign(basis[i].degree * basis[j].degree))
        left = der_bracket(at[i][1], at[j][0])
        right = der_bracket(at[j][1], at[i][0])
        r = linalg.add(left.flat(), linalg.scale(s, right.flat()))
        if not linalg.is_zero(r):
            skew_ws.append(Witness((i, j), r))

    b2 = [compose_maps(L.beta, b) for _, b in at]
    jac_ws = []
    for i, j, k in itertools.product(range(m), repeat=3):
        total = linalg.zero_vector(L.dim ** 2)
        for x, y, z in ((i, j, k), (j, k, i), (k, i, j)):
            inner = der_bracket(at[y][1], at[z][0])
            term = der_bracket(b2[x], inner)
            total = linalg.add(total, linalg.scale(Fraction(sign(basis[x].degree * basis[z].degree)), term.flat()))
        if not linalg.is_zero(total):
            jac_ws.append(Witness((i, j, k), total))

    return (
        IdentityReport("commute", tuple(commute_ws)),
        IdentityReport("multiplicative", tuple(mult_ws)),
        IdentityReport("skew-supersymmetry", tuple(skew_ws)),
        IdentityReport("bihom-super-jacobi", tuple(jac_ws)),
    )


def fixed_points(L: BiHomSuperalgebra) -> tuple[Vector, ...]:
    """Homogeneous basis of ``{a : alpha(a) = a = beta(a)}``, even vectors first."""
    n = L.dim
    I = identity(L.space)
    stacked = linalg.mat_sub(L.alpha.entries, I.entries) + linalg.mat_sub(L.beta.entries, I.entries)
    out = []
    for parity in (0, 1):
        block = L.space.block(parity)
        if not block:
            continue
        sub = tuple(tuple(row[c] for c in block) for row in stacked)
        for v in linalg.nullspace(sub, len(block)):
            full = [linalg.ZERO] * n
            for c, x in zip(block, v):
                full[c] = x
            out.append(tuple(full))
    return tuple(out)


def inner_derivation(L: BiHomSuperalgebra, a, k: int) -> HomogeneousMap:
    """``x -> [a, beta^k x]`` for a homogeneous common fixed point ``a``; degree ``|a|``."""
    if k < 0:
        raise ValueError("inner derivations take k >= 0")
    if not L.alpha_bijective:
        raise NotBijective("alpha")
    if not L.beta_bijective:
        raise NotBijective("beta")
    a = linalg.vector(a)
    if L.alpha(a) != a or L.beta(a) != a:
        raise NotFixedPoint("element is not fixed by both structure maps")
    parity = L.space.vector_parity(a)
    if parity is None:
        if not linalg.is_zero(a):
            raise NotFixedPoint("element is not homogeneous")
        parity = 0
    bk = beta_power(L, k)
    n = L.dim
    cols = [L.mul(a, bk.column(j)) for j in range(n)]
    return HomogeneousMap(L.space, linalg.transpose(tuple(cols)), parity)
