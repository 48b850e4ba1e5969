"""Named small superalgebras used as fixtures and generator seeds.

Basis conventions are listed per fixture; indices are 0-based.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import BiHomSuperalgebra, BilinearMap, Kind
from .graded_core import EvenMap, GradedSpace, diagonal, identity


def _bundle(parities, entries, alpha=None, beta=None, kind=Kind.UNCLASSIFIED, name="") -> BiHomSuperalgebra:
    sp = GradedSpace(tuple(parities))
    product = BilinearMap.from_entries(sp, entries)
    alpha = identity(sp) if alpha is None else EvenMap(sp, alpha)
    beta = identity(sp) if beta is None else EvenMap(sp, beta)
    return BiHomSuperalgebra(product, alpha, beta, kind, name)


def zero_product_example(alpha=None, beta=None) -> BiHomSuperalgebra:
    """Even ``x`` and odd ``y`` with every bracket zero; any commuting even maps."""
    return _bundle((0, 1), [], alpha, beta, Kind.LIE, "zero-bracket-2d")


def three_dim_example(mu=3, lam=2) -> BiHomSuperalgebra:
    """``e1, e2`` even, ``e3`` odd; ``[e1,e2] = e1``, ``[e2,e1] = -e1``.

    Structure maps ``alpha = diag(mu, 1, lam)`` and ``beta = diag(mu, 1, -lam)``.
    The reversed bracket ``[e2,e1]`` is the only value compatible with twisted
    skew-supersymmetry; all brackets with ``e3`` vanish.
    """
    mu, lam = Fraction(mu), Fraction(lam)
    if mu == 0 or lam == 0:
        raise ValueError("mu and lambda must be nonzero")
    sp = GradedSpace((0, 0, 1))
    return BiHomSuperalgebra(
        BilinearMap.from_entries(sp, [(0, 1, 0, 1), (1, 0, 0, -1)]),
        diagonal(sp, (mu, 1, lam)),
        diagonal(sp, (mu, 1, -lam)),
        Kind.LIE,
        f"three-dim(mu={mu},lambda={lam})",
    )


def three_dim_lie_base() -> BiHomSuperalgebra:
    """The untwisted bracket of :func:`three_dim_example`: aff(1) plus an odd line."""
    return _bundle((0, 0, 1), [(0, 1, 0, 1), (1, 0, 0, -1)], kind=Kind.LIE, name="aff1+odd")


# gl(1|1) basis: E11, E22 (even), E12, E21 (odd).
GL11_UNITS = ((0, 0), (1, 1), (0, 1), (1, 0))


def gl11() -> BiHomSuperalgebra:
    """Matrix-unit product ``E_ab E_cd = delta_bc E_ad`` on gl(1|1)."""
    entries = []
    for i, (a, b) in enumerate(GL11_UNITS):
        for j, (c, d) in enumerate(GL11_UNITS):
            if b == c:
                entries.append((i, j, GL11_UNITS.index((a, d)), 1))
    return _bundle((0, 0, 1, 1), entries, kind=Kind.ASSOCIATIVE, name="gl(1|1)")


def gl11_conjugation(p, q) -> EvenMap:
    """Conjugation by ``diag(p, q)`` on gl(1|1): ``E12 -> (p/q) E12``, ``E21 -> (q/p) E21``."""
    r = Fraction(p) / Fraction(q)
    return diagonal(GradedSpace((0, 0, 1, 1)), (1, 1, r, 1 / r))


def grassmann1() -> BiHomSuperalgebra:
    """``1`` even, ``t`` odd, ``t^2 = 0``."""
    return _bundle((0, 1), [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], kind=Kind.ASSOCIATIVE, name="grassmann1")


def grassmann2() -> BiHomSuperalgebra:
    """Basis ``1, t1 t2`` (even), ``t1, t2`` (odd) of the exterior algebra on two generators."""
    one, w, t1, t2 = 0, 1, 2, 3
    entries = [
        (one, one, one, 1), (one, w, w, 1), (w, one, w, 1),
        (one, t1, t1, 1), (t1, one, t1, 1), (one, t2, t2, 1), (t2, one, t2, 1),
        (t1, t2, w, 1), (t2, t1, w, -1),
    ]
    return _bundle((0, 0, 1, 1), entries, kind=Kind.ASSOCIATIVE, name="grassmann2")


def dual_numbers() -> BiHomSuperalgebra:
    """Even ``1, x`` with ``x^2 = 0``."""
    return _bundle((0, 0), [(0, 0, 0, 1), (0, 1, 1, 1), (1, 0, 1, 1)], kind=Kind.ASSOCIATIVE, name="dual-numbers")


def upper_gl11() -> BiHomSuperalgebra:
    """Subalgebra of gl(1|1) spanned by ``E11, E22`` (even) and ``E12`` (odd)."""
    units = ((0, 0), (1, 1), (0, 1))
    entries = [
        (i, j, units.index((a, d)), 1)
        for i, (a, b) in enumerate(units)
        for j, (c, d) in enumerate(units)
        if b == c and (a, d) in units
    ]
    return _bundle((0, 0, 1), entries, kind=Kind.ASSOCIATIVE, name="upper-gl(1|1)")


def super_heisenberg() -> BiHomSuperalgebra:
    """``z`` even, ``t1, t2`` odd; ``[t1,t2] = [t2,t1] = z``."""
    return _bundle((0, 1, 1), [(1, 2, 0, 1), (2, 1, 0, 1)], kind=Kind.LIE, name="super-heisenberg")


def odd_square() -> BiHomSuperalgebra:
    """``z`` even, ``t`` odd; ``[t,t] = z``."""
    return _bundle((0, 1), [(1, 1, 0, 1)], kind=Kind.LIE, name="odd-square")
