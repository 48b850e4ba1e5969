"""Seeded instance generators for the test corpus and the ``generate`` command.

All sampled scalars come from a small set (+-1, +-2, +-1/2) so exact
arithmetic stays cheap. Every generator takes an explicit ``random.Random``.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction
from typing import Callable

from . import fixtures, linalg
from .algebra import BiHomSuperalgebra, BilinearMap, Kind
from .constructions import supercommutator, transport, yau_twist_associative
from .graded_core import EvenMap, GradedSpace, commute, compose_maps, diagonal

SMALL = tuple(Fraction(x) for x in (1, -1, 2, -2)) + (Fraction(1, 2), Fraction(-1, 2))


def small(rng: random.Random) -> Fraction:
    return rng.choice(SMALL)


def random_basis_change(space: GradedSpace, rng: random.Random) -> EvenMap:
    """Even invertible map: a block permutation times a unit lower-triangular block."""
    n = space.dim
    rows = [[linalg.ZERO] * n for _ in range(n)]
    for parity in (0, 1):
        block = list(space.block(parity))
        image = block[:]
        rng.shuffle(image)
        for src, dst in zip(block, image):
            rows[dst][src] = linalg.ONE
    lower = [[linalg.ONE if i == j else linalg.ZERO for j in range(n)] for i in range(n)]
    for i, j in itertools.combinations(range(n), 2):
        if space.parities[i] == space.parities[j] and rng.random() < 0.5:
            lower[j][i] = rng.choice((Fraction(1), Fraction(-1), Fraction(1, 2), Fraction(2)))
    return EvenMap(space, linalg.mat_mul(linalg.matrix(lower), linalg.matrix(rows)))


def _sample_commuting(sample: Callable[[], EvenMap], tries: int = 50) -> tuple[EvenMap, EvenMap]:
    a = sample()
    for _ in range(tries):
        b = sample()
        if commute(a, b):
            return a, b
    return a, a


# Each entry: fixture constructor and a sampler of even automorphisms of it.
def _assoc_families():
    sp4 = GradedSpace((0, 0, 1, 1))
    sp3 = GradedSpace((0, 0, 1))
    sp2o = GradedSpace((0, 1))
    sp2e = GradedSpace((0, 0))
    return {
        "gl(1|1)": (fixtures.gl11, lambda rng: fixtures.gl11_conjugation(small(rng), 1)),
        "grassmann1": (fixtures.grassmann1, lambda rng: diagonal(sp2o, (1, small(rng)))),
        "grassmann2": (fixtures.grassmann2, lambda rng: _grassmann2_auto(sp4, small(rng), small(rng))),
        "dual-numbers": (fixtures.dual_numbers, lambda rng: diagonal(sp2e, (1, small(rng)))),
        "upper-gl(1|1)": (fixtures.upper_gl11, lambda rng: diagonal(sp3, (1, 1, small(rng)))),
    }


def _grassmann2_auto(space: GradedSpace, s: Fraction, t: Fraction) -> EvenMap:
    return diagonal(space, (1, s * t, s, t))


def _aff_auto(rng: random.Random) -> EvenMap:
    sp = GradedSpace((0, 0, 1))
    s, t, u = small(rng), rng.choice((Fraction(0), Fraction(1), Fraction(-1))), small(rng)
    return EvenMap(sp, ((s, t, 0), (0, 1, 0), (0, 0, u)))


def _lie_families():
    sp2 = GradedSpace((0, 1))
    sp3h = GradedSpace((0, 1, 1))
    sp4 = GradedSpace((0, 0, 1, 1))
    return {
        "gl(1|1)-lie": (
            lambda: supercommutator(fixtures.gl11()),
            lambda rng: fixtures.gl11_conjugation(small(rng), 1),
        ),
        "aff1+odd": (fixtures.three_dim_lie_base, _aff_auto),
        "super-heisenberg": (
            fixtures.super_heisenberg,
            lambda rng: (lambda s, u: diagonal(sp3h, (s * u, s, u)))(small(rng), small(rng)),
        ),
        "odd-square": (fixtures.odd_square, lambda rng: (lambda s: diagonal(sp2, (s * s, s)))(small(rng))),
        "abelian-2|2": (
            lambda: BiHomSuperalgebra(BilinearMap.zero(sp4), *[diagonal(sp4, (1,) * 4)] * 2, Kind.LIE, "abelian-2|2"),
            lambda rng: random_basis_change(sp4, rng),
        ),
    }


def associative_instances(count: int, seed: int) -> list[BiHomSuperalgebra]:
    """Twisted associative superalgebras (dim <= 4) in a random even basis."""
    rng = random.Random(seed)
    fams = _assoc_families()
    names = sorted(fams)
    out = []
    for n in range(count):
        name = names[n % len(names)]
        make, auto = fams[name]
        base = make()
        a, b = _sample_commuting(lambda: auto(rng))
        A = yau_twist_associative(base, a, b)
        A = transport(A, random_basis_change(A.space, rng))
        out.append(BiHomSuperalgebra(A.product, A.alpha, A.beta, Kind.ASSOCIATIVE, f"{name}#{n}"))
    return out


def lie_twist_inputs(count: int, seed: int) -> list[tuple[BiHomSuperalgebra, EvenMap, EvenMap]]:
    """(Lie superalgebra, commuting automorphism pair) inputs for the Yau twist."""
    rng = random.Random(seed)
    fams = _lie_families()
    names = sorted(fams)
    out = []
    for n in range(count):
        name = names[n % len(names)]
        make, auto = fams[name]
        L = make()
        if name == "abelian-2|2":
            # any invertible even map works on a zero bracket; pair it with its square
            a = compose_maps(auto(rng), diagonal(L.space, [small(rng) for _ in range(4)]))
            b = compose_maps(a, a)
        else:
            a, b = _sample_commuting(lambda: auto(rng))
        L = BiHomSuperalgebra(L.product, L.alpha, L.beta, Kind.LIE, f"{name}#{n}")
        out.append((L, a, b))
    return out


def random_bihom_superalgebra(dim: int, rng: random.Random, density: float = 0.5) -> BiHomSuperalgebra:
    """A multiplicative BiHom-superalgebra with bijective structure maps.

    Basis vectors carry weights ``(s_i r^n_i, t_i r^m_i)`` for alpha and beta; a
    structure constant may be nonzero only where parities and both weights
    multiply, so both maps are multiplicative by construction. The result is
    then moved to a random even basis.
    """
    parities = tuple(rng.randint(0, 1) for _ in range(dim))
    sp = GradedSpace(parities)
    r = rng.choice((Fraction(2), Fraction(3), Fraction(-2)))
    na = [rng.choice((0, 0, 1, -1)) for _ in range(dim)]
    nb = [rng.choice((0, 0, 1, -1)) for _ in range(dim)]
    entries = []
    for i, j, k in itertools.product(range(dim), repeat=3):
        if parities[k] != (parities[i] + parities[j]) % 2:
            continue
        if na[k] != na[i] + na[j] or nb[k] != nb[i] + nb[j]:
            continue
        if rng.random() < density:
            entries.append((i, j, k, small(rng)))
    alpha = diagonal(sp, [r ** n for n in na])
    beta = diagonal(sp, [r ** n for n in nb])
    A = BiHomSuperalgebra(BilinearMap.from_entries(sp, entries), alpha, beta, Kind.UNCLASSIFIED, f"random-{dim}")
    return transport(A, random_basis_change(sp, rng))


def random_corpus(count: int, seed: int, dims=(2, 3)) -> list[BiHomSuperalgebra]:
    rng = random.Random(seed)
    return [random_bihom_superalgebra(dims[n % len(dims)], rng) for n in range(count)]
