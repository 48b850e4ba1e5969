"""The test corpus: committed fixture documents plus seeded generated instances."""

from __future__ import annotations

from functools import lru_cache
from pathlib import Path

from bihomsuper import generators
from bihomsuper.algebra import BiHomSuperalgebra, is_bihom_lie
from bihomsuper.constructions import supercommutator, yau_twist_lie
from bihomsuper.io import parse_algebra

FIXTURES = Path(__file__).parent / "fixtures"
GOLDEN = Path(__file__).parent / "golden"

# documents that are deliberately unreadable
BROKEN = {"bad_parity", "malformed", "twist_alpha", "twist_beta"}

ASSOC_SEED = 2
LIE_TWIST_SEED = 3
RANDOM_SEED = 5


def load(name: str) -> BiHomSuperalgebra:
    return parse_algebra(FIXTURES / f"{name}.json")


def fixture_names() -> list[str]:
    return sorted(p.stem for p in FIXTURES.glob("*.json") if p.stem not in BROKEN)


@lru_cache(maxsize=None)
def associative() -> tuple[BiHomSuperalgebra, ...]:
    return tuple(generators.associative_instances(20, ASSOC_SEED))


@lru_cache(maxsize=None)
def lie_twists() -> tuple[BiHomSuperalgebra, ...]:
    return tuple(yau_twist_lie(L, a, b) for L, a, b in generators.lie_twist_inputs(20, LIE_TWIST_SEED))


@lru_cache(maxsize=None)
def random_instances() -> tuple[BiHomSuperalgebra, ...]:
    return tuple(generators.random_corpus(40, RANDOM_SEED))


@lru_cache(maxsize=None)
def corpus() -> tuple[BiHomSuperalgebra, ...]:
    """Fixtures, twisted associative instances and their commutators, twisted Lie instances, random instances."""
    docs = tuple(load(n) for n in fixture_names())
    commutators = tuple(supercommutator(A) for A in associative()[:10])
    return docs + associative() + commutators + lie_twists() + random_instances()


@lru_cache(maxsize=None)
def lie_corpus() -> tuple[BiHomSuperalgebra, ...]:
    return tuple(A for A in corpus() if is_bihom_lie(A))


def bijective(A: BiHomSuperalgebra) -> bool:
    return A.alpha_bijective and A.beta_bijective
