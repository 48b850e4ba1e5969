"""Acceptance criteria, one check per criterion.

Each ``criterion_N`` returns ``(passed, detail)``. Under pytest every criterion
is a test and a PASS/FAIL line per criterion is printed in the terminal
summary; ``python3 tests/test_acceptance.py`` prints the same lines directly.
All comparisons are exact (zero residual over the rationals).
"""

from __future__ import annotations

import itertools
import sys
from fractions import Fraction
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

import build_golden  # noqa: E402
import corpus  # noqa: E402
import oracles  # noqa: E402
from bihomsuper import fixtures, generators, linalg  # noqa: E402
from bihomsuper.admissibility import (  # noqa: E402
    S3,
    SubgroupId,
    admissibility_routes,
    check_six_term_identity,
    g_check,
    perm_parity,
)
from bihomsuper.algebra import check_bihom_associative, check_bihom_jacobi, lie_reports  # noqa: E402
from bihomsuper.constructions import second_bracket, supercommutator, yau_twist_lie  # noqa: E402
from bihomsuper.derivations import (  # noqa: E402
    der_bracket,
    derivation_space,
    fixed_points,
    inner_derivation,
    is_derivation,
    verify_der_structure,
)
from bihomsuper.graded_core import GradedSpace, compose_maps, diagonal  # noqa: E402

RESULTS: dict[int, tuple[bool, str]] = {}

THREE_DIM_PARAMS = [(3, 2), (1, 1), (-1, Fraction(1, 2))]
IMPLICATION_SEED = 11
IMPLICATION_COUNT = 200
CLOSURE_SEED = 0


def _all_hold(reports) -> bool:
    return all(r.holds for r in reports)


def criterion_1():
    sp = GradedSpace((0, 1))
    zero_cases = [fixtures.zero_product_example()] + [
        fixtures.zero_product_example(diagonal(sp, a).entries, diagonal(sp, b).entries)
        for a, b in (((2, 3), (-1, 1)), ((Fraction(1, 2), 5), (7, -2)))
    ]
    three_dim = [fixtures.three_dim_example(mu, lam) for mu, lam in THREE_DIM_PARAMS]
    bad = [A.name for A in zero_cases + three_dim
           if not _all_hold(lie_reports(A)) or oracles.bihom_lie_residuals(*oracles.raw(A))]
    return not bad, f"{len(zero_cases)} zero-bracket and {len(three_dim)} three-dim instances; failures: {bad or 'none'}"


def criterion_2():
    insts = corpus.associative()
    bad = []
    for A in insts:
        if not check_bihom_associative(A).holds or not _all_hold(lie_reports(supercommutator(A, verify=False))):
            bad.append(A.name)
    return len(insts) >= 20 and not bad, f"{len(insts)} twisted associative instances; failures: {bad or 'none'}"


def criterion_3():
    inputs = generators.lie_twist_inputs(20, corpus.LIE_TWIST_SEED)
    bad = []
    for L, a, b in inputs:
        T = yau_twist_lie(L, a, b, verify=False)
        ab = compose_maps(a, b)
        entrywise = all(T.mul(b.column(i), a.column(j)) == ab(L.product.basis(i, j))
                        for i, j in itertools.product(range(L.dim), repeat=2))
        if not (_all_hold(lie_reports(T)) and entrywise):
            bad.append(L.name)
    return len(inputs) >= 20 and not bad, f"{len(inputs)} twist inputs; failures: {bad or 'none'}"


def criterion_4():
    lies = [L for L in corpus.lie_corpus() if corpus.bijective(L)]
    bad = []
    for L in lies:
        L2 = L.with_product(second_bracket(L))
        doubled = all(
            L2.mul(L.beta.column(i), L.alpha.column(j)) == linalg.scale(Fraction(2), L.mul(L.beta.column(i), L.alpha.column(j)))
            for i, j in itertools.product(range(L.dim), repeat=2)
        )
        if not (check_bihom_jacobi(L2).holds and doubled):
            bad.append(L.name)
    return bool(lies) and not bad, f"{len(lies)} BiHom-Lie corpus instances; failures: {bad or 'none'}"


def criterion_5():
    insts = [A for A in corpus.corpus() if corpus.bijective(A)]
    six_term_bad, route_bad = [], []
    for A in insts:
        if not all(check_six_term_identity(A, *t) for t in itertools.product(range(A.dim), repeat=3)):
            six_term_bad.append(A.name)
        if not admissibility_routes(A).agree:
            route_bad.append(A.name)
    ok = bool(insts) and not six_term_bad and not route_bad
    return ok, f"{len(insts)} instances; six-term failures: {six_term_bad or 'none'}; route disagreements: {route_bad or 'none'}"


def criterion_6():
    insts = [A for A in corpus.corpus() if corpus.bijective(A)]
    insts += generators.random_corpus(IMPLICATION_COUNT, IMPLICATION_SEED, dims=(2, 3))
    counter = []
    for A in insts:
        g6 = g_check(A, SubgroupId.G6).holds
        for G in (SubgroupId.G1, SubgroupId.G2, SubgroupId.G3, SubgroupId.G4, SubgroupId.G5):
            if g_check(A, G).holds and not g6:
                counter.append((A.name, G.value))
    return not counter, f"{len(insts)} instances ({IMPLICATION_COUNT} random); counterexamples: {counter or 'none'}"


def criterion_7():
    triples = list(itertools.product((0, 1), repeat=3))
    bad = [(si.name, sj.name, p) for si, sj in itertools.product(S3, repeat=2) for p in triples
           if perm_parity(si * sj, *p) != (perm_parity(sj, *p) + perm_parity(si, *sj.apply(p))) % 2]
    checked = len(S3) ** 2 * len(triples)
    return checked == 288 and not bad, f"{checked} (pair, parity) cases; violations: {bad or 'none'}"


def closure_instances():
    picked = {}
    for L, a, b in generators.lie_twist_inputs(10, CLOSURE_SEED):
        family = L.name.split("#")[0]
        if family in ("aff1+odd", "gl(1|1)-lie") and family not in picked:
            picked[family] = yau_twist_lie(L, a, b)
    return [fixtures.three_dim_example(3, 2)] + [picked[f] for f in ("aff1+odd", "gl(1|1)-lie")]


def criterion_8():
    bad, pairs = [], 0
    insts = closure_instances()
    for L in insts:
        spaces = {k: derivation_space(L, k) for k in range(-1, 5)}
        for k, s in itertools.product(range(-1, 3), repeat=2):
            if k + s < -1:
                continue
            for D in spaces[k].all():
                for D2 in spaces[s].all():
                    pairs += 1
                    if not spaces[k + s].contains(der_bracket(D, D2)):
                        bad.append((L.name, k, s))
    names = ", ".join(L.name for L in insts)
    return not bad, f"{pairs} bracket pairs over {names}; misses: {sorted(set(bad)) or 'none'}"


def criterion_9():
    three_dim = fixtures.three_dim_example(3, 2)
    abelian = corpus.load("zero_bracket")
    full_end = all(derivation_space(abelian, k).dimension == abelian.dim ** 2 for k in range(0, 3))
    bad = [A.name for A in (three_dim, abelian) if not _all_hold(verify_der_structure(A, 2))]
    return full_end and not bad, f"K=2 on three-dim example and 2-dim abelian (Der = End: {full_end}); failures: {bad or 'none'}"


def criterion_10():
    lies = [L for L in corpus.lie_corpus() if corpus.bijective(L)]
    checked, bad = 0, []
    for L in lies:
        points = fixed_points(L)
        if not points:
            continue
        for k in (0, 1, 2):
            target = derivation_space(L, k + 1)
            for a in points:
                D = inner_derivation(L, a, k)
                checked += 1
                if not (is_derivation(L, D, k + 1) and target.contains(D)):
                    bad.append((L.name, k))
    return checked > 0 and not bad, f"{checked} inner derivations over {len(lies)} instances; failures: {bad or 'none'}"


def criterion_11():
    L = fixtures.three_dim_example(3, 2)
    raw = oracles.raw(L)
    bad, dims = [], []
    for k in (-1, 0, 1):
        S = derivation_space(L, k)
        for parity in (0, 1):
            ours = [list(D.flat()) for D in S.basis(parity)]
            theirs = oracles.derivation_row_space(*raw, k, parity)
            dims.append(len(ours))
            if len(ours) != len(theirs) or not oracles.same_row_space(ours, theirs):
                bad.append((k, parity))
    return not bad, f"dimensions (k, even/odd) {dims}; mismatches: {bad or 'none'}"


def criterion_12():
    import json

    manifest = json.loads((corpus.GOLDEN / "manifest.json").read_text(encoding="utf-8"))
    bad = []
    for case in manifest:
        code, report, written = build_golden.execute(case["args"])
        if code != case["exit"] or report != (corpus.GOLDEN / case["report"]).read_text(encoding="utf-8"):
            bad.append(" ".join(case["args"]))
        elif "document" in case and written != (corpus.GOLDEN / case["document"]).read_text(encoding="utf-8"):
            bad.append(" ".join(case["args"]))
    commands = {case["args"][0] for case in manifest}
    codes = {case["exit"] for case in manifest}
    for args in (["verify", "bad_parity.json"], ["verify", "malformed.json"], ["nope"], ["derive", "three_dim.json", "--k", "-5"]):
        if build_golden.execute(args)[0] != 2:
            bad.append(" ".join(args))
    covered = {"verify", "classify", "derive"} <= commands and codes == {0, 1}
    return covered and not bad, f"{len(manifest)} golden reports plus 4 input-error cases; mismatches: {bad or 'none'}"


CRITERIA = {
    1: ("fixture fidelity", criterion_1),
    2: ("supercommutators of twisted associative instances", criterion_2),
    3: ("Yau twists of Lie superalgebras", criterion_3),
    4: ("second bracket and doubling identity", criterion_4),
    5: ("six-term identity and admissibility route agreement", criterion_5),
    6: ("subgroup implication G => G6", criterion_6),
    7: ("perm_parity composition law", criterion_7),
    8: ("derivation closure", criterion_8),
    9: ("derivation superalgebra identities", criterion_9),
    10: ("inner derivations", criterion_10),
    11: ("derivation spaces vs sympy oracle", criterion_11),
    12: ("CLI golden reports and exit codes", criterion_12),
}


def format_line(n: int, passed: bool, detail: str) -> str:
    title = CRITERIA[n][0]
    return f"criterion {n:2d} [{'PASS' if passed else 'FAIL'}] {title}: {detail}"


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n):
    passed, detail = CRITERIA[n][1]()
    RESULTS[n] = (passed, detail)
    print(format_line(n, passed, detail))
    assert passed, detail


def main() -> int:
    failed = 0
    for n in sorted(CRITERIA):
        passed, detail = CRITERIA[n][1]()
        failed += not passed
        print(format_line(n, passed, detail), flush=True)
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(main())
