import io
import json

import pytest

from bihomsuper.cli import run

import build_golden
import corpus

MANIFEST = json.loads((corpus.GOLDEN / "manifest.json").read_text(encoding="utf-8"))


@pytest.mark.parametrize("case", MANIFEST, ids=lambda c: c["report"].removesuffix(".txt"))
def test_golden_reports(case):
    code, report, written = build_golden.execute(case["args"])
    assert code == case["exit"]
    assert report == (corpus.GOLDEN / case["report"]).read_text(encoding="utf-8")
    if "document" in case:
        assert written == (corpus.GOLDEN / case["document"]).read_text(encoding="utf-8")


def test_golden_contract_examples():
    by_args = {tuple(c["args"]): c for c in MANIFEST}
    assert by_args[("verify", "three_dim.json")]["exit"] == 0
    gl = (corpus.GOLDEN / by_args[("classify", "assoc_gl11.json")]["report"]).read_text(encoding="utf-8")
    assert "subgroups: {G1,G2,G3,G4,G5,G6}" in gl


def _run(args, cwd):
    out, err = io.StringIO(), io.StringIO()
    import os

    old = os.getcwd()
    os.chdir(cwd)
    try:
        code = run(args, out, err)
    finally:
        os.chdir(old)
    return code, out.getvalue(), err.getvalue()


@pytest.mark.parametrize("args", [
    ["verify", "bad_parity.json"],
    ["verify", "malformed.json"],
    ["verify", "missing.json"],
    ["derive", "three_dim.json", "--k", "-2"],
    ["inner", "three_dim.json", "--k", "-1"],
    ["check-der", "three_dim.json", "--max-k", "-3"],
    ["twist", "aff1_odd.json", "--alpha", "three_dim.json", "--beta", "twist_beta.json", "-o", "x.json"],
    ["frobnicate", "three_dim.json"],
    ["derive", "three_dim.json"],
    [],
])
def test_input_errors_exit_2(args, fixture_dir):
    code, _, _ = _run(args, fixture_dir)
    assert code == 2


@pytest.mark.parametrize("args", [
    ["verify", "not_lie.json"],
    ["commutator", "three_dim.json", "-o", "never.json"],
    ["derive", "assoc_gl11.json", "--k", "0"],
    ["check-der", "der_multiplicativity_split.json", "--max-k", "1"],
    ["twist", "three_dim.json", "--alpha", "twist_alpha.json", "--beta", "twist_beta.json", "-o", "never.json"],
])
def test_math_failures_exit_1(args, fixture_dir):
    code, out, _ = _run(args, fixture_dir)
    assert code == 1
    assert "FAIL" in out
    assert not (fixture_dir / "never.json").exists()


def test_verbose_prints_every_witness(fixture_dir):
    _, short, _ = _run(["check-der", "der_multiplicativity_split.json", "--max-k", "1"], fixture_dir)
    _, full, _ = _run(["check-der", "der_multiplicativity_split.json", "--max-k", "1", "--verbose"], fixture_dir)
    assert "3 more" in short
    assert full.count("  at ") == 8


def test_generate_is_seeded(tmp_path):
    for kind in ("random", "associative"):
        a, b = tmp_path / f"{kind}a.json", tmp_path / f"{kind}b.json"
        assert run(["generate", "--kind", kind, "--seed", "9", "-o", str(a)], io.StringIO(), io.StringIO()) == 0
        assert run(["generate", "--kind", kind, "--seed", "9", "-o", str(b)], io.StringIO(), io.StringIO()) == 0
        assert a.read_text() == b.read_text()
        assert run(["verify", str(a)], io.StringIO(), io.StringIO()) in (0, 1)
