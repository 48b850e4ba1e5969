"""Command-line front end.

Exit codes: 0 when every check passes, 1 when a mathematical check fails
(witnesses are printed), 2 for usage and input errors.
"""

from __future__ import annotations

import argparse
import contextlib
import random
import sys
from typing import Sequence, TextIO

from . import __version__, derivations, generators
from .admissibility import InternalInconsistency, SubgroupId, admissibility_routes, classify_subgroups
from .algebra import (
    BiHomSuperalgebra,
    IdentityReport,
    Kind,
    check_bihom_associative,
    check_bihom_jacobi,
    check_commute,
    check_multiplicative,
    check_skew_supersymmetry,
    classify_structure,
    lie_reports,
)
from .constructions import ConstructionCheckFailed, PreconditionError, supercommutator, yau_twist_associative, yau_twist_lie
from .graded_core import HomogeneousMap, NotBijective, StructuralError
from .io import ParseError, ValidationError, format_fraction, parse_algebra, parse_map, serialize_algebra

SHOWN_WITNESSES = 5

OK, MATH_FAILURE, INPUT_ERROR = 0, 1, 2


class Reporter:
    def __init__(self, out: TextIO, verbose: bool = False):
        self.out = out
        self.verbose = verbose

    def line(self, text: str = "") -> None:
        print(text, file=self.out)

    def header(self, A: BiHomSuperalgebra) -> None:
        name = A.name or "(unnamed)"
        self.line(f"algebra: {name}")
        self.line(f"dim: {A.dim}  parities: {' '.join(map(str, A.parities))}  kind: {A.kind.value}")

    def report(self, r: IdentityReport) -> None:
        if r.holds:
            self.line(f"{r.identity}: PASS")
            return
        self.line(f"{r.identity}: FAIL ({len(r.witnesses)} witnesses)")
        shown = r.witnesses if self.verbose else r.witnesses[:SHOWN_WITNESSES]
        for w in shown:
            label = f" {w.label}" if w.label else ""
            self.line(f"  at {_indices(w.indices)}{label}: residual {_vec(w.residual)}")
        hidden = len(r.witnesses) - len(shown)
        if hidden:
            self.line(f"  ... {hidden} more (use --verbose)")

    def matrix(self, f: HomogeneousMap, indent: str = "    ") -> None:
        cells = [[format_fraction(x) for x in row] for row in f.entries]
        width = max((len(c) for row in cells for c in row), default=1)
        for row in cells:
            self.line(indent + "[" + " ".join(c.rjust(width) for c in row) + "]")


def _indices(idx) -> str:
    return "(" + ",".join(str(i) for i in idx) + ")"


def _vec(v) -> str:
    return "(" + ", ".join(format_fraction(x) for x in v) + ")"


def _beta_k(k: int) -> str:
    return f"beta^{k}"


def cmd_verify(args, rep: Reporter) -> int:
    A = parse_algebra(args.file)
    rep.header(A)
    base = [check_commute(A), check_multiplicative(A)]
    if A.kind is Kind.ASSOCIATIVE:
        suite = base + [check_bihom_associative(A)]
    elif A.kind is Kind.LIE:
        suite = base + [check_skew_supersymmetry(A), check_bihom_jacobi(A)]
    else:
        suite = list(classify_structure(A).reports)
    for r in suite:
        rep.report(r)
    structures = classify_structure(A).structures
    rep.line(f"structures: {', '.join(structures) if structures else 'none'}")
    if A.kind is Kind.UNCLASSIFIED:
        return OK if structures else MATH_FAILURE
    return OK if all(r.holds for r in suite) else MATH_FAILURE


def cmd_classify(args, rep: Reporter) -> int:
    A = parse_algebra(args.file)
    rep.header(A)
    members = classify_subgroups(A, action=args.action)
    rep.line("subgroups: {" + ",".join(G.value for G in SubgroupId if G in members) + "}")
    v = admissibility_routes(A)
    rep.line(f"admissible: jacobi={_yn(v.jacobi)} s-criterion={_yn(v.s_criterion)} g6={_yn(v.g6)}")
    if not v.agree:
        raise InternalInconsistency(f"admissibility routes disagree: {v}")
    return OK


def _yn(b: bool) -> str:
    return "yes" if b else "no"


def cmd_commutator(args, rep: Reporter) -> int:
    A = parse_algebra(args.file)
    rep.header(A)
    L = supercommutator(A)
    serialize_algebra(L, args.output)
    for r in lie_reports(L):
        rep.report(r)
    rep.line(f"wrote {args.output}")
    return OK


def cmd_twist(args, rep: Reporter) -> int:
    A = parse_algebra(args.file)
    a = parse_map(args.alpha, A.space)
    b = parse_map(args.beta, A.space)
    rep.header(A)
    kind = A.kind
    if kind is Kind.UNCLASSIFIED:
        s = classify_structure(A)
        kind = Kind.LIE if s.is_lie else Kind.ASSOCIATIVE if s.is_associative else Kind.UNCLASSIFIED
    if kind is Kind.LIE:
        T = yau_twist_lie(A, a, b)
        reports = lie_reports(T)
    elif kind is Kind.ASSOCIATIVE:
        T = yau_twist_associative(A, a, b)
        reports = [check_commute(T), check_multiplicative(T), check_bihom_associative(T)]
    else:
        raise PreconditionError("input is neither a Lie nor an associative superalgebra",
                                tuple(r for r in classify_structure(A).reports if not r.holds))
    serialize_algebra(T, args.output)
    for r in reports:
        rep.report(r)
    rep.line(f"wrote {args.output}")
    return OK


def _require_lie(A: BiHomSuperalgebra) -> None:
    bad = tuple(r for r in lie_reports(A) if not r.holds)
    if bad:
        raise PreconditionError("input is not a BiHom-Lie superalgebra", bad)


def cmd_derive(args, rep: Reporter) -> int:
    A = parse_algebra(args.file)
    if args.k < -1:
        raise UsageError("--k must be at least -1")
    rep.header(A)
    _require_lie(A)
    S = derivations.derivation_space(A, args.k)
    failures = 0
    for parity, label in ((0, "even"), (1, "odd")):
        basis = S.basis(parity)
        rep.line(f"{_beta_k(args.k)}-derivations, {label}: dimension {len(basis)}")
        for n, D in enumerate(basis, 1):
            ok = derivations.is_derivation(A, D, args.k)
            failures += not ok
            rep.line(f"  D{n}{'' if ok else ' (FAILS re-check)'}:")
            rep.matrix(D)
    rep.line(f"total dimension: {S.dimension}")
    return OK if not failures else MATH_FAILURE


def cmd_inner(args, rep: Reporter) -> int:
    A = parse_algebra(args.file)
    if args.k < 0:
        raise UsageError("--k must be at least 0")
    rep.header(A)
    _require_lie(A)
    points = derivations.fixed_points(A)
    rep.line(f"fixed points: {len(points)}")
    target = derivations.derivation_space(A, args.k + 1)
    failures = 0
    for n, a in enumerate(points, 1):
        D = derivations.inner_derivation(A, a, args.k)
        is_der = derivations.is_derivation(A, D, args.k + 1)
        member = target.contains(D)
        failures += not (is_der and member)
        rep.line(f"  a{n} = {_vec(a)} parity {D.degree}")
        rep.line(f"  ad_{args.k}(a{n}): {_beta_k(args.k + 1)}-derivation {_yn(is_der)}, in computed space {_yn(member)}")
        rep.matrix(D)
    return OK if not failures else MATH_FAILURE


def cmd_check_der(args, rep: Reporter) -> int:
    A = parse_algebra(args.file)
    if args.max_k < -1:
        raise UsageError("--max-k must be at least -1")
    rep.header(A)
    _require_lie(A)
    basis = derivations.der_basis(A, args.max_k)
    even = sum(1 for D in basis if D.degree == 0)
    rep.line(f"derivations for k = -1..{args.max_k}: span dimension {len(basis)} ({even} even, {len(basis) - even} odd)")
    reports = derivations.verify_der_structure(A, args.max_k)
    for r in reports:
        rep.report(r)
    return OK if all(r.holds for r in reports) else MATH_FAILURE


def cmd_generate(args, rep: Reporter) -> int:
    rng = random.Random(args.seed)
    if args.kind == "associative":
        A = generators.associative_instances(5, args.seed)[rng.randrange(5)]
    else:
        if not 1 <= args.dim <= 6:
            raise UsageError("--dim must be between 1 and 6")
        A = generators.random_bihom_superalgebra(args.dim, rng)
    serialize_algebra(A, args.output)
    rep.header(A)
    rep.line(f"wrote {args.output}")
    return OK


class UsageError(ValueError):
    pass


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bihomsuper", description="Exact checks for Z2-graded BiHom algebras.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--verbose", action="store_true", help="print every witness")
    common.add_argument("--seed", type=int, default=0, help="seed for generator-backed commands")
    sub = parser.add_subparsers(dest="command", metavar="command")

    def add(name, func, help_text):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=func)
        return p

    p = add("verify", cmd_verify, "check the BiHom identities")
    p.add_argument("file")
    p = add("classify", cmd_classify, "list the subgroups G of S3 for which the algebra is G-BiHom-associative")
    p.add_argument("file")
    p.add_argument("--action", choices=("elements", "dressed"), default="elements",
                   help="how S3 acts on triples (default: permute elements)")
    p = add("commutator", cmd_commutator, "supercommutator of a BiHom-associative superalgebra")
    p.add_argument("file")
    p.add_argument("-o", "--output", required=True)
    p = add("twist", cmd_twist, "Yau twist by a pair of commuting even maps")
    p.add_argument("file")
    p.add_argument("--alpha", required=True)
    p.add_argument("--beta", required=True)
    p.add_argument("-o", "--output", required=True)
    p = add("derive", cmd_derive, "basis of beta^k-derivations")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p = add("inner", cmd_inner, "inner derivations ad_k(a) over a fixed-point basis")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p = add("check-der", cmd_check_der, "BiHom-Lie identities on the derivation superalgebra")
    p.add_argument("file")
    p.add_argument("--max-k", type=int, required=True)
    p = add("generate", cmd_generate, "write a seeded random instance")
    p.add_argument("--kind", choices=("random", "associative"), default="random")
    p.add_argument("--dim", type=int, default=3)
    p.add_argument("-o", "--output", required=True)
    return parser


def run(argv: Sequence[str] | None = None, out: TextIO | None = None, err: TextIO | None = None) -> int:
    out = sys.stdout if out is None else out
    err = sys.stderr if err is None else err
    parser = build_parser()
    try:
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            args = parser.parse_args(argv)
    except SystemExit as exc:
        return INPUT_ERROR if exc.code else OK
    if not getattr(args, "command", None):
        parser.print_usage(err)
        return INPUT_ERROR
    rep = Reporter(out, args.verbose)
    try:
        return args.func(args, rep)
    except (ParseError, ValidationError, StructuralError, UsageError) as exc:
        print(f"error: {exc}", file=err)
        return INPUT_ERROR
    except (PreconditionError, ConstructionCheckFailed) as exc:
        rep.line(f"FAILED: {exc}")
        for r in exc.reports:
            rep.report(r)
        return MATH_FAILURE
    except NotBijective as exc:
        rep.line(f"FAILED: {exc}")
        return MATH_FAILURE
    except InternalInconsistency as exc:
        rep.line(f"FAILED: internal inconsistency: {exc}")
        return MATH_FAILURE


def main() -> None:
    sys.exit(run())

