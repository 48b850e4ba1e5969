"""JSON algebra documents with exact rational strings.

A document looks like::

    {
      "name": "example",
      "dim": 2,
      "parities": [0, 1],
      "alpha": [["1", "0"], ["0", "1"]],
      "beta":  [["1", "0"], ["0", "1"]],
      "product": [{"i": 1, "j": 1, "k": 0, "value": "-3/2"}],
      "kind_hint": "lie-candidate"
    }

Structure-map tables are row-major: ``alpha[r][c]`` is the coefficient of
``e_r`` in ``alpha(e_c)``. Omitted product entries are zero.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .algebra import BiHomSuperalgebra, BilinearMap, Kind
from .graded_core import EvenMap, GradedSpace, HomogeneousMap, parity_violations

FRACTION_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?")
FIELDS = ("name", "dim", "parities", "alpha", "beta", "product", "kind_hint")


class ParseError(ValueError):
    """Malformed JSON or a malformed rational string."""


class ValidationError(ValueError):
    """Well-formed input that violates a structural constraint."""


def format_fraction(x: Fraction) -> str:
    return str(Fraction(x))


def parse_fraction(s, where: str) -> Fraction:
    if isinstance(s, bool) or not isinstance(s, (str, int)):
        raise ParseError(f"{where}: expected a rational string, got {json.dumps(s)}")
    text = str(s)
    if not FRACTION_RE.fullmatch(text):
        raise ParseError(f"{where}: {text!r} is not a rational of the form -?N or -?N/D")
    return Fraction(text)


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValidationError(f"{where}: expected an integer, got {json.dumps(value)}")
    return value


def _table(rows, n: int, where: str) -> tuple[tuple[Fraction, ...], ...]:
    if not isinstance(rows, list) or len(rows) != n:
        raise ValidationError(f"{where}: expected {n} rows")
    out = []
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != n:
            raise ValidationError(f"{where}[{r}]: expected {n} entries")
        out.append(tuple(parse_fraction(v, f"{where}[{r}][{c}]") for c, v in enumerate(row)))
    return tuple(out)


def _even_map(rows, space: GradedSpace, where: str) -> EvenMap:
    table = _table(rows, space.dim, where)
    bad = parity_violations(table, space, 0)
    if bad:
        r, c = bad[0]
        raise ValidationError(f"{where}[{r}][{c}]: nonzero entry links e{c} (parity {space.parity(c)}) "
                              f"to e{r} (parity {space.parity(r)}); structure maps must be even")
    return EvenMap(space, table)


def _loads(text: str, source: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{source}:{exc.lineno}:{exc.colno}: {exc.msg}") from None


def algebra_from_document(doc, source: str = "<document>") -> BiHomSuperalgebra:
    if not isinstance(doc, dict):
        raise ValidationError(f"{source}: top level must be an object")
    unknown = sorted(set(doc) - set(FIELDS))
    if unknown:
        raise ValidationError(f"{source}: unknown field(s) {', '.join(unknown)}")
    missing = [f for f in ("dim", "parities", "alpha", "beta") if f not in doc]
    if missing:
        raise ValidationError(f"{source}: missing field(s) {', '.join(missing)}")
    n = _int(doc["dim"], f"{source}: dim")
    if n < 1:
        raise ValidationError(f"{source}: dim must be positive")
    parities = doc["parities"]
    if not isinstance(parities, list) or len(parities) != n or any(p not in (0, 1) or isinstance(p, bool) for p in parities):
        raise ValidationError(f"{source}: parities must be a list of {n} values from {{0, 1}}")
    space = GradedSpace(tuple(parities))
    alpha = _even_map(doc["alpha"], space, f"{source}: alpha")
    beta = _even_map(doc["beta"], space, f"{source}: beta")

    product = doc.get("product", [])
    if not isinstance(product, list):
        raise ValidationError(f"{source}: product must be a list of entries")
    seen: dict[tuple[int, int, int], int] = {}
    entries = []
    for pos, entry in enumerate(product):
        where = f"{source}: product[{pos}]"
        if not isinstance(entry, dict) or set(entry) != {"i", "j", "k", "value"}:
            raise ValidationError(f"{where}: expected an object with keys i, j, k, value")
        i, j, k = (_int(entry[key], f"{where}.{key}") for key in "ijk")
        for key, idx in zip("ijk", (i, j, k)):
            if not 0 <= idx < n:
                raise ValidationError(f"{where}.{key}: index {idx} out of range 0..{n - 1}")
        if (i, j, k) in seen:
            raise ValidationError(f"{where}: duplicates product[{seen[(i, j, k)]}] at ({i},{j},{k})")
        seen[(i, j, k)] = pos
        value = parse_fraction(entry["value"], f"{where}.value")
        if value and parities[k] != (parities[i] + parities[j]) % 2:
            raise ValidationError(f"{where}: c[{i}][{j}][{k}] = {value} breaks evenness "
                                  f"(parities {parities[i]}, {parities[j]} -> {parities[k]})")
        entries.append((i, j, k, value))

    hint = doc.get("kind_hint")
    try:
        kind = Kind.UNCLASSIFIED if hint is None else Kind(hint)
    except ValueError:
        choices = ", ".join(k.value for k in Kind)
        raise ValidationError(f"{source}: kind_hint {hint!r} is not one of {choices}") from None
    name = doc.get("name", "")
    if not isinstance(name, str):
        raise ValidationError(f"{source}: name must be a string")
    return BiHomSuperalgebra(BilinearMap.from_entries(space, entries), alpha, beta, kind, name)


def loads_algebra(text: str, source: str = "<string>") -> BiHomSuperalgebra:
    return algebra_from_document(_loads(text, source), source)


def parse_algebra(path) -> BiHomSuperalgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    return loads_algebra(text, str(path))


def _table_doc(entries) -> list[list[str]]:
    return [[format_fraction(x) for x in row] for row in entries]


def algebra_document(A: BiHomSuperalgebra) -> dict:
    return {
        "name": A.name,
        "dim": A.dim,
        "parities": list(A.parities),
        "alpha": _table_doc(A.alpha.entries),
        "beta": _table_doc(A.beta.entries),
        "product": [
            {"i": i, "j": j, "k": k, "value": format_fraction(v)}
            for i, j, k, v in A.product.entries()
        ],
        "kind_hint": A.kind.value,
    }


def _compact_dumps(doc: dict) -> str:
    # one table row or product entry per line keeps documents diffable
    lines = ["{"]
    items = list(doc.items())
    for pos, (key, value) in enumerate(items):
        comma = "," if pos < len(items) - 1 else ""
        if isinstance(value, list) and value and isinstance(value[0], (list, dict)):
            lines.append(f"  {json.dumps(key)}: [")
            for r, row in enumerate(value):
                tail = "," if r < len(value) - 1 else ""
                lines.append(f"    {json.dumps(row, separators=(', ', ': '))}{tail}")
            lines.append(f"  ]{comma}")
        else:
            lines.append(f"  {json.dumps(key)}: {json.dumps(value, separators=(', ', ': '))}{comma}")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dumps_algebra(A: BiHomSuperalgebra) -> str:
    return _compact_dumps(algebra_document(A))


def serialize_algebra(A: BiHomSuperalgebra, path) -> None:
    Path(path).write_text(dumps_algebra(A), encoding="utf-8")


def parse_map(path, space: GradedSpace, degree: int = 0) -> HomogeneousMap:
    """Read a structure-map file: a bare table, or an object with a ``matrix`` field."""
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: {exc.strerror or exc}") from None
    doc = _loads(text, str(path))
    if isinstance(doc, dict):
        if "matrix" not in doc:
            raise ValidationError(f"{path}: map document needs a matrix field")
        doc = doc["matrix"]
    if degree == 0:
        return _even_map(doc, space, f"{path}: matrix")
    table = _table(doc, space.dim, f"{path}: matrix")
    bad = parity_violations(table, space, degree)
    if bad:
        r, c = bad[0]
        raise ValidationError(f"{path}: matrix[{r}][{c}] breaks degree {degree}")
    return HomogeneousMap(space, table, degree)


def map_document(f: HomogeneousMap) -> dict:
    return {"matrix": _table_doc(f.entries)}
