"""JSON documents with exact scalars.

Rationals are written ``"p/q"``, Gaussian rationals ``"p/q+r/si"``, always in
lowest terms with explicit signs. Only fields whose name ends in ``_float``
hold floating-point values (as strings with 17 significant digits).
"""

from __future__ import annotations

import json
import sys
from typing import Any

from .errors import ParseError
from .exact import ComplexMatrix, G, GaussianRational, Q, Rational, parse_gaussian, parse_rational, render_gaussian, render_rational
from .forms import HermitianForm, QuadraticForm
from . import polynomial as P

KINDS = ("scalar", "matrix", "quadratic-form", "hermitian-form", "group", "result")


def float_field(x: float) -> str:
    return format(float(x), ".17g")


def _scalar_in(x, rational: bool = False):
    if isinstance(x, bool) or isinstance(x, float):
        raise ParseError(f"scalars must be exact strings or integers, got {x!r}")
    if isinstance(x, int):
        return Q(x) if rational else G(x)
    if isinstance(x, str):
        return parse_rational(x) if rational else parse_gaussian(x)
    raise ParseError(f"malformed scalar {x!r}")


def _grid_in(rows, rational: bool = False) -> list[list]:
    if not isinstance(rows, list) or not rows or not all(isinstance(r, list) for r in rows):
        raise ParseError("expected a non-empty list of rows")
    return [[_scalar_in(x, rational) for x in r] for r in rows]


def parse_vector(text: str) -> list[GaussianRational]:
    """``"1+i,0,-1/2"`` → list of Gaussian rationals."""
    parts = [p for p in text.split(",")]
    if not text.strip() or any(not p.strip() for p in parts):
        raise ParseError(f"malformed vector {text!r}")
    return [parse_gaussian(p) for p in parts]


def scalar_doc(x) -> dict:
    if isinstance(x, GaussianRational):
        return {"kind": "scalar", "value": render_gaussian(x)}
    return {"kind": "scalar", "value": render_rational(x)}


def matrix_doc(m: ComplexMatrix) -> dict:
    return {
        "kind": "matrix",
        "rows": m.rows,
        "cols": m.cols,
        "entries": [[render_gaussian(z) for z in r] for r in m.entries],
    }


def quadratic_form_doc(f: QuadraticForm) -> dict:
    return {"kind": "quadratic-form", "dim": f.dim, "gram": [[render_rational(x) for x in r] for r in f.gram]}


def hermitian_form_doc(h: HermitianForm) -> dict:
    return {
        "kind": "hermitian-form",
        "dim": h.dim,
        "gram": [[render_gaussian(z) for z in r] for r in h.gram.entries],
    }


def group_doc(generators, elements=None) -> dict:
    gens = [[[render_gaussian(z) for z in r] for r in g.entries] for g in generators]
    doc: dict[str, Any] = {"kind": "group", "dim": generators[0].rows, "generators": gens}
    if elements is not None:
        doc["elements"] = [[[render_gaussian(z) for z in r] for r in e.entries] for e in elements]
    return doc


def poly_doc(p: P.Poly) -> list[str]:
    """Coefficients, lowest degree first."""
    return [render_gaussian(c) for c in p]


def to_document(value) -> dict:
    if isinstance(value, QuadraticForm):
        return quadratic_form_doc(value)
    if isinstance(value, HermitianForm):
        return hermitian_form_doc(value)
    if isinstance(value, ComplexMatrix):
        return matrix_doc(value)
    if isinstance(value, (GaussianRational, Rational, int)):
        return scalar_doc(value if not isinstance(value, int) else Q(value))
    raise TypeError(f"no document kind for {type(value).__name__}")


def _kind(doc) -> str:
    if not isinstance(doc, dict) or doc.get("kind") not in KINDS:
        raise ParseError("document must be an object with a known 'kind'")
    return doc["kind"]


def matrix_from(doc) -> ComplexMatrix:
    if isinstance(doc, list):
        return ComplexMatrix(_grid_in(doc))
    if _kind(doc) != "matrix":
        raise ParseError(f"expected a matrix document, got {doc['kind']!r}")
    m = ComplexMatrix(_grid_in(doc.get("entries")))
    if ("rows" in doc and doc["rows"] != m.rows) or ("cols" in doc and doc["cols"] != m.cols):
        raise ParseError("declared matrix shape does not match entries")
    return m


def quadratic_form_from(doc) -> QuadraticForm:
    if isinstance(doc, list):
        return QuadraticForm(_grid_in(doc, rational=True))
    if _kind(doc) != "quadratic-form":
        raise ParseError(f"expected a quadratic-form document, got {doc['kind']!r}")
    return QuadraticForm(_grid_in(doc.get("gram"), rational=True))


def hermitian_form_from(doc) -> HermitianForm:
    if isinstance(doc, list):
        return HermitianForm(_grid_in(doc))
    if _kind(doc) != "hermitian-form":
        raise ParseError(f"expected a hermitian-form document, got {doc['kind']!r}")
    return HermitianForm(_grid_in(doc.get("gram")))


def generators_from(doc) -> list[ComplexMatrix]:
    if isinstance(doc, list):
        gens = doc
    else:
        if _kind(doc) != "group":
            raise ParseError(f"expected a group document, got {doc['kind']!r}")
        gens = doc.get("generators")
    if not isinstance(gens, list) or not gens:
        raise ParseError("group document needs a non-empty 'generators' list")
    return [ComplexMatrix(_grid_in(g)) for g in gens]


def parse_document(doc):
    """Inverse of ``to_document`` for value kinds; result documents are returned unchanged."""
    kind = _kind(doc)
    if kind == "scalar":
        return _scalar_in(doc.get("value"))
    if kind == "matrix":
        return matrix_from(doc)
    if kind == "quadratic-form":
        return quadratic_form_from(doc)
    if kind == "hermitian-form":
        return hermitian_form_from(doc)
    if kind == "group":
        return generators_from(doc)
    return doc


def load(path: str):
    try:
        if path == "-":
            return json.load(sys.stdin)
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}: invalid JSON ({exc.msg})") from exc


def dumps(doc: dict) -> str:
    return json.dumps(doc, ensure_ascii=True, separators=(",", ":"))
