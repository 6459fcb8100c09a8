"""JSON documents for algebras and the structures riding on them.

The format is deliberately sparse: every block lists only nonzero
coefficients as "p/q" strings, omitted entries are zero, and bracket
entries are stored with i < j only since antisymmetry fixes the rest.
Serialisation is canonical (sorted indices, reduced rationals, two
space indent), so parse and serialize are mutually inverse on canonical
documents and equal documents serialise to identical bytes.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import LieAlgebra
from .errors import (DocumentSyntaxError, LieGeomError, ValidationError)
from .forms import KForm
from .geometry import ComplexStructure, Connection, Metric
from .rationals import format_rational, parse_rational
from .tensors import DOWN, UP, Tensor

FORMAT_VERSION = 1
MAX_DIM = 64

_LABEL_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")

_TOP_KEYS = {"format_version", "dim", "basis", "brackets", "connection",
             "metric", "complex_structure", "forms", "parameters"}


@dataclass(frozen=True)
class FormBlock:
    name: str
    degree: int
    entries: tuple


@dataclass(frozen=True)
class AlgebraDocument:
    """Parsed, validated document contents in canonical order."""

    dim: int
    basis: tuple
    brackets: tuple
    connection: tuple | None = None
    metric: tuple | None = None
    complex_structure: tuple | None = None
    forms: tuple = ()
    parameters: tuple = ()

    # -- materialisation ---------------------------------------------------

    def to_algebra(self):
        table = {}
        for (i, j, k), value in self.brackets:
            table.setdefault((i, j), {})[k] = value
        return LieAlgebra.from_brackets(self.basis, table)

    def to_connection(self, algebra):
        if self.connection is None:
            return None
        entries = {idx: value for idx, value in self.connection}
        n = self.dim
        return Connection(
            algebra, Tensor.from_entries((n, n, n), (DOWN, DOWN, UP), entries))

    def to_metric(self, algebra):
        if self.metric is None:
            return None
        entries = {}
        for (i, j), value in self.metric:
            entries[(i, j)] = value
            entries[(j, i)] = value
        n = self.dim
        return Metric(
            algebra, Tensor.from_entries((n, n), (DOWN, DOWN), entries))

    def to_complex_structure(self, algebra):
        if self.complex_structure is None:
            return None
        entries = {idx: value for idx, value in self.complex_structure}
        n = self.dim
        return ComplexStructure(
            algebra, Tensor.from_entries((n, n), (UP, DOWN), entries))

    def form_block(self, name):
        for block in self.forms:
            if block.name == name:
                return block
        return None

    def to_form(self, name):
        block = self.form_block(name)
        if block is None:
            return None
        return KForm.from_components(
            self.dim, block.degree, dict(block.entries))

    def parameter(self, name):
        for key, value in self.parameters:
            if key == name:
                return value
        return None


def parse(text):
    """Parse and validate a document; errors carry position or field."""
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise DocumentSyntaxError(str(exc), exc.lineno, exc.colno) from exc
    if not isinstance(raw, dict):
        raise ValidationError("top level must be an object", field="document")
    unknown = set(raw) - _TOP_KEYS
    if unknown:
        raise ValidationError(
            f"unknown keys {sorted(unknown)}", field="document")
    version = raw.get("format_version")
    if version != FORMAT_VERSION:
        raise ValidationError(
            f"format_version must be {FORMAT_VERSION}, got {version!r}",
            field="format_version")
    dim = raw.get("dim")
    if not isinstance(dim, int) or isinstance(dim, bool) or not (
            1 <= dim <= MAX_DIM):
        raise ValidationError(
            f"dim must be an integer in 1..{MAX_DIM}, got {dim!r}",
            field="dim")
    basis = raw.get("basis")
    if (not isinstance(basis, list) or len(basis) != dim
            or not all(isinstance(b, str) and _LABEL_RE.match(b)
                       for b in basis)):
        raise ValidationError(
            "basis must list dim identifier-like labels", field="basis")
    if len(set(basis)) != dim:
        raise ValidationError("basis labels must be distinct", field="basis")

    brackets = _entry_list(raw.get("brackets", []), "brackets", 3, dim,
                           ordered="strict_first_two")
    connection = None
    if "connection" in raw:
        connection = _entry_list(raw["connection"], "connection", 3, dim)
    metric = None
    if "metric" in raw:
        metric = _entry_list(raw["metric"], "metric", 2, dim,
                             ordered="weak_pair")
    complex_structure = None
    if "complex_structure" in raw:
        complex_structure = _entry_list(raw["complex_structure"],
                                        "complex_structure", 2, dim)
    forms = []
    raw_forms = raw.get("forms", [])
    if not isinstance(raw_forms, list):
        raise ValidationError("forms must be a list", field="forms")
    for pos, block in enumerate(raw_forms):
        forms.append(_form_block(block, pos, dim))
    if len({f.name for f in forms}) != len(forms):
        raise ValidationError("form names must be distinct", field="forms")
    forms.sort(key=lambda f: f.name)

    parameters = []
    raw_params = raw.get("parameters", {})
    if not isinstance(raw_params, dict):
        raise ValidationError("parameters must be an object",
                              field="parameters")
    for key in sorted(raw_params):
        if not _LABEL_RE.match(key):
            raise ValidationError(f"bad parameter name {key!r}",
                                  field="parameters")
        parameters.append((key, _rational(raw_params[key],
                                          f"parameters.{key}")))

    return AlgebraDocument(dim, tuple(basis), brackets,
                           connection=connection, metric=metric,
                           complex_structure=complex_structure,
                           forms=tuple(forms), parameters=tuple(parameters))


def _rational(value, where):
    try:
        return parse_rational(value)
    except (ValueError, LieGeomError) as exc:
        raise ValidationError(f"bad rational at {where}: {exc}",
                              field=where) from exc


def _entry_list(raw, name, arity, dim, ordered=None):
    if not isinstance(raw, list):
        raise ValidationError(f"{name} must be a list", field=name)
    seen = {}
    for pos, item in enumerate(raw):
        where = f"{name}[{pos}]"
        if (not isinstance(item, list) or len(item) != arity + 1
                or not all(isinstance(i, int) and not isinstance(i, bool)
                           for i in item[:arity])):
            raise ValidationError(
                f"{where} must be {arity} indices plus a coefficient",
                field=where)
        idx = tuple(item[:arity])
        if any(not 0 <= i < dim for i in idx):
            raise ValidationError(f"index out of range at {where}",
                                  field=where)
        if ordered == "strict_first_two" and not idx[0] < idx[1]:
            raise ValidationError(
                f"{where} must have i < j (antisymmetry fills the rest)",
                field=where)
        if ordered == "weak_pair" and not idx[0] <= idx[1]:
            raise ValidationError(f"{where} must have i <= j", field=where)
        if idx in seen:
            raise ValidationError(f"duplicate index {idx} at {where}",
                                  field=where)
        value = _rational(item[arity], where)
        if value != 0:
            seen[idx] = value
    return tuple(sorted(seen.items()))


def _form_block(raw, pos, dim):
    where = f"forms[{pos}]"
    if not isinstance(raw, dict) or set(raw) != {"name", "degree", "entries"}:
        raise ValidationError(
            f"{where} must be an object with name, degree and entries",
            field=where)
    name = raw["name"]
    if not isinstance(name, str) or not _LABEL_RE.match(name):
        raise ValidationError(f"bad form name at {where}", field=where)
    degree = raw["degree"]
    if degree not in (1, 2, 3):
        raise ValidationError(f"form degree must be 1, 2 or 3 at {where}",
                              field=where)
    if not isinstance(raw["entries"], list):
        raise ValidationError(f"{where}.entries must be a list", field=where)
    seen = {}
    for epos, item in enumerate(raw["entries"]):
        ewhere = f"{where}.entries[{epos}]"
        if (not isinstance(item, list) or len(item) != degree + 1
                or not all(isinstance(i, int) and not isinstance(i, bool)
                           for i in item[:degree])):
            raise ValidationError(
                f"{ewhere} must be degree indices plus a coefficient",
                field=ewhere)
        idx = tuple(item[:degree])
        if any(not 0 <= i < dim for i in idx):
            raise ValidationError(f"index out of range at {ewhere}",
                                  field=ewhere)
        if any(not a < b for a, b in zip(idx, idx[1:])):
            raise ValidationError(
                f"{ewhere} must have strictly increasing indices",
                field=ewhere)
        if idx in seen:
            raise ValidationError(f"duplicate index {idx} at {ewhere}",
                                  field=ewhere)
        value = _rational(item[degree], ewhere)
        if value != 0:
            seen[idx] = value
    return FormBlock(name, degree, tuple(sorted(seen.items())))


# -- serialisation ---------------------------------------------------------

def serialize(doc):
    """Canonical JSON text for a document, ending in a newline.

    Keys are sorted and every coefficient entry sits on its own line in
    compact form, so equal documents serialise to identical bytes and
    diffs stay readable.
    """
    payload = {
        "format_version": FORMAT_VERSION,
        "dim": doc.dim,
        "basis": list(doc.basis),
        "brackets": _dump_entries(doc.brackets),
    }
    if doc.connection is not None:
        payload["connection"] = _dump_entries(doc.connection)
    if doc.metric is not None:
        payload["metric"] = _dump_entries(doc.metric)
    if doc.complex_structure is not None:
        payload["complex_structure"] = _dump_entries(doc.complex_structure)
    if doc.forms:
        payload["forms"] = [
            {"name": f.name, "degree": f.degree,
             "entries": _dump_entries(f.entries)}
            for f in doc.forms]
    if doc.parameters:
        payload["parameters"] = {key: format_rational(value)
                                 for key, value in doc.parameters}
    lines = ["{"]
    keys = sorted(payload)
    for pos, key in enumerate(keys):
        value = payload[key]
        tail = "," if pos < len(keys) - 1 else ""
        if isinstance(value, list) and value and isinstance(
                value[0], (list, dict)):
            lines.append(f'  "{key}": [')
            for ipos, item in enumerate(value):
                itail = "," if ipos < len(value) - 1 else ""
                lines.append("    " + json.dumps(item, sort_keys=True)
                             + itail)
            lines.append(f"  ]{tail}")
        else:
            lines.append(f'  "{key}": '
                         + json.dumps(value, sort_keys=True) + tail)
    lines.append("}")
    return "\n".join(lines) + "\n"


def _dump_entries(entries):
    return [[*idx, format_rational(value)]
            for idx, value in sorted(entries)]


# -- document builders -----------------------------------------------------

def document_from(algebra, connection=None, metric=None,
                  complex_structure=None, forms=(), parameters=()):
    """Canonical document for in-memory structures.

    forms is a sequence of (name, KForm) pairs; parameters a sequence of
    (name, rational) pairs.
    """
    brackets = tuple(sorted(
        (idx, value) for idx, value in algebra.c.nonzero_items()
        if idx[0] < idx[1]))
    conn = None
    if connection is not None:
        conn = tuple(sorted(connection.gamma.nonzero_items()))
    met = None
    if metric is not None:
        met = tuple(sorted((idx, value)
                           for idx, value in metric.g.nonzero_items()
                           if idx[0] <= idx[1]))
    cx = None
    if complex_structure is not None:
        cx = tuple(sorted(complex_structure.j.nonzero_items()))
    blocks = []
    for name, form in forms:
        blocks.append(FormBlock(name, form.degree,
                                tuple(sorted(form.components()))))
    blocks.sort(key=lambda f: f.name)
    params = tuple(sorted((key, Fraction(value)) for key, value in
                          dict(parameters).items()))
    return AlgebraDocument(
        algebra.dim, algebra.basis_labels, brackets, connection=conn,
        metric=met, complex_structure=cx, forms=tuple(blocks),
        parameters=params)
