"""Canonical exact file formats: structures, standalone linear maps, loop
tables, and machine-readable reports.

All documents are JSON.  Coefficients serialize as exact strings ("num/den"
over Q with the denominator omitted when 1, canonical residues over GF(p)),
never as decimal floats.  Entries are sorted by input then output multi-index
in basis order, so load→save is byte-identical on canonical files.

Structure file::

    {"format-version": 1, "field": "Q",
     "object": {"name": ..., "basis": [...]},
     "maps": {"eta": [[[], ["1"], "1"], ...], "mu": ..., "eps": ...,
              "delta": ..., "lambda": ...}}

Linear-map file::

    {"format-version": 1, "field": "Q",
     "domain": [{"name": ..., "basis": [...]}, ...], "codomain": [...],
     "entries": [[[in labels], [out labels], coeff], ...]}

Loop table file::

    {"labels": [...], "table": [[index, ...], ...], "identity": 0,
     "name": optional}
"""

from __future__ import annotations

import json
from typing import Sequence

from .fields import FieldError, FieldSpec, field_from_tag
from .linmap import LinMap, Obj
from .loops import FiniteLoop, NotALoopError, loop_from_table
from .reports import AxiomReport
from .structures import HopfQuasigroupData

FORMAT_VERSION = 1

MAP_KEYS = ("eta", "mu", "eps", "delta", "lambda")


class StructureFileError(ValueError):
    """Malformed document: bad JSON shape, unknown label, zero or duplicate entry."""


def _label_index(obj: Obj) -> dict[str, int]:
    return {label: i for i, label in enumerate(obj.basis)}


def _entries_to_json(m: LinMap) -> list:
    rows = []
    for din in sorted(m.entries):
        col = m.entries[din]
        for dout in sorted(col):
            rows.append(
                [
                    [m.domain[k].basis[i] for k, i in enumerate(din)],
                    [m.codomain[k].basis[i] for k, i in enumerate(dout)],
                    m.field.format(col[dout]),
                ]
            )
    return rows


def _entries_from_json(rows, field: FieldSpec, domain: Sequence[Obj], codomain: Sequence[Obj], where: str):
    dom_idx = [_label_index(o) for o in domain]
    cod_idx = [_label_index(o) for o in codomain]
    entries: dict = {}
    seen = set()
    for row in rows:
        if not isinstance(row, list) or len(row) != 3:
            raise StructureFileError(f"{where}: each entry must be [input, output, coefficient]")
        raw_in, raw_out, raw_coeff = row
        if len(raw_in) != len(domain) or len(raw_out) != len(codomain):
            raise StructureFileError(f"{where}: multi-index arity mismatch in {row}")
        try:
            din = tuple(dom_idx[k][label] for k, label in enumerate(raw_in))
            dout = tuple(cod_idx[k][label] for k, label in enumerate(raw_out))
        except KeyError as exc:
            raise StructureFileError(f"{where}: unknown basis label {exc.args[0]!r}") from None
        if (din, dout) in seen:
            raise StructureFileError(f"{where}: duplicate entry for {raw_in} -> {raw_out}")
        seen.add((din, dout))
        try:
            coeff = field.parse(str(raw_coeff))
        except FieldError as exc:
            raise StructureFileError(f"{where}: {exc}") from None
        if field.is_zero(coeff):
            raise StructureFileError(f"{where}: zero coefficient stored for {raw_in} -> {raw_out}")
        entries.setdefault(din, {})[dout] = coeff
    return entries


def _obj_to_json(obj: Obj) -> dict:
    return {"name": obj.name, "basis": list(obj.basis)}


def _obj_from_json(doc, where: str) -> Obj:
    try:
        return Obj(doc["name"], tuple(doc["basis"]))
    except (KeyError, TypeError, ValueError) as exc:
        raise StructureFileError(f"{where}: bad object description ({exc})") from None


def structure_to_json(s: HopfQuasigroupData) -> dict:
    return {
        "format-version": FORMAT_VERSION,
        "field": s.field.tag,
        "object": _obj_to_json(s.obj),
        "maps": {
            "eta": _entries_to_json(s.eta),
            "mu": _entries_to_json(s.mu),
            "eps": _entries_to_json(s.eps),
            "delta": _entries_to_json(s.delta),
            "lambda": _entries_to_json(s.lam),
        },
    }


def structure_from_json(doc) -> HopfQuasigroupData:
    if not isinstance(doc, dict) or doc.get("format-version") != FORMAT_VERSION:
        raise StructureFileError("missing or unsupported format-version")
    try:
        field = field_from_tag(doc["field"])
    except (KeyError, FieldError) as exc:
        raise StructureFileError(f"bad field: {exc}") from None
    obj = _obj_from_json(doc.get("object", {}), "object")
    maps = doc.get("maps")
    if not isinstance(maps, dict) or set(maps) != set(MAP_KEYS):
        raise StructureFileError(f"maps must have exactly the keys {MAP_KEYS}")
    x = (obj,)
    shapes = {
        "eta": ((), x),
        "mu": (x + x, x),
        "eps": (x, ()),
        "delta": (x, x + x),
        "lambda": (x, x),
    }
    built = {}
    for key, (dom, cod) in shapes.items():
        built[key] = LinMap(field, dom, cod, _entries_from_json(maps[key], field, dom, cod, key))
    return HopfQuasigroupData(
        obj=obj,
        eta=built["eta"],
        mu=built["mu"],
        eps=built["eps"],
        delta=built["delta"],
        lam=built["lambda"],
    )


def linmap_to_json(m: LinMap) -> dict:
    return {
        "format-version": FORMAT_VERSION,
        "field": m.field.tag,
        "domain": [_obj_to_json(o) for o in m.domain],
        "codomain": [_obj_to_json(o) for o in m.codomain],
        "entries": _entries_to_json(m),
    }


def linmap_from_json(doc) -> LinMap:
    if not isinstance(doc, dict) or doc.get("format-version") != FORMAT_VERSION:
        raise StructureFileError("missing or unsupported format-version")
    try:
        field = field_from_tag(doc["field"])
    except (KeyError, FieldError) as exc:
        raise StructureFileError(f"bad field: {exc}") from None
    domain = tuple(_obj_from_json(o, "domain") for o in doc.get("domain", ()))
    codomain = tuple(_obj_from_json(o, "codomain") for o in doc.get("codomain", ()))
    entries = _entries_from_json(doc.get("entries", ()), field, domain, codomain, "entries")
    return LinMap(field, domain, codomain, entries)


def loop_to_json(loop: FiniteLoop) -> dict:
    return {
        "labels": list(loop.elements),
        "table": [list(r) for r in loop.table],
        "identity": loop.identity,
        "name": loop.name,
    }


def loop_from_json(doc) -> FiniteLoop:
    if not isinstance(doc, dict):
        raise StructureFileError("loop document must be an object")
    try:
        return loop_from_table(
            doc["labels"], doc["table"], doc.get("identity", 0), doc.get("name", "L")
        )
    except (KeyError, TypeError) as exc:
        raise StructureFileError(f"bad loop document ({exc})") from None
    except NotALoopError as exc:
        raise StructureFileError(str(exc)) from None


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, ensure_ascii=False) + "\n"


def save_structure(s: HopfQuasigroupData, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(structure_to_json(s)))


def load_structure(path: str) -> HopfQuasigroupData:
    return structure_from_json(_load_json(path))


def save_linmap(m: LinMap, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(linmap_to_json(m)))


def load_linmap(path: str) -> LinMap:
    return linmap_from_json(_load_json(path))


def save_loop(loop: FiniteLoop, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(loop_to_json(loop)))


def load_loop(path: str) -> FiniteLoop:
    return loop_from_json(_load_json(path))


def _load_json(path: str):
    try:
        with open(path, encoding="utf-8") as fh:
            return json.load(fh)
    except OSError as exc:
        raise StructureFileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise StructureFileError(f"{path} is not valid JSON: {exc}") from None


def _entry_to_json(e) -> dict:
    item = {"name": e.name, "pass": e.passed}
    if not e.passed:
        item["witness"] = list(e.witness)
        item["lhs"] = [[list(labels), coeff] for labels, coeff in e.lhs]
        item["rhs"] = [[list(labels), coeff] for labels, coeff in e.rhs]
    return item


def report_to_json(report: AxiomReport, command: str, informational=None) -> dict:
    """Serialize a report with equations in evaluation order (the tag order
    follows the numbering of the identities).  ``informational`` entries are
    classification probes: rendered with witnesses, excluded from "pass"."""
    doc = {
        "tool": "hopfqg",
        "command": command,
        "pass": report.passed,
        "equations": [_entry_to_json(e) for e in report.entries],
    }
    if report.flags:
        doc["flags"] = dict(report.flags)
    if informational:
        doc["flag-equations"] = [_entry_to_json(e) for e in informational]
    return doc
