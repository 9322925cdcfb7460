"""Axiom reports: per-equation pass/fail with an exact witness column.

A failing entry records the first domain basis multi-index (in lexicographic
order) where the two sides differ, together with both exact columns.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .linmap import LinMap, _index_converter, labels_for

ColumnValue = tuple[tuple[tuple[str, ...], str], ...]


@dataclass(frozen=True)
class AxiomEntry:
    name: str
    passed: bool
    witness: Optional[tuple[str, ...]] = None
    lhs: Optional[ColumnValue] = None
    rhs: Optional[ColumnValue] = None

    def __str__(self) -> str:
        if self.passed:
            return f"{self.name}: pass"
        return f"{self.name}: FAIL at {'⊗'.join(self.witness)} (lhs={self.lhs} rhs={self.rhs})"


@dataclass
class AxiomReport:
    entries: tuple[AxiomEntry, ...]
    flags: dict[str, bool] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def entry(self, name: str) -> AxiomEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def failures(self) -> tuple[AxiomEntry, ...]:
        return tuple(e for e in self.entries if not e.passed)

    def __str__(self) -> str:
        lines = [str(e) for e in self.entries]
        lines += [f"{k}: {v}" for k, v in self.flags.items()]
        return "\n".join(lines)


def render_column(codomain, col, fieldspec) -> ColumnValue:
    return tuple(
        (labels_for(codomain, idx), fieldspec.format(col[idx])) for idx in sorted(col)
    )


def compare_maps(name: str, lhs: LinMap, rhs: LinMap) -> AxiomEntry:
    """Exact column-by-column comparison; stops at the first differing column."""
    conv_d = _index_converter(rhs.domain, lhs.domain)
    conv_c = _index_converter(rhs.codomain, lhs.codomain)
    if conv_d is None and conv_c is None:
        rhs_entries = rhs.entries
    else:
        rhs_entries = {}
        for din, col in rhs.entries.items():
            key = conv_d(din) if conv_d else din
            rhs_entries[key] = {(conv_c(k) if conv_c else k): v for k, v in col.items()}
    for din in sorted(set(lhs.entries) | set(rhs_entries)):
        lcol = lhs.entries.get(din, {})
        rcol = rhs_entries.get(din, {})
        if lcol != rcol:
            return AxiomEntry(
                name,
                passed=False,
                witness=labels_for(lhs.domain, din),
                lhs=render_column(lhs.codomain, lcol, lhs.field),
                rhs=render_column(lhs.codomain, rcol, lhs.field),
            )
    return AxiomEntry(name, passed=True)


def evaluate(equations: Iterable[tuple[str, LinMap, LinMap]], flags: Optional[dict] = None) -> AxiomReport:
    entries = tuple(compare_maps(tag, lhs, rhs) for tag, lhs, rhs in equations)
    return AxiomReport(entries, dict(flags or {}))
