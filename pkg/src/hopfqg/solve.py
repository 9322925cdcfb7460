"""Exact sparse Gaussian elimination over a FieldSpec.

Rows are dicts from integer variable ids to scalars.  Elimination keeps the
pivot rows fully reduced (Gauss-Jordan), so solutions read off directly.
"""

from __future__ import annotations

from typing import Optional

from .fields import FieldSpec

Row = dict[int, object]


def _reduce_row(row: Row, rhs, pivots, field: FieldSpec):
    while True:
        piv = None
        for v in row:
            if v in pivots:
                piv = v
                break
        if piv is None:
            return row, rhs
        prow, prhs = pivots[piv]
        factor = row[piv]
        for v, c in prow.items():
            new = field.sub(row.get(v, field.zero()), field.mul(factor, c))
            if field.is_zero(new):
                row.pop(v, None)
            else:
                row[v] = new
        rhs = field.sub(rhs, field.mul(factor, prhs))


def solve_linear(rows: list[tuple[Row, object]], nvars: int, field: FieldSpec):
    """Solve a sparse exact linear system.

    Returns ``(status, solution)`` with status one of ``"unique"``,
    ``"underdetermined"`` (solution is the particular one with free variables
    set to zero) or ``"inconsistent"`` (solution is None).
    """
    pivots: dict[int, tuple[Row, object]] = {}
    for row, rhs in rows:
        row = dict(row)
        row, rhs = _reduce_row(row, rhs, pivots, field)
        if not row:
            if not field.is_zero(rhs):
                return "inconsistent", None
            continue
        lead = min(row)
        inv = field.div(field.one(), row[lead])
        row = {v: field.mul(inv, c) for v, c in row.items()}
        rhs = field.mul(inv, rhs)
        for pv, (prow, prhs) in list(pivots.items()):
            if lead in prow:
                f2 = prow[lead]
                newrow = dict(prow)
                for v, c in row.items():
                    new = field.sub(newrow.get(v, field.zero()), field.mul(f2, c))
                    if field.is_zero(new):
                        newrow.pop(v, None)
                    else:
                        newrow[v] = new
                pivots[pv] = (newrow, field.sub(prhs, field.mul(f2, rhs)))
        pivots[lead] = (row, rhs)
    solution = {v: prhs for v, (prow, prhs) in pivots.items()}
    status = "unique" if len(pivots) == nvars else "underdetermined"
    return status, solution


def kernel_vector(columns: dict[int, Row], nvars: int, field: FieldSpec) -> Optional[Row]:
    """A nonzero kernel vector of the map with the given columns, or None.

    ``columns[j]`` is the sparse image of basis vector j, keyed by flattened
    output index.  None means the map is injective.
    """
    rows_by_out: dict[int, Row] = {}
    for j, col in columns.items():
        for out, c in col.items():
            rows_by_out.setdefault(out, {})[j] = c
    pivots: dict[int, tuple[Row, object]] = {}
    zero = field.zero()
    for row in rows_by_out.values():
        row = dict(row)
        row, _ = _reduce_row(row, zero, pivots, field)
        if not row:
            continue
        lead = min(row)
        inv = field.div(field.one(), row[lead])
        row = {v: field.mul(inv, c) for v, c in row.items()}
        for pv, (prow, prhs) in list(pivots.items()):
            if lead in prow:
                f2 = prow[lead]
                newrow = dict(prow)
                for v, c in row.items():
                    new = field.sub(newrow.get(v, zero), field.mul(f2, c))
                    if field.is_zero(new):
                        newrow.pop(v, None)
                    else:
                        newrow[v] = new
                pivots[pv] = (newrow, prhs)
        pivots[lead] = (row, zero)
    if len(pivots) == nvars:
        return None
    free = next(v for v in range(nvars) if v not in pivots)
    kern: Row = {free: field.one()}
    for pv, (prow, _) in pivots.items():
        c = prow.get(free)
        if c is not None and not field.is_zero(c):
            kern[pv] = field.neg(c)
    return kern
