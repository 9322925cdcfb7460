"""Strict symmetric monoidal structure on based spaces.

Braidings are basis swaps; the strict identifications K⊗M = M = M⊗K are
factor-list normalization (the unit object is the empty factor list).
Convolution products and convolution inverses of morphisms live here too.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from .fields import FieldSpec
from .linmap import (
    LinMap,
    Obj,
    ShapeError,
    dims,
    identity,
    iter_basis,
    lin_compose,
    perm_map,
    pipeline,
)
from .solve import kernel_vector, solve_linear


class NotInvertibleError(ValueError):
    """No convolution inverse: carries a reason in {no-solution, one-sided-differ, not-unique}."""

    def __init__(self, reason: str, detail: str = "") -> None:
        self.reason = reason
        super().__init__(f"not convolution invertible ({reason})" + (f": {detail}" if detail else ""))


def _as_objs(x) -> tuple[Obj, ...]:
    if isinstance(x, Obj):
        return (x,)
    return tuple(x)


def braiding(field: FieldSpec, m, n) -> LinMap:
    """The symmetry c_{M,N}: M⊗N → N⊗M, e_i⊗e_j ↦ e_j⊗e_i.

    Either side may be a single Obj or a factor list; an empty list is K.
    """
    ms, ns = _as_objs(m), _as_objs(n)
    objs = ms + ns
    k = len(ms)
    perm = tuple(range(k, len(objs))) + tuple(range(k))
    return perm_map(field, objs, perm)


def unit_map(field: FieldSpec) -> LinMap:
    """id_K, which is also μ_K and δ_K under strictness."""
    return identity(field, ())


def convolution(f: LinMap, g: LinMap, delta: LinMap, mu: LinMap) -> LinMap:
    """The convolution product f∗g = μ ∘ (f⊗g) ∘ δ."""
    return pipeline(mu, (f, g), delta)


def convolution_unit(eps: LinMap, eta: LinMap) -> LinMap:
    """The convolution unit η∘ε from the comagma counit into the magma unit."""
    return lin_compose(eta, eps)


def _split(idx, k):
    return idx[:k], idx[k:]


def _conv_rows(f: LinMap, delta: LinMap, mu: LinMap, unit: LinMap, var_id, g_on_left: bool):
    """Linear equations on g for f∗g = η∘ε (g on right) or g∗f = η∘ε (g on left)."""
    field = f.field
    nb = len(delta.domain)
    half = len(mu.domain) // 2
    # index μ by the slot the known factor f occupies
    mu_by_known: dict = {}
    for pair, col in mu.entries.items():
        a1, a2 = _split(pair, half)
        known, unknown = (a2, a1) if g_on_left else (a1, a2)
        mu_by_known.setdefault(known, []).append((unknown, col))
    rows: dict[tuple, dict] = {}
    rhs: dict[tuple, object] = {}
    for b in iter_basis(delta.domain):
        ucol = unit.entries.get(b, {})
        for aout, v in ucol.items():
            rhs[(b, aout)] = v
        dcol = delta.entries.get(b)
        if not dcol:
            continue
        for bpair, cd in dcol.items():
            b1, b2 = _split(bpair, nb)
            known_b, unknown_b = (b2, b1) if g_on_left else (b1, b2)
            fcol = f.entries.get(known_b)
            if not fcol:
                continue
            for a_known, cf in fcol.items():
                base = field.mul(cd, cf)
                for a_unknown, mcol in mu_by_known.get(a_known, ()):
                    var = var_id(unknown_b, a_unknown)
                    for aout, cm in mcol.items():
                        key = (b, aout)
                        row = rows.setdefault(key, {})
                        term = field.mul(base, cm)
                        acc = row.get(var)
                        new = term if acc is None else field.add(acc, term)
                        if field.is_zero(new):
                            row.pop(var, None)
                        else:
                            row[var] = new
    keys = sorted(set(rows) | set(rhs))
    zero = field.zero()
    return [(rows.get(k, {}), rhs.get(k, zero)) for k in keys]


def convolution_inverse(f: LinMap, delta: LinMap, eps: LinMap, mu: LinMap, eta: LinMap) -> LinMap:
    """Solve f∗g = g∗f = η∘ε exactly for g.

    One linear system covers both sides; the one-sided systems are solved
    first so that a two-sided mismatch is reported as such instead of as a
    generic failure.  Raises NotInvertibleError otherwise.
    """
    field = f.field
    unit = convolution_unit(eps, eta)
    b_dims = dims(f.domain)
    a_dims = dims(f.codomain)
    b_index = {idx: n for n, idx in enumerate(iter_basis(f.domain))}
    a_index = {idx: n for n, idx in enumerate(iter_basis(f.codomain))}
    na = len(a_index)
    nvars = len(b_index) * na

    def var_id(b, a):
        return b_index[b] * na + a_index[a]

    right_rows = _conv_rows(f, delta, mu, unit, var_id, g_on_left=False)
    left_rows = _conv_rows(f, delta, mu, unit, var_id, g_on_left=True)
    status_r, _ = solve_linear(right_rows, nvars, field)
    status_l, _ = solve_linear(left_rows, nvars, field)
    if status_r == "inconsistent" or status_l == "inconsistent":
        side = "right" if status_r == "inconsistent" else "left"
        raise NotInvertibleError("no-solution", f"the {side} convolution system has no solution")
    status, sol = solve_linear(right_rows + left_rows, nvars, field)
    if status == "inconsistent":
        raise NotInvertibleError("one-sided-differ", "left and right inverses exist but disagree")
    if status == "underdetermined":
        raise NotInvertibleError("not-unique", "the two-sided inverse is not unique")
    b_list = list(iter_basis(f.domain))
    a_list = list(iter_basis(f.codomain))
    entries: dict = {}
    for var, val in sol.items():
        if field.is_zero(val):
            continue
        b = b_list[var // na]
        a = a_list[var % na]
        entries.setdefault(b, {})[a] = val
    g = LinMap(field, f.domain, f.codomain, entries)
    # exact cross-check of both sides; a failure here is a solver bug
    if convolution(f, g, delta, mu) != unit or convolution(g, f, delta, mu) != unit:
        raise NotInvertibleError("no-solution", "solver produced a non-inverse (internal error)")
    return g


def linear_kernel_vector(f: LinMap):
    """A nonzero vector killed by f, as a sparse dict, or None if f is injective."""
    field = f.field
    dom = list(iter_basis(f.domain))
    cod_index = {idx: n for n, idx in enumerate(iter_basis(f.codomain))}
    columns = {}
    for j, didx in enumerate(dom):
        col = f.entries.get(didx)
        if col:
            columns[j] = {cod_index[k]: v for k, v in col.items()}
        else:
            columns[j] = {}
    kern = kernel_vector(columns, len(dom), field)
    if kern is None:
        return None
    return {dom[j]: v for j, v in kern.items() if not field.is_zero(v)}


def is_linear_iso(f: LinMap) -> bool:
    """True when f is a bijective linear map (square and injective)."""
    dom = 1
    for d in dims(f.domain):
        dom *= d
    cod = 1
    for d in dims(f.codomain):
        cod *= d
    if dom != cod:
        return False
    return linear_kernel_vector(f) is None
