"""Sparse exact linear maps between tensor products of based spaces.

A map is stored column-wise: each domain basis multi-index with a nonzero
image owns a sparse column from codomain multi-indices to nonzero
coefficients.  Multi-indices carry one position per tensor factor, so
regrouping factors (strictness of the category) never moves data: two factor
lists are interchangeable whenever they flatten to the same ordered basis.
The unit object K is the empty factor list; its only multi-index is ``()``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator, Optional, Sequence

from .fields import FieldSpec


class ShapeError(ValueError):
    """Multi-index arity or range does not match the factor list."""


class CompositionError(ShapeError):
    """Adjacent factor lists do not describe the same based space."""


@dataclass(frozen=True)
class Obj:
    """A finite-dimensional based space: a name and an ordered basis of labels."""

    name: str
    basis: tuple[str, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "basis", tuple(self.basis))
        if not self.basis:
            raise ShapeError(f"object {self.name!r} has an empty basis")
        if len(set(self.basis)) != len(self.basis):
            raise ShapeError(f"object {self.name!r} has duplicate basis labels")

    @property
    def dim(self) -> int:
        return len(self.basis)

    def __repr__(self) -> str:
        return f"Obj({self.name!r}, dim={self.dim})"


Objs = tuple[Obj, ...]
Index = tuple[int, ...]
Vector = dict[Index, object]


def dims(objs: Sequence[Obj]) -> tuple[int, ...]:
    return tuple(o.dim for o in objs)


def iter_basis(objs: Sequence[Obj]) -> Iterator[Index]:
    """All basis multi-indices of a factor list, in lexicographic order."""
    return itertools.product(*(range(o.dim) for o in objs))


def labels_for(objs: Sequence[Obj], idx: Index) -> tuple[str, ...]:
    return tuple(o.basis[i] for o, i in zip(objs, idx))


def flat_labels(objs: Sequence[Obj]) -> tuple[str, ...]:
    """The induced basis of the flattened tensor product, as joined labels."""
    if not objs:
        return ("1",)
    return tuple("*".join(p) for p in itertools.product(*(o.basis for o in objs)))


def _describe(objs: Sequence[Obj]) -> str:
    if not objs:
        return "K"
    return "⊗".join(f"{o.name}[{o.dim}]" for o in objs)


def _index_converter(src: Objs, dst: Objs) -> Optional[Callable[[Index], Index]]:
    """Regroup multi-indices from one factor list to a flatten-equal one.

    Returns None when the groupings already agree; raises CompositionError
    when the flattened based spaces differ.
    """
    if tuple(o.basis for o in src) == tuple(o.basis for o in dst):
        return None
    if flat_labels(src) != flat_labels(dst):
        raise CompositionError(
            f"factor lists describe different based spaces: {_describe(src)} vs {_describe(dst)}"
        )
    sd, dd = dims(src), dims(dst)

    def conv(idx: Index) -> Index:
        flat = 0
        for i, d in zip(idx, sd):
            flat = flat * d + i
        out = []
        for d in reversed(dd):
            out.append(flat % d)
            flat //= d
        return tuple(reversed(out))

    return conv


def _check_index(idx: Index, ds: tuple[int, ...], side: str) -> None:
    if len(idx) != len(ds) or any(not 0 <= i < d for i, d in zip(idx, ds)):
        raise ShapeError(f"{side} multi-index {idx} does not fit factor dims {ds}")


class LinMap:
    """An exact sparse linear map between tensor products of based spaces."""

    __slots__ = ("field", "domain", "codomain", "entries")

    def __init__(self, field: FieldSpec, domain: Iterable[Obj], codomain: Iterable[Obj], entries) -> None:
        self.field = field
        self.domain: Objs = tuple(domain)
        self.codomain: Objs = tuple(codomain)
        dd, cd = dims(self.domain), dims(self.codomain)
        clean: dict[Index, dict[Index, object]] = {}
        for din, col in entries.items():
            din = tuple(din)
            _check_index(din, dd, "domain")
            newcol = {}
            for dout, val in col.items():
                dout = tuple(dout)
                _check_index(dout, cd, "codomain")
                if not field.is_zero(val):
                    newcol[dout] = val
            if newcol:
                if din in clean:
                    raise ShapeError(f"duplicate column for domain index {din}")
                clean[din] = newcol
        self.entries = clean

    def __eq__(self, other) -> bool:
        if not isinstance(other, LinMap):
            return NotImplemented
        return (
            self.field == other.field
            and self.domain == other.domain
            and self.codomain == other.codomain
            and self.entries == other.entries
        )

    __hash__ = None  # mutable payload; identity hashing would be misleading

    def __repr__(self) -> str:
        return (
            f"LinMap({_describe(self.domain)} -> {_describe(self.codomain)}, "
            f"{sum(len(c) for c in self.entries.values())} coefficients)"
        )

    def entry_count(self) -> int:
        return sum(len(c) for c in self.entries.values())

    def apply(self, vec: Vector) -> Vector:
        """Image of a sparse vector; never stores a zero coefficient."""
        F = self.field
        dd = dims(self.domain)
        out: Vector = {}
        for idx, c in vec.items():
            idx = tuple(idx)
            _check_index(idx, dd, "domain")
            if F.is_zero(c):
                continue
            col = self.entries.get(idx)
            if not col:
                continue
            for oidx, w in col.items():
                term = F.mul(c, w)
                acc = out.get(oidx)
                new = term if acc is None else F.add(acc, term)
                if F.is_zero(new):
                    out.pop(oidx, None)
                else:
                    out[oidx] = new
        return out

    def compose(self, other: "LinMap") -> "LinMap":
        """self ∘ other (other applied first), by applying self to each column."""
        if self.field != other.field:
            raise ShapeError("cannot compose maps over different fields")
        conv = _index_converter(other.codomain, self.domain)
        F = self.field
        entries: dict[Index, dict[Index, object]] = {}
        for din, col in other.entries.items():
            image: dict[Index, object] = {}
            for mid, c in col.items():
                key = conv(mid) if conv else mid
                col2 = self.entries.get(key)
                if not col2:
                    continue
                for oidx, w in col2.items():
                    term = F.mul(c, w)
                    acc = image.get(oidx)
                    new = term if acc is None else F.add(acc, term)
                    if F.is_zero(new):
                        image.pop(oidx, None)
                    else:
                        image[oidx] = new
            if image:
                entries[din] = image
        return LinMap(F, other.domain, self.codomain, entries)

    def tensor(self, other: "LinMap") -> "LinMap":
        """Kronecker product; factor lists concatenate, sparsity multiplies."""
        if self.field != other.field:
            raise ShapeError("cannot tensor maps over different fields")
        F = self.field
        entries: dict[Index, dict[Index, object]] = {}
        for d1, c1 in self.entries.items():
            for d2, c2 in other.entries.items():
                col = {}
                for o1, v1 in c1.items():
                    for o2, v2 in c2.items():
                        col[o1 + o2] = F.mul(v1, v2)
                entries[d1 + d2] = col
        return LinMap(F, self.domain + other.domain, self.codomain + other.codomain, entries)


def lin_apply(f: LinMap, vec: Vector) -> Vector:
    return f.apply(vec)


def lin_compose(f: LinMap, g: LinMap) -> LinMap:
    return f.compose(g)


def lin_tensor(f: LinMap, g: LinMap) -> LinMap:
    return f.tensor(g)


def identity(field: FieldSpec, objs: Sequence[Obj]) -> LinMap:
    one = field.one()
    entries = {idx: {idx: one} for idx in iter_basis(objs)}
    return LinMap(field, objs, objs, entries)


def zero_map(field: FieldSpec, domain: Sequence[Obj], codomain: Sequence[Obj]) -> LinMap:
    return LinMap(field, domain, codomain, {})


def perm_map(field: FieldSpec, objs: Sequence[Obj], perm: Sequence[int]) -> LinMap:
    """Basis-permutation map; output factor k is input factor perm[k]."""
    objs = tuple(objs)
    perm = tuple(perm)
    if sorted(perm) != list(range(len(objs))):
        raise ShapeError(f"invalid permutation {perm} for {len(objs)} factors")
    codomain = tuple(objs[p] for p in perm)
    one = field.one()
    entries = {idx: {tuple(idx[p] for p in perm): one} for idx in iter_basis(objs)}
    return LinMap(field, objs, codomain, entries)


def compose(*maps: LinMap) -> LinMap:
    """n-ary composition in classical order: compose(f, g, h) = f ∘ g ∘ h."""
    if not maps:
        raise ShapeError("compose() needs at least one map")
    out = maps[-1]
    for f in reversed(maps[:-1]):
        out = f.compose(out)
    return out


def tensor(*maps: LinMap) -> LinMap:
    """n-ary tensor product in the given factor order."""
    if not maps:
        raise ShapeError("tensor() needs at least one map; use identity(field, ()) for K")
    out = maps[0]
    for f in maps[1:]:
        out = out.tensor(f)
    return out


Stage = tuple[LinMap, ...]


def _apply_stage(maps: Stage, arities: tuple[int, ...], vec: Vector, conv, F: FieldSpec) -> Vector:
    out: Vector = {}
    for idx, c in vec.items():
        if conv:
            idx = conv(idx)
        pos = 0
        cols = []
        dead = False
        for m, k in zip(maps, arities):
            col = m.entries.get(idx[pos : pos + k])
            if not col:
                dead = True
                break
            cols.append(col)
            pos += k
        if dead:
            continue
        for combo in itertools.product(*(col.items() for col in cols)):
            val = c
            oidx: Index = ()
            for k, v in combo:
                oidx += k
                val = F.mul(val, v)
            acc = out.get(oidx)
            new = val if acc is None else F.add(acc, val)
            if F.is_zero(new):
                out.pop(oidx, None)
            else:
                out[oidx] = new
    return out


def pipeline(*stages) -> LinMap:
    """Evaluate a composite written in classical order: pipeline(s_k, …, s_1) = s_k ∘ … ∘ s_1.

    Each stage is a LinMap or a sequence of LinMaps standing for their tensor
    product.  Stages are applied to basis columns blockwise, so the Kronecker
    products of the stage factors are never materialized.
    """
    if not stages:
        raise ShapeError("pipeline() needs at least one stage")
    norm: list[Stage] = []
    for st in stages:
        maps = (st,) if isinstance(st, LinMap) else tuple(st)
        if not maps:
            raise ShapeError("empty pipeline stage")
        norm.append(maps)
    layers = list(reversed(norm))
    F = layers[0][0].field
    for maps in layers:
        for m in maps:
            if m.field != F:
                raise ShapeError("pipeline stages mix fields")
    domain: Objs = sum((m.domain for m in layers[0]), ())
    codomain: Objs = sum((m.codomain for m in layers[-1]), ())
    convs = [None]
    for prev, nxt in zip(layers, layers[1:]):
        out_objs: Objs = sum((m.codomain for m in prev), ())
        in_objs: Objs = sum((m.domain for m in nxt), ())
        convs.append(_index_converter(out_objs, in_objs))
    arities = [tuple(len(m.domain) for m in maps) for maps in layers]
    one = F.one()
    entries: dict[Index, Vector] = {}
    for din in iter_basis(domain):
        vec: Vector = {din: one}
        for maps, conv, ar in zip(layers, convs, arities):
            vec = _apply_stage(maps, ar, vec, conv, F)
            if not vec:
                break
        if vec:
            entries[din] = vec
    return LinMap(F, domain, codomain, entries)


def regroup(f: LinMap, domain: Sequence[Obj], codomain: Sequence[Obj]) -> LinMap:
    """Reinterpret a map on flatten-equal factor lists (strict reassociation)."""
    domain = tuple(domain)
    codomain = tuple(codomain)
    conv_d = _index_converter(f.domain, domain)
    conv_c = _index_converter(f.codomain, codomain)
    if conv_d is None and conv_c is None:
        return LinMap(f.field, domain, codomain, f.entries)
    entries = {}
    for din, col in f.entries.items():
        key = conv_d(din) if conv_d else din
        entries[key] = {(conv_c(k) if conv_c else k): v for k, v in col.items()}
    return LinMap(f.field, domain, codomain, entries)
